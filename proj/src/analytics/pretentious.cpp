// Copyright 2026 The ffmult Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "analytics/pretentious.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "common/error.hpp"
#include "common/reduce.hpp"

namespace ffm {

namespace {

// log(1 + w) for small w without cancellation.
std::complex<double> log1p_complex(std::complex<double> w) {
  const double re = 0.5 * std::log1p(2.0 * w.real() + std::norm(w));
  const double im = std::atan2(w.imag(), 1.0 + w.real());
  return {re, im};
}

// (1 - x) sum_k c_k x^k - 1 with x = q^{-d} and c_0 = 1. Terms are kept
// while copies * x^k >= 1e-15, copies being the number of primes of degree d.
template <class Coeff>
std::complex<double> local_factor_minus_one(double x, double copies, Coeff&& c) {
  std::complex<double> tail = 0.0;  // sum_{k>=1} c_k x^k
  std::complex<double> S = 1.0;
  double xk = x;
  for (int k = 1; copies * xk >= 1e-15; ++k, xk *= x) {
    const std::complex<double> term = c(k) * xk;
    tail += term;
    S += term;
  }
  return tail - x * S;
}

double degree_term(const MultiplicativeFunction& f, const MultiplicativeFunction& g, int d, bool& enumerated) {
  const FieldContext& ctx = f.context();
  const double w = std::pow(static_cast<double>(ctx.q()), -d);
  if (d <= ctx.cache_degree()) {
    enumerated = true;
    CompensatedSum s;
    for (const auto& p : ctx.irreducibles().of_degree(d)) {
      const double v = 1.0 - (f.at_prime_power(p, 1) * g.at_prime_power(p, 1).conj()).to_complex().real();
      s.add(w * std::max(0.0, v));
    }
    return s.value();
  }
  auto fd = f.degree_rule(d, 1), gd = g.degree_rule(d, 1);
  require(fd && gd, "distance at degree " + std::to_string(d) + " needs the irreducible cache (degree " +
                        std::to_string(ctx.cache_degree()) + ") or functions depending only on degree");
  const double v = 1.0 - (*fd * gd->conj()).to_complex().real();
  return static_cast<double>(irreducible_count(ctx.q(), d)) * w * std::max(0.0, v);
}

}  // namespace

nlohmann::json DistanceResult::to_json() const {
  return {{"distance", distance}, {"squared", squared}, {"N", N}, {"window_low", window_low}, {"method", method}};
}

std::vector<DistanceResult> pretentious_series(const MultiplicativeFunction& f, const MultiplicativeFunction& g,
                                               int N_max, int window_low) {
  require(f.context().q() == g.context().q(), "distance between functions over different fields");
  require(N_max >= 0, "N must be >= 0");
  std::vector<DistanceResult> out;
  CompensatedSum acc;
  bool enumerated = false, by_rule = false;
  for (int d = 1; d <= N_max; ++d) {
    if (d >= window_low) {
      bool e = false;
      acc.add(degree_term(f, g, d, e));
      (e ? enumerated : by_rule) = true;
    }
    DistanceResult r;
    r.squared = std::max(0.0, acc.value());
    r.distance = std::sqrt(r.squared);
    r.N = d;
    r.window_low = window_low;
    r.method = by_rule ? (enumerated ? "enumeration+degree-rule" : "degree-rule") : "enumeration";
    out.push_back(r);
  }
  return out;
}

DistanceResult pretentious_distance(const MultiplicativeFunction& f, const MultiplicativeFunction& g, int N,
                                    int window_low) {
  if (N < 1) return DistanceResult{0.0, 0.0, N, window_low, "enumeration"};
  return pretentious_series(f, g, N, window_low).back();
}

nlohmann::json HayesMinimum::to_json() const {
  return {{"M", M},
          {"min_distance", min_distance},
          {"argmin", argmin.to_json()},
          {"characters_scanned", characters_scanned},
          {"grid", grid}};
}

HayesMinimum min_distance_over_hayes(const MultiplicativeFunction& f, int N, int modulus_bound, int length_bound,
                                     int grid) {
  const ContextPtr& ctx = f.context_ptr();
  require(grid >= 1, "theta grid needs at least one point");
  require(modulus_bound >= 0 && length_bound >= 0, "character bounds must be >= 0");
  require(N >= 1 && N <= ctx->cache_degree(), "N = " + std::to_string(N) + " outside the irreducible cache (1.." +
                                                  std::to_string(ctx->cache_degree()) + ")");
  std::vector<Irreducible> primes;
  for (int d = 1; d <= N; ++d) {
    auto of_d = ctx->irreducibles().of_degree(d);
    primes.insert(primes.end(), of_d.begin(), of_d.end());
  }
  std::vector<std::complex<double>> fp(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i) fp[i] = f.at_prime_power(primes[i], 1).to_complex();

  std::vector<DirichletCharacter> chis;
  for (int d = 0; d <= modulus_bound; ++d) {
    const std::uint64_t lead = checked_pow(ctx->q(), d);
    for (std::uint64_t c = lead; c < 2 * lead; ++c) {
      auto cs = dirichlet_characters(ctx, ctx->codec().decode(c));
      chis.insert(chis.end(), cs.begin(), cs.end());
    }
  }
  auto xis = short_interval_characters(ctx, length_bound);
  const double cost = static_cast<double>(chis.size()) * static_cast<double>(xis.size()) *
                      (static_cast<double>(primes.size()) + static_cast<double>(grid) * N);
  check_budget(cost, ctx->budgets().evaluation, "minimum over Hayes characters");

  std::vector<std::complex<double>> xi_vals(xis.size() * primes.size());
  for (std::size_t b = 0; b < xis.size(); ++b)
    for (std::size_t i = 0; i < primes.size(); ++i) xi_vals[b * primes.size() + i] = xis[b](primes[i].poly).to_complex();
  std::vector<double> count(static_cast<std::size_t>(N) + 1), weight(static_cast<std::size_t>(N) + 1);
  for (int d = 1; d <= N; ++d) {
    count[static_cast<std::size_t>(d)] = static_cast<double>(ctx->irreducibles().count(d));
    weight[static_cast<std::size_t>(d)] = std::pow(static_cast<double>(ctx->q()), -d);
  }
  std::vector<std::vector<std::complex<double>>> twist(static_cast<std::size_t>(grid));
  for (int j = 0; j < grid; ++j) {
    for (int d = 0; d <= N; ++d) twist[static_cast<std::size_t>(j)].push_back(std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>((j * d) % grid) / grid));
  }

  HayesMinimum best;
  best.grid = grid;
  double best_sq = std::numeric_limits<double>::infinity();
  std::size_t best_a = 0, best_b = 0;
  int best_j = 0;
  std::vector<std::complex<double>> S(static_cast<std::size_t>(N) + 1);
  for (std::size_t a = 0; a < chis.size(); ++a) {
    std::vector<std::complex<double>> chi_vals(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) chi_vals[i] = chis[a](primes[i].poly).to_complex();
    for (std::size_t b = 0; b < xis.size(); ++b) {
      std::fill(S.begin(), S.end(), 0.0);
      for (std::size_t i = 0; i < primes.size(); ++i) {
        S[static_cast<std::size_t>(primes[i].degree)] += fp[i] * std::conj(chi_vals[i] * xi_vals[b * primes.size() + i]);
      }
      for (int j = 0; j < grid; ++j) {
        CompensatedSum sq;
        for (int d = 1; d <= N; ++d) {
          const auto du = static_cast<std::size_t>(d);
          sq.add(weight[du] * std::max(0.0, count[du] - (S[du] * twist[static_cast<std::size_t>(j)][du]).real()));
        }
        ++best.characters_scanned;
        if (sq.value() < best_sq) {
          best_sq = sq.value();
          best_a = a;
          best_b = b;
          best_j = j;
        }
      }
    }
  }
  best.min_distance = std::sqrt(std::max(0.0, best_sq));
  best.M = 1.0 + best.min_distance;
  std::optional<DirichletCharacter> chi;
  if (!(chis[best_a].group().degree() == 0)) chi = chis[best_a];
  std::optional<ShortIntervalCharacter> xi;
  if (!xis[best_b].is_trivial()) xi = xis[best_b];
  best.argmin = HayesCharacter(chi, xi, Angle(best_j, static_cast<std::uint64_t>(grid)));
  return best;
}

nlohmann::json HalaszResult::to_json() const {
  return {{"re", value.real()}, {"im", value.imag()}, {"abs", std::abs(value)}, {"method", method},
          {"truncation", truncation}};
}

HalaszResult halasz_product(const MultiplicativeFunction& f, int n) {
  const FieldContext& ctx = f.context();
  require(n >= 0, "n must be >= 0");
  HalaszResult out;
  ComplexSum log_sum;
  bool by_rule = f.depends_only_on_degree();
  if (!by_rule) {
    require(n <= ctx.cache_degree(), "Halasz product up to degree " + std::to_string(n) +
                                         " exceeds the irreducible cache (" + std::to_string(ctx.cache_degree()) + ")");
  }
  for (int d = 1; d <= n; ++d) {
    const double x = std::pow(static_cast<double>(ctx.q()), -d);
    const double copies = static_cast<double>(irreducible_count(ctx.q(), d));
    if (by_rule) {
      auto w = local_factor_minus_one(x, copies, [&](int k) { return f.degree_rule(d, k)->to_complex(); });
      log_sum.add(copies * log1p_complex(w));
    } else {
      for (const auto& p : ctx.irreducibles().of_degree(d)) {
        auto w = local_factor_minus_one(x, copies, [&](int k) { return f.at_prime_power(p, k).to_complex(); });
        log_sum.add(log1p_complex(w));
      }
    }
  }
  out.value = std::exp(log_sum.value());
  out.method = by_rule ? "degree-rule" : "enumeration";
  return out;
}

std::complex<double> mean_value(const MultiplicativeFunction& f, int n, Domain domain) {
  const FieldContext& ctx = f.context();
  require(domain == Domain::Monic || domain == Domain::All, "mean value domain must be monic or all");
  require(n >= 0, "n must be >= 0");
  check_budget(power_estimate(ctx.q(), n), ctx.budgets().enumeration, "mean value at n = " + std::to_string(n));
  const std::uint64_t size = checked_pow(ctx.q(), n);
  const std::uint64_t offset = domain == Domain::Monic ? size : 0;
  auto s = deterministic_sum(size, [&](std::uint64_t i) { return f(ctx.codec().decode(offset + i)); });
  return s / static_cast<double>(size);
}

}  // namespace ffm
