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

// Prints one PASS/FAIL line per acceptance criterion and exits nonzero when
// any criterion fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "algebra/context.hpp"
#include "algebra/irreducible.hpp"
#include "analytics/gowers.hpp"
#include "analytics/pretentious.hpp"
#include "analytics/statistics.hpp"
#include "analytics/tables.hpp"
#include "characters/dirichlet.hpp"
#include "characters/hayes.hpp"
#include "common/error.hpp"
#include "multfn/multiplicative.hpp"
#include "phases/multilinear.hpp"
#include "phases/zeros.hpp"

namespace ffm {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::complex<double> alpha(const GaloisField& F, FieldElement c) {
  return std::polar(1.0, 2 * std::numbers::pi * F.trace(c) / F.p());
}

FunctionTable random_bounded(std::uint32_t q, int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  FunctionTable t{q, n, std::vector<std::complex<double>>(checked_pow(q, n))};
  for (auto& v : t.values) v = std::polar(u(rng), 2 * std::numbers::pi * u(rng));
  return t;
}

PolynomialPhase linear_phase(const FieldPtr& F, const LaurentTruncation& beta, int n) {
  PolynomialPhase P(F, n);
  P.add_term(FieldElement{1}, {beta});
  return P;
}

FieldElement nonzero(const GaloisField& F, std::mt19937_64& rng) {
  return FieldElement{1 + static_cast<std::uint32_t>(rng() % (F.q() - 1))};
}

// 1. Exact linear-phase dichotomy.
Outcome linear_dichotomy() {
  std::mt19937_64 rng(101);
  Outcome o;
  double worst = 0;
  int zero_cases = 0, total = 0;
  for (std::uint32_t q : {2u, 3u}) {
    auto F = GaloisField::build(q, 1);
    PolyCodec codec(q);
    for (int n = 4; n <= 10; ++n) {
      for (int trial = 0; trial < 50; ++trial) {
        LaurentTruncation beta = random_laurent(*F, n, rng, false);
        if (trial % 5 == 0) beta = LaurentTruncation(std::vector<FieldElement>(static_cast<std::size_t>(n)));
        bool vanish = true;
        for (const auto& c : beta.coeffs()) vanish &= c.code == 0;
        std::complex<double> sum = 0;
        for (std::uint64_t code = 0; code < checked_pow(q, n); ++code)
          sum += alpha(*F, linear_form(*F, beta, codec.decode(code)));
        const double expect = vanish ? std::pow(static_cast<double>(q), n) : 0.0;
        worst = std::max(worst, std::abs(sum - expect));
        zero_cases += vanish;
        ++total;
      }
    }
  }
  o.pass = worst <= 1e-9;
  o.detail = std::to_string(total) + " sums (" + std::to_string(zero_cases) + " with vanishing beta), max error " +
             fmt("%.3g", worst);
  return o;
}

// 2. U^2 through the Fourier transform against the literal cube average.
Outcome u2_oracle() {
  std::mt19937_64 rng(202);
  double worst = 0;
  for (auto [q, n] : std::vector<std::pair<std::uint32_t, int>>{{2, 8}, {3, 4}}) {
    auto F = GaloisField::build(q, 1);
    for (int trial = 0; trial < 20; ++trial) {
      auto f = random_bounded(q, n, rng);
      worst = std::max(worst, std::abs(u2_fourier(*F, f) - gowers_norm_cube(*F, f, 2, 1e9)));
    }
  }
  return {worst <= 1e-10, "40 functions, max |u2_fourier - cube U^2| = " + fmt("%.3g", worst)};
}

// 3. U^1 <= U^2 <= U^3.
Outcome gowers_monotone() {
  std::mt19937_64 rng(303);
  auto F = GaloisField::build(3, 1);
  int bad = 0;
  double min_gap = 1e9;
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_bounded(3, 4, rng);
    const double u1 = gowers_norm(*F, f, 1), u2 = gowers_norm(*F, f, 2), u3 = gowers_norm(*F, f, 3);
    bad += !(u1 <= u2 + 1e-9 && u2 <= u3 + 1e-9);
    min_gap = std::min({min_gap, u2 - u1, u3 - u2});
  }
  return {bad == 0, "20 functions on F_3^4, violations " + std::to_string(bad) + ", min gap " + fmt("%.3g", min_gap)};
}

// 4. |E f1(x) f2(x+y) f3(x+2y)| <= U^2(f3).
Outcome ap_inequality() {
  std::mt19937_64 rng(404);
  auto F = GaloisField::build(5, 1);
  int bad = 0;
  double max_ratio = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<FunctionTable> fs;
    for (int j = 0; j < 3; ++j) fs.push_back(random_bounded(5, 3, rng));
    const auto r = ap_correlation(*F, fs);
    const double u2 = gowers_norm(*F, fs[2], 2);
    bad += std::abs(r.mean) > u2 + 1e-9;
    max_ratio = std::max(max_ratio, std::abs(r.mean) / u2);
  }
  return {bad == 0, "50 triples on F_5^3, violations " + std::to_string(bad) + ", max |AP|/U^2 " + fmt("%.3g", max_ratio)};
}

std::shared_ptr<MultilinearForm> random_form(const FieldPtr& F, std::vector<int> dims, int terms, std::mt19937_64& rng) {
  auto Q = std::make_shared<MultilinearForm>(F, dims);
  for (int t = 0; t < terms; ++t) {
    std::vector<LaurentTruncation> slots;
    for (int d : dims) slots.push_back(random_laurent(*F, d, rng, false));
    Q->add_term(nonzero(*F, rng), std::move(slots));
  }
  return Q;
}

// 5. Partition rank r forces bias >= q^{-r}; a direct sum of r blocks has
// bias exactly q^{-r}.
Outcome bias_rank() {
  std::mt19937_64 rng(505);
  int checks = 0, bad = 0;
  double worst_direct = 0;
  for (std::uint32_t q : {2u, 3u}) {
    auto F = GaloisField::build(q, 1);
    const int dim = q == 2 ? 4 : 3;
    for (int r = 1; r <= 3; ++r) {
      const double floor = std::pow(static_cast<double>(q), -r);
      for (int trial = 0; trial < 10; ++trial) {
        // arity 2: each block is A(x_0) B(x_1)
        MultilinearForm Q2(F, {4, 4});
        for (int i = 0; i < r; ++i)
          Q2.add_block(nonzero(*F, rng), {0}, random_form(F, {4}, 1, rng), {1}, random_form(F, {4}, 1, rng));
        // arity 3: a linear slot against a bilinear form in the others
        MultilinearForm Q3(F, {dim, dim, dim});
        for (int i = 0; i < r; ++i) {
          const int alone = static_cast<int>(rng() % 3);
          std::vector<int> rest;
          for (int s = 0; s < 3; ++s)
            if (s != alone) rest.push_back(s);
          Q3.add_block(nonzero(*F, rng), {alone}, random_form(F, {dim}, 1, rng), rest,
                       random_form(F, {dim, dim}, 1 + static_cast<int>(rng() % 2), rng));
        }
        for (const auto* Q : {&Q2, &Q3}) {
          ++checks;
          bad += bias_exhaustive(*Q).bias < floor - 1e-9;
        }
      }
      MultilinearForm direct(F, {4, 4});
      for (int i = 0; i < r; ++i) {
        auto a = std::make_shared<MultilinearForm>(F, std::vector<int>{4});
        a->add_term(FieldElement{1}, {LaurentTruncation::coordinate(i, 4)});
        auto b = std::make_shared<MultilinearForm>(F, std::vector<int>{4});
        b->add_term(FieldElement{1}, {LaurentTruncation::coordinate(i, 4)});
        direct.add_block(FieldElement{1}, {0}, a, {1}, b);
      }
      worst_direct = std::max(worst_direct, std::abs(bias_exhaustive(direct).bias - floor));
    }
  }
  return {bad == 0 && worst_direct <= 1e-9, std::to_string(checks) + " block forms, floor violations " +
                                               std::to_string(bad) + ", direct-sum max |bias - q^-r| " +
                                               fmt("%.3g", worst_direct)};
}

// 6. P_{d^mP} = m! P and base-point independence.
Outcome derivative_identities() {
  std::mt19937_64 rng(606);
  int phases = 0, bad = 0;
  for (std::uint32_t p : {5u, 7u}) {
    auto F = GaloisField::build(p, 1);
    const int n = 3;
    for (int m : {2, 3}) {
      FieldElement fact = F->from_int(1);
      for (int i = 2; i <= m; ++i) fact = F->mul(fact, F->from_int(i));
      for (int trial = 0; trial < 100; ++trial) {
        // degree-m part plus lower-order terms, which d^m annihilates
        PolynomialPhase P(F, n);
        const int terms = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < terms + 2; ++t) {
          const int deg = t < terms ? m : static_cast<int>(rng() % static_cast<std::uint64_t>(m));
          std::vector<LaurentTruncation> factors;
          for (int i = 0; i < deg; ++i) factors.push_back(random_laurent(*F, n + static_cast<int>(rng() % 3), rng, false));
          P.add_term(nonzero(*F, rng), std::move(factors));
        }
        ++phases;
        const auto Q = derivative_form(P, m);
        bool ok = tabulate(diagonal(Q), n) == tabulate(P.top_part().scaled(fact), n);
        for (int probe = 0; probe < 10 && ok; ++probe) {
          std::vector<Polynomial> hs;
          for (int i = 0; i < m; ++i) hs.push_back(random_polynomial(*F, n, rng));
          const FieldElement v = Q(hs);
          for (int g = 0; g < 3; ++g) ok &= iterated_difference(P, hs, random_polynomial(*F, n, rng)) == v;
        }
        bad += !ok;
      }
    }
  }
  return {bad == 0, std::to_string(phases) + " phases over F_5 and F_7, failures " + std::to_string(bad)};
}

// 7. Necklace counts against sieve enumeration of every monic polynomial.
Outcome irreducible_counts() {
  int pairs = 0, bad = 0;
  std::uint32_t largest = 0;
  for (std::uint32_t q = 2; q <= GaloisField::kMaxOrder; ++q) {
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; d <= q; ++d)
      if (q % d == 0) {
        p = d;
        break;
      }
    std::uint32_t x = q;
    int r = 0;
    while (x % p == 0) x /= p, ++r;
    if (x != 1) continue;
    auto F = GaloisField::build(p, r);
    int top = 0;
    while (power_estimate(q, top + 1) <= 1e6) ++top;
    IrreducibleTable table(*F, top);
    for (int d = 1; d <= top; ++d) {
      ++pairs;
      bad += table.count(d) != irreducible_count(q, d);
    }
    largest = q;
  }
  return {bad == 0, std::to_string(pairs) + " (q, d) pairs with q <= " + std::to_string(largest) +
                        " (largest supported field), mismatches " + std::to_string(bad)};
}

// 8. D(mu, 1, N) over F_2 by enumeration of every irreducible of degree <= 20.
Outcome pretentious_growth() {
  auto ctx = FieldContext::create(2, 1, 20);
  auto mu = MultiplicativeFunction::builtin(ctx, "moebius");
  auto one = MultiplicativeFunction::builtin(ctx, "one");
  const auto s = pretentious_series(mu, one, 20);
  bool increasing = true;
  for (std::size_t i = 1; i < s.size(); ++i) increasing &= s[i].distance > s[i - 1].distance;
  const double d1 = s[0].distance, d5 = s[4].distance, d20 = s[19].distance;
  const bool pass = std::abs(d1 - std::sqrt(2.0)) <= 1e-9 && increasing && d20 > d5 + 0.5 && s[19].method == "enumeration";
  return {pass, "D(1) = " + fmt("%.12f", d1) + ", D(5) = " + fmt("%.6f", d5) + ", D(20) = " + fmt("%.6f", d20) +
                    (increasing ? ", strictly increasing" : ", NOT strictly increasing") + ", method " + s[19].method};
}

// 9. Euler product of 1 and the mean of e_theta over monic polynomials.
Outcome halasz() {
  double worst_p = 0, worst_m = 0;
  for (std::uint32_t q : {2u, 3u}) {
    auto ctx = FieldContext::create(q, 1);
    auto one = MultiplicativeFunction::builtin(ctx, "one");
    for (int n = 0; n <= 20; ++n) worst_p = std::max(worst_p, std::abs(halasz_product(one, n).value - 1.0));
  }
  std::mt19937_64 rng(909);
  auto ctx = FieldContext::create(2, 1);
  for (int t = 0; t < 10; ++t) {
    const Angle theta(static_cast<std::int64_t>(rng() % 1000003), 1000003);
    auto e = MultiplicativeFunction::from_character(ctx, HayesCharacter::twist_only(theta));
    for (int n = 0; n <= 10; ++n) {
      const auto expect = std::polar(1.0, 2 * std::numbers::pi * theta.as_double() * n);
      worst_m = std::max(worst_m, std::abs(mean_value(e, n, Domain::Monic) - expect));
    }
  }
  return {worst_p <= 1e-9 && worst_m <= 1e-12,
          "max |P(1,n) - 1| = " + fmt("%.3g", worst_p) + " (n <= 20), max mean-value error " + fmt("%.3g", worst_m)};
}

// 10. Turan-Kubilius ratio for q = 2, W = 1, H = 5.
Outcome turan_kubilius_check() {
  auto ctx = FieldContext::create(2, 1);
  // direct computation at n = 8
  const int n0 = 8;
  std::vector<Polynomial> window;
  double A = 0;
  for (int d = 2; d < 5; ++d)
    for (const auto& p : ctx->irreducibles().of_degree(d)) {
      window.push_back(p.poly);
      A += std::pow(2.0, -d);
    }
  double lhs = 0;
  for (std::uint64_t c = 0; c < checked_pow(2, n0); ++c) {
    const Polynomial g = ctx->codec().decode(c);
    int omega = 0;
    for (const auto& p : window) omega += ctx->ring().mod(g, p).is_zero();
    lhs += (omega - A) * (omega - A);
  }
  const double direct = lhs / (A * 256.0);
  bool pass = std::abs(turan_kubilius(*ctx, n0, 1, 5).ratio - direct) <= 1e-12 && direct <= 5;
  double worst = 0;
  for (int n = 8; n <= 14; ++n) worst = std::max(worst, turan_kubilius(*ctx, n, 1, 5).ratio);
  pass &= worst <= 5;
  return {pass, "direct ratio at n = 8: " + fmt("%.6f", direct) + ", max ratio over n = 8..14: " + fmt("%.6f", worst)};
}

// 11. Katai statistic at q = 2, n = 14, k = 3.
Outcome katai() {
  auto ctx = FieldContext::create(2, 1);
  const int n = 14, k = 3;
  // every depth nonzero over F_2 means every coefficient is 1
  const LaurentTruncation beta(std::vector<FieldElement>(static_cast<std::size_t>(n), FieldElement{1}));
  const auto f = tabulate_phase_character(linear_phase(ctx->field_ptr(), beta, n), n);
  const auto one = constant_table(2, n, 1.0);
  const auto lin = katai_statistic(*ctx, f, k);
  const auto triv = katai_statistic(*ctx, one, k);
  const auto lin_pp = katai_statistic(*ctx, f, k, PairSet::IrreducibleWindow, KataiNormalization::PerPair);
  const auto triv_pp = katai_statistic(*ctx, one, k, PairSet::IrreducibleWindow, KataiNormalization::PerPair);
  const auto members = pair_set_members(*ctx, PairSet::IrreducibleWindow, k);
  const double share = 1.0 / static_cast<double>(members.size());
  const bool pass = lin.statistic <= 0.25 && triv.statistic >= 0.9 && std::abs(lin.diagonal_share - share) < 1e-15 &&
                    std::abs(share - 0.2) < 1e-15;
  return {pass, "linear phase " + fmt("%.6f", lin.statistic) + " (<= 0.25 required), f = 1 " +
                    fmt("%.6f", triv.statistic) + " (>= 0.9 required), diagonal share " + fmt("%.3f", share) +
                    "; per-pair normalisation: linear " + fmt("%.6f", lin_pp.statistic) + ", f = 1 " +
                    fmt("%.6f", triv_pp.statistic)};
}

// 12. Correlation of a random +-1 function with a quadratic phase, n = 6..14.
Outcome decay_exhibit() {
  auto ctx = FieldContext::create(2, 1, 13);
  auto nu = MultiplicativeFunction::random_on_irreducibles(ctx, 1, RandomValues::PlusMinusOne);
  std::mt19937_64 rng(1);
  const int top = 14;
  PolynomialPhase P(ctx->field_ptr(), top);
  P.add_term(FieldElement{1}, {random_laurent(ctx->field(), top, rng, false), random_laurent(ctx->field(), top, rng, false)});
  std::vector<double> series;
  for (int n = 6; n <= top; ++n)
    series.push_back(std::abs(correlate(tabulate(nu, n), tabulate_phase_character(P, n)).mean));
  int down = 0;
  for (std::size_t i = 1; i < series.size(); ++i) down += series[i] <= series[i - 1];
  std::string values;
  for (double v : series) values += (values.empty() ? "" : " ") + fmt("%.4g", v);
  const bool pass = series.back() < 0.5 * series.front() && down >= 6;
  return {pass, "|mean| for n = 6..14: " + values + "; nonincreasing steps " + std::to_string(down) + "/8"};
}

// 13. Projective zero counts of random homogeneous systems.
Outcome zero_counts() {
  std::mt19937_64 rng(1313);
  int total = 0, bad = 0;
  std::string first;
  for (std::uint32_t q : {2u, 3u}) {
    auto F = GaloisField::build(q, 1);
    for (int trial = 0; trial < 50; ++trial) {
      const int D = 1 + static_cast<int>(rng() % 3);
      const auto system = random_homogeneous_system(F, 3, D, 3, rng);
      const auto z = projective_common_zeros(F, system, 3);
      ++total;
      if (!z.passes) {
        ++bad;
        if (first.empty())
          first = "; first failure q = " + std::to_string(q) + ", D = " + std::to_string(D) + ", " +
                  std::to_string(system.size()) + " equations, count 0 < bound " + fmt("%.4f", z.bound);
      }
    }
  }
  return {bad == 0, std::to_string(total) + " systems in dimension 3, below the bound: " + std::to_string(bad) + first};
}

// 14. Orthogonality of Dirichlet characters.
Outcome orthogonality() {
  double worst = 0;
  int moduli = 0, pairs = 0;
  for (std::uint32_t q : {2u, 3u}) {
    auto ctx = FieldContext::create(q, 1);
    for (std::uint64_t code = 1; code < checked_pow(q, 3); ++code) {
      const Polynomial g = ctx->codec().decode(code);
      if (!g.is_monic()) continue;
      ++moduli;
      const auto chars = dirichlet_characters(ctx, g);
      const std::uint64_t residues = checked_pow(q, static_cast<int>(g.size()) - 1);
      for (std::size_t i = 0; i < chars.size(); ++i)
        for (std::size_t j = 0; j < chars.size(); ++j) {
          ++pairs;
          std::complex<double> acc = 0;
          for (std::uint64_t a = 0; a < residues; ++a) {
            const Polynomial A = ctx->codec().decode(a);
            acc += chars[i](A).to_complex() * std::conj(chars[j](A).to_complex());
          }
          worst = std::max(worst, std::abs(acc - (i == j ? static_cast<double>(chars.size()) : 0.0)));
        }
    }
  }
  return {worst <= 1e-10, std::to_string(moduli) + " monic moduli of degree <= 2, " + std::to_string(pairs) +
                              " pairs, max deviation " + fmt("%.3g", worst)};
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace ffm

int main() {
  using namespace ffm;
  const std::vector<Criterion> criteria = {
      {1, "linear-phase dichotomy", 10, linear_dichotomy},
      {2, "U^2 Fourier vs brute force", 30, u2_oracle},
      {3, "Gowers monotonicity", 60, gowers_monotone},
      {4, "AP inequality", 60, ap_inequality},
      {5, "bias vs partition rank", 60, bias_rank},
      {6, "derivative identities", 30, derivative_identities},
      {7, "irreducible counts", 60, irreducible_counts},
      {8, "pretentious distance growth", 10, pretentious_growth},
      {9, "Euler product and mean value", 10, halasz},
      {10, "Turan-Kubilius ratio", 60, turan_kubilius_check},
      {11, "Katai statistic", 120, katai},
      {12, "aperiodic decay exhibit", 600, decay_exhibit},
      {13, "projective zero-count bound", 30, zero_counts},
      {14, "character orthogonality", 10, orthogonality},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("criterion %2d %s: %s; %s; %.2f s (limit %.0f s)%s\n", c.id, pass ? "PASS" : "FAIL", c.name,
                o.detail.c_str(), secs, c.limit_seconds, in_time ? "" : " TIME LIMIT EXCEEDED");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
