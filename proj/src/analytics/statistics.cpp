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

#include "analytics/statistics.hpp"

#include <cmath>

#include "common/error.hpp"
#include "common/reduce.hpp"

namespace ffm {

PairSet parse_pair_set(const std::string& s) {
  if (s == "P_k" || s == "irreducible") return PairSet::IrreducibleWindow;
  if (s == "G_k+1" || s == "ball") return PairSet::Ball;
  throw InvalidArgument("unknown pair set \"" + s + "\" (expected P_k or G_k+1)");
}

std::string to_string(PairSet s) { return s == PairSet::IrreducibleWindow ? "P_k" : "G_k+1"; }

KataiNormalization parse_katai_normalization(const std::string& s) {
  if (s == "paper") return KataiNormalization::Paper;
  if (s == "per-pair") return KataiNormalization::PerPair;
  throw InvalidArgument("unknown normalization \"" + s + "\" (expected paper or per-pair)");
}

std::string to_string(KataiNormalization s) { return s == KataiNormalization::Paper ? "paper" : "per-pair"; }

std::vector<Polynomial> pair_set_members(const FieldContext& ctx, PairSet s, int k) {
  require(k >= 0, "pair set parameter k must be >= 0");
  std::vector<Polynomial> out;
  if (s == PairSet::IrreducibleWindow) {
    for (const auto& g : enumerate_set(ctx, SetKind::IrreducibleWindow, k)) out.push_back(g);
  } else {
    for (std::uint64_t c = 1; c < checked_pow(ctx.q(), k + 1); ++c) out.push_back(ctx.codec().decode(c));
  }
  require(!out.empty(), "empty pair set");
  return out;
}

nlohmann::json KataiResult::to_json() const {
  return {{"statistic", statistic},
          {"pair_set_size", pair_set_size},
          {"diagonal_share", diagonal_share},
          {"pair_set", to_string(pair_set)},
          {"normalization", to_string(normalization)}};
}

KataiResult katai_statistic(const FieldContext& ctx, const FunctionTable& f, int k, PairSet pairs,
                            KataiNormalization norm) {
  require(f.q == ctx.q(), "function table and context disagree on q");
  const int n = f.n;
  const auto members = pair_set_members(ctx, pairs, k);
  const std::size_t P = members.size();
  std::vector<std::vector<std::complex<double>>> shifted(P);
  std::vector<int> len(P);
  double cost = 0.0;
  for (std::size_t i = 0; i < P; ++i) {
    len[i] = n - members[i].degree().value();
    require(len[i] >= 0, "pair set element of degree above n");
  }
  for (std::size_t i = 0; i < P; ++i)
    for (std::size_t j = 0; j < P; ++j) cost += power_estimate(ctx.q(), std::min(len[i], len[j]));
  check_budget(cost, ctx.budgets().evaluation, "Katai statistic at n = " + std::to_string(n));
  for (std::size_t i = 0; i < P; ++i) {
    const std::uint64_t m = checked_pow(ctx.q(), len[i]);
    shifted[i].resize(m);
    for (std::uint64_t g = 0; g < m; ++g) {
      shifted[i][g] = f[ctx.codec().encode(ctx.ring().mul(members[i], ctx.codec().decode(g)))];
    }
  }
  std::vector<double> terms(P * P);
  for (std::size_t i = 0; i < P; ++i) {
    for (std::size_t j = 0; j < P; ++j) {
      const std::uint64_t m = checked_pow(ctx.q(), std::min(len[i], len[j]));
      auto inner = deterministic_sum(m, [&](std::uint64_t g) { return shifted[i][g] * std::conj(shifted[j][g]); });
      double v = std::abs(inner);
      terms[i * P + j] = norm == KataiNormalization::PerPair ? v / static_cast<double>(m) : v;
    }
  }
  double total = pairwise_sum(std::span<const double>(terms));
  double denom = static_cast<double>(P) * static_cast<double>(P);
  if (norm == KataiNormalization::Paper) denom *= std::pow(static_cast<double>(ctx.q()), n - k);
  KataiResult out;
  out.statistic = total / denom;
  out.pair_set_size = P;
  out.diagonal_share = 1.0 / static_cast<double>(P);
  out.pair_set = pairs;
  out.normalization = norm;
  return out;
}

nlohmann::json RBiasResult::to_json() const {
  return {{"value", value},       {"imag", imag},   {"exhaustive", exhaustive},
          {"std_error", std_error}, {"pairs", pairs}, {"evaluations", evaluations}};
}

RBiasResult r_bias_statistic(const FieldContext& ctx, const PolynomialPhase& P, int m, int n, int k, PairSet base,
                             std::uint64_t samples, std::uint64_t seed, double budget) {
  const GaloisField& F = ctx.field();
  require(m >= 1, "r-bias statistic needs degree m >= 1");
  require(k >= 0 && k < n, "r-bias statistic needs 0 <= k < n");
  const auto members = pair_set_members(ctx, base, k);
  const int slot = n - k;
  for (const auto& a : members) {
    require(a.degree().value() + slot <= P.ambient(),
            "products a*g leave the phase domain G_" + std::to_string(P.ambient()));
  }
  const MultilinearForm Q = derivative_form(P, m);
  const double per_pair = std::pow(power_estimate(F.q(), slot), m);
  const double pairs = static_cast<double>(members.size() * members.size());
  if (samples == 0) check_budget(per_pair * pairs, budget, "exhaustive r-bias statistic");

  // Q(a g_1, ..., a g_m) as a form on G_{n-k}^m
  std::vector<std::vector<FormTerm>> scaled(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (const auto& t : Q.terms()) {
      FormTerm s{t.coeff, {}};
      for (const auto& L : t.slots) s.slots.push_back(L.times(F, members[i]));
      scaled[i].push_back(std::move(s));
    }
  }
  RBiasResult out;
  out.exhaustive = samples == 0;
  out.pairs = members.size() * members.size();
  std::vector<double> re, im, var;
  std::uint64_t stream = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      MultilinearForm R(P.field_ptr(), std::vector<int>(static_cast<std::size_t>(m), slot));
      for (const auto& t : scaled[i]) R.add_term(t.coeff, t.slots);
      for (const auto& t : scaled[j]) R.add_term(F.neg(t.coeff), t.slots);
      BiasResult b = samples == 0 ? bias_exhaustive(R, budget) : bias_sampled(R, samples, seed + 0x9e3779b97f4a7c15ULL * ++stream);
      re.push_back(b.mean.real());
      im.push_back(b.mean.imag());
      var.push_back(b.std_error * b.std_error);
      out.evaluations += b.samples;
    }
  }
  const double np = static_cast<double>(re.size());
  out.value = pairwise_sum(std::span<const double>(re)) / np;
  out.imag = pairwise_sum(std::span<const double>(im)) / np;
  out.std_error = std::sqrt(pairwise_sum(std::span<const double>(var))) / np;
  return out;
}

nlohmann::json TuranKubiliusResult::to_json() const {
  return {{"A", A}, {"lhs", lhs}, {"ratio", ratio}, {"window_primes", window_primes}};
}

TuranKubiliusResult turan_kubilius(const FieldContext& ctx, int n, int W, int H) {
  require(n >= 0, "n must be >= 0");
  require(W >= 0 && W + 1 < H, "prime window W < deg p < H is empty");
  require(H - 1 <= ctx.cache_degree(), "prime window reaches degree " + std::to_string(H - 1) +
                                           " beyond the irreducible cache (" + std::to_string(ctx.cache_degree()) + ")");
  check_budget(power_estimate(ctx.q(), n) * (H - W), ctx.budgets().evaluation, "Turan-Kubilius at n = " + std::to_string(n));
  const std::uint64_t size = checked_pow(ctx.q(), n);
  std::vector<std::uint32_t> omega(size, 0);
  TuranKubiliusResult out;
  CompensatedSum A;
  for (int d = W + 1; d < H; ++d) {
    const double w = std::pow(static_cast<double>(ctx.q()), -d);
    for (const auto& p : ctx.irreducibles().of_degree(d)) {
      A.add(w);
      ++out.window_primes;
      if (d >= n) {
        ++omega[0];
        continue;
      }
      const std::uint64_t multiples = checked_pow(ctx.q(), n - d);
      for (std::uint64_t h = 0; h < multiples; ++h) {
        ++omega[ctx.codec().encode(ctx.ring().mul(p.poly, ctx.codec().decode(h)))];
      }
    }
  }
  out.A = A.value();
  out.lhs = deterministic_sum_real(size, [&](std::uint64_t g) {
    const double dev = omega[g] - out.A;
    return dev * dev;
  });
  out.ratio = out.lhs / (out.A * static_cast<double>(size));
  return out;
}

}  // namespace ffm
