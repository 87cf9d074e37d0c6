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

#pragma once

#include <cstdint>
#include <string>

#include "analytics/tables.hpp"
#include "phases/multilinear.hpp"

namespace ffm {

/// Base set for pairs (a, b): monic irreducibles of degree k or k+1, or the
/// nonzero polynomials of degree <= k.
enum class PairSet { IrreducibleWindow, Ball };
PairSet parse_pair_set(const std::string& s);
std::string to_string(PairSet s);

/// Paper: divide the total by |pairs|^2 q^{n-k}. PerPair: divide each inner
/// sum by its own number of terms, then average over pairs.
enum class KataiNormalization { Paper, PerPair };
KataiNormalization parse_katai_normalization(const std::string& s);
std::string to_string(KataiNormalization s);

struct KataiResult {
  double statistic = 0.0;
  std::uint64_t pair_set_size = 0;
  double diagonal_share = 0.0;  // 1 / |pair set|
  PairSet pair_set = PairSet::IrreducibleWindow;
  KataiNormalization normalization = KataiNormalization::Paper;

  nlohmann::json to_json() const;
};

/// sum_{a,b} |sum_{g in G_{min(n - deg a, n - deg b)}} f(ag) conj f(bg)|, normalised.
/// f must be tabulated on G_n.
KataiResult katai_statistic(const FieldContext& ctx, const FunctionTable& f, int k,
                            PairSet pairs = PairSet::IrreducibleWindow,
                            KataiNormalization norm = KataiNormalization::Paper);

struct RBiasResult {
  double value = 0.0;
  double imag = 0.0;
  bool exhaustive = true;
  double std_error = 0.0;
  std::uint64_t pairs = 0;
  std::uint64_t evaluations = 0;

  nlohmann::json to_json() const;
};

/// E_{a,b} E_{g in G_{n-k}^m} alpha_1(d^mP(a g_1, ..., a g_m) - d^mP(b g_1, ..., b g_m))
/// for a declared degree m >= deg P. Every product a g must stay inside the
/// phase's domain.
/// With samples == 0 the inner expectations are exhaustive (subject to
/// budget); otherwise each inner expectation uses that many seeded samples.
RBiasResult r_bias_statistic(const FieldContext& ctx, const PolynomialPhase& P, int m, int n, int k, PairSet base,
                             std::uint64_t samples = 0, std::uint64_t seed = 0, double budget = 1e8);

struct TuranKubiliusResult {
  double A = 0.0;
  double lhs = 0.0;
  double ratio = 0.0;
  std::uint64_t window_primes = 0;

  nlohmann::json to_json() const;
};

/// Prime window W < deg p < H; 0 is divisible by every window prime.
TuranKubiliusResult turan_kubilius(const FieldContext& ctx, int n, int W, int H);

/// Monic irreducibles of degree k and k+1, or nonzero polynomials of degree <= k.
std::vector<Polynomial> pair_set_members(const FieldContext& ctx, PairSet s, int k);

}  // namespace ffm
