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

#include <complex>
#include <string>
#include <vector>

#include "analytics/tables.hpp"
#include "characters/hayes.hpp"
#include "multfn/multiplicative.hpp"

namespace ffm {

struct DistanceResult {
  double distance = 0.0;
  double squared = 0.0;
  int N = 0;
  int window_low = 0;
  std::string method;  // "enumeration" or "degree-rule"

  nlohmann::json to_json() const;
};

/// D(f, g, N) summed over monic irreducibles with window_low <= deg p <= N.
/// Uses the irreducible cache when N fits; otherwise both functions must
/// depend only on degree.
DistanceResult pretentious_distance(const MultiplicativeFunction& f, const MultiplicativeFunction& g, int N,
                                    int window_low = 0);

/// D(f, g, N) for N = 1..N_max in one pass.
std::vector<DistanceResult> pretentious_series(const MultiplicativeFunction& f, const MultiplicativeFunction& g,
                                               int N_max, int window_low = 0);

struct HayesMinimum {
  double M = 1.0;  // 1 + min distance
  double min_distance = 0.0;
  HayesCharacter argmin;
  std::uint64_t characters_scanned = 0;
  int grid = 1;

  nlohmann::json to_json() const;
};

/// Minimises D(f, chi xi e_theta, N) over Dirichlet characters modulo every
/// monic g with deg g <= modulus_bound, every short-interval character of
/// length <= length_bound, and theta = j / grid for j < grid.
HayesMinimum min_distance_over_hayes(const MultiplicativeFunction& f, int N, int modulus_bound, int length_bound,
                                     int grid);

struct HalaszResult {
  std::complex<double> value;
  std::string method;
  double truncation = 1e-15;  // a local series stops once N_q(d) q^{-kd} drops below this

  nlohmann::json to_json() const;
};

/// prod_{deg p <= n} (1 - q^{-deg p}) sum_k f(p^k) q^{-k deg p}.
HalaszResult halasz_product(const MultiplicativeFunction& f, int n);

/// Exhaustive mean of f over monic polynomials of degree exactly n
/// (Domain::Monic) or over G_n (Domain::All).
std::complex<double> mean_value(const MultiplicativeFunction& f, int n, Domain domain);

}  // namespace ffm
