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
#include <random>
#include <vector>

#include "phases/phase.hpp"

namespace ffm {

struct ProjectiveZeroCount {
  std::uint64_t count = 0;             // projective points where every phase vanishes
  std::uint64_t projective_size = 0;   // (q^dim - 1) / (q - 1)
  int total_degree = 0;                // D, the sum of the degrees
  double bound = 0.0;                  // |Pr(V)| / (2 q^{D+1})
  bool passes = false;                 // count >= bound
};

/// Brute-force common zeros of homogeneous phases on G_dim, counted on
/// projective space. Every phase must be homogeneous of degree >= 1 on
/// ambient dim.
ProjectiveZeroCount projective_common_zeros(const FieldPtr& field, const std::vector<PolynomialPhase>& phases, int dim,
                                            double budget = 1e8);

/// A random homogeneous system on G_dim whose degrees sum to total_degree.
/// The degrees form a random composition of total_degree; each equation is
/// a sum of 1..max_terms products of nonzero random linear forms.
std::vector<PolynomialPhase> random_homogeneous_system(const FieldPtr& field, int dim, int total_degree, int max_terms,
                                                       std::mt19937_64& rng);

}  // namespace ffm
