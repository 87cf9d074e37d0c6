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

#include "phases/zeros.hpp"

#include <cmath>

#include "common/error.hpp"

namespace ffm {

ProjectiveZeroCount projective_common_zeros(const FieldPtr& field, const std::vector<PolynomialPhase>& phases, int dim,
                                            double budget) {
  require(field != nullptr, "missing field");
  require(dim >= 1, "projective zero count needs dim >= 1");
  const GaloisField& F = *field;
  check_budget(power_estimate(F.q(), dim) * static_cast<double>(phases.size() + 1), budget, "projective zero count");
  ProjectiveZeroCount out;
  std::vector<std::vector<FieldElement>> tables;
  for (std::size_t i = 0; i < phases.size(); ++i) {
    const auto& P = phases[i];
    require(P.ambient() == dim, "phase " + std::to_string(i) + " does not live on G_" + std::to_string(dim));
    auto d = P.homogeneous_degree();
    require(d.has_value() && *d >= 1, "phase " + std::to_string(i) + " is not homogeneous of degree >= 1");
    out.total_degree += *d;
    tables.push_back(tabulate(P, dim));
  }
  const std::uint64_t size = checked_pow(F.q(), dim);
  std::uint64_t affine_zeros = 0;
  for (std::uint64_t code = 1; code < size; ++code) {
    bool all = true;
    for (const auto& t : tables) {
      if (t[code].code != 0) {
        all = false;
        break;
      }
    }
    affine_zeros += all;
  }
  out.count = affine_zeros / (F.q() - 1);
  out.projective_size = (size - 1) / (F.q() - 1);
  out.bound = static_cast<double>(out.projective_size) / (2.0 * std::pow(static_cast<double>(F.q()), out.total_degree + 1));
  out.passes = static_cast<double>(out.count) >= out.bound;
  return out;
}

std::vector<PolynomialPhase> random_homogeneous_system(const FieldPtr& field, int dim, int total_degree, int max_terms,
                                                       std::mt19937_64& rng) {
  require(field != nullptr, "missing field");
  require(dim >= 1 && total_degree >= 1 && max_terms >= 1, "random system needs dim, total degree and terms >= 1");
  const GaloisField& F = *field;
  auto nonzero_form = [&] {
    for (;;) {
      LaurentTruncation beta = random_laurent(F, dim, rng, false);
      for (const auto& c : beta.coeffs()) {
        if (c.code != 0) return beta;
      }
    }
  };
  std::vector<PolynomialPhase> system;
  for (int remaining = total_degree; remaining > 0;) {
    const int e = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(remaining));
    remaining -= e;
    PolynomialPhase P(field, dim);
    const int terms = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_terms));
    for (int t = 0; t < terms; ++t) {
      FieldElement c{1 + static_cast<std::uint32_t>(rng() % (F.q() - 1))};
      std::vector<LaurentTruncation> factors;
      for (int i = 0; i < e; ++i) factors.push_back(nonzero_form());
      P.add_term(c, std::move(factors));
    }
    system.push_back(std::move(P));
  }
  return system;
}

}  // namespace ffm
