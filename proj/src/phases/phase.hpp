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
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "algebra/field.hpp"
#include "algebra/laurent.hpp"
#include "json.hpp"

namespace ffm {

/// c * L_1(g) * ... * L_k(g); k = 0 is a constant.
struct PhaseTerm {
  FieldElement coeff;
  std::vector<LaurentTruncation> factors;
};

/// c * prod_j g_j^{e_j} in the coefficients of g.
struct MonomialTerm {
  FieldElement coeff;
  std::vector<std::pair<int, int>> powers;  // (coordinate j, exponent e >= 1)

  int degree() const;
};

/// A polynomial map G_n -> F_q kept as a sum of products of Laurent linear
/// forms plus optional raw coordinate monomials.
class PolynomialPhase {
 public:
  PolynomialPhase(FieldPtr field, int n);

  const GaloisField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  /// Domain G_n.
  int ambient() const { return n_; }
  /// Largest factor-list length or monomial total degree; 0 when empty.
  int degree() const;
  bool has_monomials() const { return !monomials_.empty(); }
  bool empty() const { return terms_.empty() && monomials_.empty(); }
  const std::vector<PhaseTerm>& terms() const { return terms_; }
  const std::vector<MonomialTerm>& monomials() const { return monomials_; }

  /// Every factor needs depth >= n. Zero coefficients are dropped.
  void add_term(FieldElement c, std::vector<LaurentTruncation> factors);
  /// Coordinates must lie in [0, n).
  void add_monomial(FieldElement c, std::vector<std::pair<int, int>> powers);

  PolynomialPhase& operator+=(const PolynomialPhase& other);
  PolynomialPhase scaled(FieldElement c) const;
  /// Pointwise product, distributing over terms.
  PolynomialPhase times(const PolynomialPhase& other) const;
  /// Terms of exactly the declared degree.
  PolynomialPhase top_part() const;
  /// d when every term has degree exactly d >= 0; nullopt otherwise.
  std::optional<int> homogeneous_degree() const;

  /// Throws InvalidArgument when deg g >= n.
  FieldElement operator()(const Polynomial& g) const;
  /// Evaluation on the low n coefficients of g.
  FieldElement eval_coeffs(const std::vector<FieldElement>& g) const;

  nlohmann::json to_json() const;
  /// {"n": n, "terms": [{"c": 1, "factors": [beta, ...]}], "monomials":
  /// [{"c": 1, "powers": [[j, e], ...]}]} where beta is an array of
  /// beta_{-1..-M} codes or {"coordinate": j}.
  static PolynomialPhase from_json(FieldPtr field, const nlohmann::json& j);

 private:
  FieldPtr field_;
  int n_;
  std::vector<PhaseTerm> terms_;
  std::vector<MonomialTerm> monomials_;
};

/// Delta_h P, expanded term by term: prod (L_i(g) + L_i(h)) - prod L_i(g)
/// and the binomial expansion of each monomial.
PolynomialPhase delta(const PolynomialPhase& P, const Polynomial& h);

/// Delta_{h_1} ... Delta_{h_k} P (g) by inclusion-exclusion over the 2^k
/// corners, evaluating P only.
FieldElement iterated_difference(const PolynomialPhase& P, const std::vector<Polynomial>& hs, const Polynomial& g);

/// True iff Delta_{h_0} ... Delta_{h_m} P vanishes at `trials` random
/// points. A structured phase of declared degree <= m is accepted without
/// sampling.
bool verify_degree(const PolynomialPhase& P, int m, int trials, std::uint64_t seed = 0);

/// P(g) for every g in G_n, indexed by PolyCodec code; n <= ambient.
std::vector<FieldElement> tabulate(const PolynomialPhase& P, int n);

/// L(g) for every g in G_n, indexed by code.
std::vector<FieldElement> tabulate_linear(const GaloisField& F, const LaurentTruncation& beta, int n);

/// Uniform beta of the given depth; with all_nonzero every coefficient is
/// drawn from F_q^*.
LaurentTruncation random_laurent(const GaloisField& F, int depth, std::mt19937_64& rng, bool all_nonzero);

/// Uniform element of G_n.
Polynomial random_polynomial(const GaloisField& F, int n, std::mt19937_64& rng);

nlohmann::json laurent_to_json(const LaurentTruncation& beta);
LaurentTruncation laurent_from_json(const GaloisField& F, const nlohmann::json& j, int min_depth);

}  // namespace ffm
