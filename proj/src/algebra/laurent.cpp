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

#include "algebra/laurent.hpp"

#include "common/error.hpp"

namespace ffm {

LaurentTruncation::LaurentTruncation(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) {
  require(!coeffs_.empty(), "Laurent truncation needs depth >= 1");
}

LaurentTruncation LaurentTruncation::coordinate(int j, int depth) {
  require(j >= 0 && j < depth, "coordinate index outside the truncation depth");
  std::vector<FieldElement> c(static_cast<std::size_t>(depth));
  c[static_cast<std::size_t>(j)] = FieldElement{1};
  return LaurentTruncation(std::move(c));
}

LaurentTruncation LaurentTruncation::from_rational(const PolyRing& ring, const Polynomial& a,
                                                   const Polynomial& b, int depth) {
  require(!b.is_zero(), "rational Laurent expansion with zero denominator");
  require(a.degree() < b.degree(), "rational Laurent expansion needs deg a < deg b");
  require(depth >= 1, "depth must be at least 1");
  // a x^M = Q b + R with deg R < deg b; then a/b - Q x^{-M} has degree < -M,
  // so beta_{-i} is the coefficient of x^{M-i} in Q.
  Polynomial shifted = ring.mul(a, Polynomial::monomial(ring.field().one(), depth));
  Polynomial quotient = ring.divmod(shifted, b).quotient;
  std::vector<FieldElement> c(static_cast<std::size_t>(depth));
  for (int i = 1; i <= depth; ++i) c[static_cast<std::size_t>(i - 1)] = quotient.coeff(static_cast<std::size_t>(depth - i));
  return LaurentTruncation(std::move(c));
}

FieldElement LaurentTruncation::at(int i) const {
  require(i >= 1, "Laurent index must be negative (pass i >= 1 for beta_{-i})");
  if (i > depth()) return FieldElement{};
  return coeffs_[static_cast<std::size_t>(i - 1)];
}

bool LaurentTruncation::is_zero() const {
  for (auto c : coeffs_) {
    if (c.code != 0) return false;
  }
  return true;
}

LaurentTruncation LaurentTruncation::times(const GaloisField& F, const Polynomial& a) const {
  require(!a.is_zero(), "Laurent product with the zero polynomial");
  int da = a.degree().value();
  int new_depth = depth() - da;
  require(new_depth >= 1, "Laurent truncation too shallow for the multiplier degree");
  std::vector<FieldElement> c(static_cast<std::size_t>(new_depth));
  for (int i = 1; i <= new_depth; ++i) {
    FieldElement acc{};
    for (int j = 0; j <= da; ++j) acc = F.add(acc, F.mul(a.coeff(static_cast<std::size_t>(j)), at(i + j)));
    c[static_cast<std::size_t>(i - 1)] = acc;
  }
  return LaurentTruncation(std::move(c));
}

FieldElement linear_form(const GaloisField& F, const LaurentTruncation& beta,
                         const std::vector<FieldElement>& g_coeffs) {
  std::size_t len = g_coeffs.size();
  while (len > 0 && g_coeffs[len - 1].code == 0) --len;
  require(static_cast<int>(len) <= beta.depth(),
          "linear form depth " + std::to_string(beta.depth()) + " too shallow for degree " +
              std::to_string(static_cast<int>(len) - 1));
  FieldElement acc{};
  const auto& b = beta.coeffs();
  for (std::size_t j = 0; j < len; ++j) {
    if (g_coeffs[j].code == 0) continue;
    acc = F.add(acc, F.mul(g_coeffs[j], b[j]));
  }
  return acc;
}

FieldElement linear_form(const GaloisField& F, const LaurentTruncation& beta, const Polynomial& g) {
  return linear_form(F, beta, g.coeffs());
}

}  // namespace ffm
