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

#include <vector>

#include "algebra/polynomial.hpp"

namespace ffm {

/// beta = sum_{i >= 1} beta_{-i} x^{-i}, kept to depth M. The linear form
/// g -> (beta g)_{-1} only reads beta_{-1..-(deg g + 1)}, so a depth-M
/// truncation is exact on every g with deg g < M.
class LaurentTruncation {
 public:
  LaurentTruncation() = default;
  /// coeffs[i] is beta_{-(i+1)}; depth = coeffs.size() >= 1.
  explicit LaurentTruncation(std::vector<FieldElement> coeffs);

  /// beta = x^{-(j+1)}: the coordinate form g -> g_j.
  static LaurentTruncation coordinate(int j, int depth);
  /// Expansion of a/b in powers of 1/x; requires deg a < deg b.
  static LaurentTruncation from_rational(const PolyRing& ring, const Polynomial& a,
                                         const Polynomial& b, int depth);

  int depth() const { return static_cast<int>(coeffs_.size()); }
  /// beta_{-i} for i >= 1; zero beyond the depth.
  FieldElement at(int i) const;
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  /// (a * beta) truncated to depth - deg a, so that
  /// linear_form(times(a), g) == linear_form(*this, a g) for deg(a g) < depth.
  LaurentTruncation times(const GaloisField& F, const Polynomial& a) const;

  friend bool operator==(const LaurentTruncation&, const LaurentTruncation&) = default;

 private:
  std::vector<FieldElement> coeffs_;
};

/// (beta g)_{-1} = sum_j g_j beta_{-j-1}. Throws InvalidArgument when
/// deg g >= depth(beta).
FieldElement linear_form(const GaloisField& F, const LaurentTruncation& beta, const Polynomial& g);

/// Same as linear_form on a coefficient vector of length <= depth.
FieldElement linear_form(const GaloisField& F, const LaurentTruncation& beta,
                         const std::vector<FieldElement>& g_coeffs);

}  // namespace ffm
