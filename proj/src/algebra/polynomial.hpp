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

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "algebra/field.hpp"

namespace ffm {

/// Degree of a polynomial. The zero polynomial has the dedicated degree
/// NEG_INF, which compares below every finite degree and absorbs addition.
class Degree {
 public:
  static constexpr Degree neg_inf() { return Degree(); }
  static constexpr Degree of(int d) { return Degree(d); }

  constexpr bool is_neg_inf() const { return neg_inf_; }
  /// Throws InvalidArgument for NEG_INF.
  int value() const;

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (a.neg_inf_ || b.neg_inf_) return neg_inf();
    return Degree(a.d_ + b.d_);
  }
  friend constexpr bool operator==(Degree a, Degree b) {
    return a.neg_inf_ == b.neg_inf_ && (a.neg_inf_ || a.d_ == b.d_);
  }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (a.neg_inf_ || b.neg_inf_) {
      if (a.neg_inf_ && b.neg_inf_) return std::strong_ordering::equal;
      return a.neg_inf_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.d_ <=> b.d_;
  }
  friend constexpr bool operator<(Degree a, int d) { return a < Degree(d); }
  friend constexpr bool operator<=(Degree a, int d) { return a <= Degree(d); }

  std::string to_string() const;

 private:
  constexpr Degree() = default;
  constexpr explicit Degree(int d) : neg_inf_(false), d_(d) {}

  bool neg_inf_ = true;
  int d_ = 0;
};

/// Element of F_q[x]; coefficients lowest degree first with no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<FieldElement> coeffs);
  Polynomial(std::initializer_list<std::uint32_t> codes);

  static Polynomial constant(FieldElement c) { return Polynomial(std::vector<FieldElement>{c}); }
  static Polynomial monomial(FieldElement c, int degree);

  Degree degree() const {
    return coeffs_.empty() ? Degree::neg_inf() : Degree::of(static_cast<int>(coeffs_.size()) - 1);
  }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^i; zero above the degree.
  FieldElement coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : FieldElement{}; }
  FieldElement leading() const { return coeffs_.empty() ? FieldElement{} : coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back().code == 1; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  /// Number of stored coefficients (degree + 1, or 0 for zero).
  std::size_t size() const { return coeffs_.size(); }

  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<FieldElement> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Ring operations in F_q[x]. Holds a non-owning view of its field; the
/// FieldContext that creates it keeps the field alive.
class PolyRing {
 public:
  explicit PolyRing(const GaloisField& field) : F_(&field) {}

  const GaloisField& field() const { return *F_; }

  Polynomial add(const Polynomial& a, const Polynomial& b) const;
  Polynomial sub(const Polynomial& a, const Polynomial& b) const;
  Polynomial neg(const Polynomial& a) const;
  Polynomial scale(const Polynomial& a, FieldElement c) const;
  Polynomial mul(const Polynomial& a, const Polynomial& b) const;
  Polynomial pow(const Polynomial& a, unsigned k) const;
  /// a = q*b + r with deg r < deg b. Throws InvalidArgument if b == 0.
  DivMod divmod(const Polynomial& a, const Polynomial& b) const;
  Polynomial mod(const Polynomial& a, const Polynomial& b) const { return divmod(a, b).remainder; }
  /// Monic gcd; gcd(0, 0) = 0.
  Polynomial gcd(const Polynomial& a, const Polynomial& b) const;
  /// a / lc(a); zero stays zero.
  Polynomial monic(const Polynomial& a) const;
  FieldElement evaluate(const Polynomial& a, FieldElement x) const;
  /// (a * b) mod m.
  Polynomial mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& m) const;

 private:
  const GaloisField* F_;
};

/// Integer codes for polynomials: g <-> sum_j code(g_j) q^j. The codes of
/// G_n (degree < n) are exactly [0, q^n).
class PolyCodec {
 public:
  explicit PolyCodec(std::uint32_t q) : q_(q) {}

  std::uint64_t encode(const Polynomial& g) const;
  Polynomial decode(std::uint64_t code) const;
  /// Coefficient codes of the low `len` coefficients into `out`.
  void decode_into(std::uint64_t code, std::vector<FieldElement>& out, std::size_t len) const;
  std::uint32_t q() const { return q_; }

 private:
  std::uint32_t q_;
};

}  // namespace ffm
