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

// Table-driven arithmetic in F_q, q = p^r.
//
// An element is stored as the integer code sum_i a_i p^i of its coordinates
// (a_0, ..., a_{r-1}) in the power basis 1, u, ..., u^{r-1}, where u is a root
// of the modulus. Addition is coordinate-wise mod p; multiplication, inverse
// and trace are read from tables built once per field.

#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace ffm {

struct FieldElement {
  std::uint32_t code = 0;

  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

class GaloisField {
 public:
  /// Largest supported field order; keeps the q*q multiplication table small.
  static constexpr std::uint32_t kMaxOrder = 1024;

  /// F_{p^r} with the least monic irreducible modulus of degree r, where
  /// polynomials are ordered by the code sum_i c_i p^i of their non-leading
  /// coefficients. Throws InvalidArgument for non-prime p or r == 0.
  static std::shared_ptr<const GaloisField> build(std::uint32_t p, int r);

  std::uint32_t p() const { return p_; }
  int r() const { return r_; }
  std::uint32_t q() const { return q_; }
  /// Monic modulus over F_p, lowest coefficient first (size r + 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement element(std::uint32_t code) const;
  /// Image of the integer k in the prime subfield.
  FieldElement from_int(std::int64_t k) const;
  std::vector<std::uint32_t> coordinates(FieldElement a) const;
  FieldElement from_coordinates(std::span<const std::uint32_t> coords) const;

  FieldElement add(FieldElement a, FieldElement b) const { return {add_[a.code * q_ + b.code]}; }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement neg(FieldElement a) const { return {neg_[a.code]}; }
  FieldElement mul(FieldElement a, FieldElement b) const { return {mul_[a.code * q_ + b.code]}; }
  /// Throws InvalidArgument on zero.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::uint64_t k) const;

  /// Tr(t) = sum_{i<r} t^{p^i}, returned as a residue mod p.
  std::uint32_t trace(FieldElement t) const { return trace_[t.code]; }
  /// Exponent k of alpha_s(t) = exp(2 pi i k / p), with k = Tr(s t).
  std::uint32_t character_exponent(FieldElement s, FieldElement t) const {
    return trace(mul(s, t));
  }
  std::complex<double> additive_character(FieldElement s, FieldElement t) const {
    return root_of_unity(character_exponent(s, t));
  }
  /// exp(2 pi i k / p).
  std::complex<double> root_of_unity(std::uint32_t k) const { return zeta_[k % p_]; }

  /// A fixed generator of F_q^* (least code of order q - 1).
  FieldElement primitive_element() const { return {primitive_}; }
  /// log of a nonzero element with respect to primitive_element().
  std::uint32_t discrete_log(FieldElement a) const;

 private:
  GaloisField() = default;

  std::uint32_t p_ = 0;
  int r_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> trace_;
  std::vector<std::uint32_t> log_;
  std::vector<std::complex<double>> zeta_;
  std::uint32_t primitive_ = 1;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

bool is_prime(std::uint64_t n);

}  // namespace ffm
