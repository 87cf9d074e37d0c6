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
#include <span>
#include <unordered_map>
#include <vector>

#include "algebra/polynomial.hpp"

namespace ffm {

/// Number of monic irreducibles of degree d over F_q:
/// (1/d) sum_{e | d} mu(e) q^{d/e}. Throws for d < 1 or on overflow.
std::uint64_t irreducible_count(std::uint64_t q, int d);

/// Integer Moebius function.
int integer_moebius(std::uint64_t n);

/// Ben-Or test: g is irreducible iff gcd(x^{q^i} - x, g) = 1 for i <= deg/2.
/// Independent of any cached table.
bool is_irreducible(const PolyRing& ring, const Polynomial& g);

struct Irreducible {
  std::size_t index = 0;
  int degree = 0;
  std::uint64_t code = 0;  // PolyCodec code of the monic polynomial
  Polynomial poly;
};

struct PrimePower {
  std::size_t index = 0;  // into IrreducibleTable
  int exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  FieldElement unit;
  std::vector<PrimePower> factors;  // ascending table index
};

/// All monic irreducibles of degree 1..max_degree, generated degree by degree
/// with a product sieve. Entries are ordered by degree, then by code.
class IrreducibleTable {
 public:
  /// Largest q^max_degree the sieve accepts.
  static constexpr std::uint64_t kSieveBudget = std::uint64_t{1} << 26;

  IrreducibleTable(const GaloisField& field, int max_degree);

  int max_degree() const { return max_degree_; }
  std::size_t size() const { return entries_.size(); }
  const Irreducible& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Irreducible> all() const { return entries_; }
  std::span<const Irreducible> of_degree(int d) const;
  std::uint64_t count(int d) const { return of_degree(d).size(); }
  std::optional<std::size_t> find(std::uint64_t monic_code) const;

  /// Trial division against the table. Throws InvalidArgument for g == 0 or
  /// deg g > max_degree().
  Factorization factor(const PolyRing& ring, const Polynomial& g) const;
  /// unit * prod p_i^{k_i}.
  Polynomial expand(const PolyRing& ring, const Factorization& f) const;

 private:
  int max_degree_;
  PolyCodec codec_;
  std::vector<Irreducible> entries_;
  std::vector<std::size_t> degree_start_;  // size max_degree + 2
  std::unordered_map<std::uint64_t, std::size_t> by_code_;
};

/// Monic irreducibles of exactly degree d by sieving, given every monic
/// irreducible of degree <= d/2 (codes, grouped by degree starting at 1).
std::vector<std::uint64_t> sieve_irreducibles(const GaloisField& field, int d,
                                              const std::vector<std::vector<std::uint64_t>>& lower);

}  // namespace ffm
