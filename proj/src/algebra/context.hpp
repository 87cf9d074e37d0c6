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
#include <iterator>
#include <memory>
#include <vector>

#include "algebra/field.hpp"
#include "algebra/irreducible.hpp"
#include "algebra/polynomial.hpp"

namespace ffm {

struct Budgets {
  /// Largest polynomial set a single enumeration may produce.
  double enumeration = static_cast<double>(std::uint64_t{1} << 26);
  /// Largest number of form/function evaluations in one exhaustive fold.
  double evaluation = 1e8;
  /// Largest finite abelian group the character engine decomposes.
  double group_size = 1e5;
  /// Memo entries per multiplicative function.
  std::size_t memo_entries = std::size_t{1} << 20;
};

/// Everything that depends only on (p, r): field tables, the polynomial
/// ring, and the irreducible cache. Immutable; share it freely.
class FieldContext {
 public:
  /// cache_degree <= 0 selects default_cache_degree(q).
  static std::shared_ptr<const FieldContext> create(std::uint32_t p, int r, int cache_degree = 0,
                                                    Budgets budgets = {});

  /// Largest d with q^d <= 3^8: 12 for q = 2, 8 for q = 3.
  static int default_cache_degree(std::uint32_t q);

  const GaloisField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  const PolyRing& ring() const { return ring_; }
  const PolyCodec& codec() const { return codec_; }
  const IrreducibleTable& irreducibles() const { return *irreducibles_; }
  const Budgets& budgets() const { return budgets_; }
  std::uint32_t q() const { return field_->q(); }
  std::uint32_t p() const { return field_->p(); }
  int cache_degree() const { return irreducibles_->max_degree(); }

  /// Factor via the irreducible cache.
  Factorization factor(const Polynomial& g) const { return irreducibles_->factor(ring_, g); }

 private:
  FieldContext(FieldPtr field, int cache_degree, Budgets budgets);

  FieldPtr field_;
  PolyRing ring_;
  PolyCodec codec_;
  std::unique_ptr<IrreducibleTable> irreducibles_;
  Budgets budgets_;
};

using ContextPtr = std::shared_ptr<const FieldContext>;

/// The polynomial families the analytics sum over.
enum class SetKind {
  G,               // G_n: degree < n, q^n elements including 0
  MonicOfDegree,   // monic of degree exactly n, q^n elements
  IrreducibleWindow,  // P_k: monic irreducibles of degree k or k + 1
};

/// A deterministic, random-access sequence of polynomials.
class PolynomialSet {
 public:
  class Iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Polynomial;
    using difference_type = std::ptrdiff_t;

    Iterator(const PolynomialSet* set, std::uint64_t i) : set_(set), i_(i) {}
    Polynomial operator*() const { return (*set_)[i_]; }
    Iterator& operator++() {
      ++i_;
      return *this;
    }
    friend bool operator==(const Iterator& a, const Iterator& b) { return a.i_ == b.i_; }

   private:
    const PolynomialSet* set_;
    std::uint64_t i_;
  };

  std::uint64_t size() const { return size_; }
  Polynomial operator[](std::uint64_t i) const;
  /// PolyCodec code of element i.
  std::uint64_t code(std::uint64_t i) const;
  Iterator begin() const { return {this, 0}; }
  Iterator end() const { return {this, size_}; }

 private:
  friend PolynomialSet enumerate_set(const FieldContext&, SetKind, int);

  PolyCodec codec_{2};
  std::uint64_t size_ = 0;
  std::uint64_t offset_ = 0;             // added to i for G and monic sets
  std::vector<std::uint64_t> explicit_;  // P_k codes
};

/// Throws BudgetExceeded when the set is larger than budgets().enumeration
/// and InvalidArgument for out-of-range parameters or P_k beyond the cache.
PolynomialSet enumerate_set(const FieldContext& ctx, SetKind kind, int n);

}  // namespace ffm
