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
#include <functional>
#include <vector>

#include "common/unit_value.hpp"

namespace ffm {

/// A finite abelian group on the universe {0, ..., size-1} written as a
/// direct sum of cyclic groups <g_1> + ... + <g_t> with ord(g_{j+1}) | ord(g_j).
class AbelianGroupStructure {
 public:
  using Operation = std::function<std::size_t(std::size_t, std::size_t)>;

  /// Default budget on the universe size.
  static constexpr double kDefaultBudget = 1e5;

  /// Decomposes the group by repeatedly extracting an element of maximal
  /// order in the quotient by the span found so far and lifting it to a
  /// complement. Throws InvalidArgument if `op` is not closed or some
  /// element has no inverse, and BudgetExceeded if size > budget.
  static AbelianGroupStructure decompose(std::size_t size, std::size_t identity, const Operation& op,
                                         double budget = kDefaultBudget);

  std::size_t size() const { return dlog_.size(); }
  std::size_t identity() const { return identity_; }
  const std::vector<std::size_t>& generators() const { return generators_; }
  const std::vector<std::uint64_t>& orders() const { return orders_; }
  /// Exponent vector of element x against generators().
  const std::vector<std::uint32_t>& exponents(std::size_t x) const { return dlog_[x]; }
  /// Element with the given exponent vector.
  std::size_t element(const std::vector<std::uint32_t>& exponents) const;

  /// Number of characters (= size()).
  std::size_t character_count() const { return size(); }
  /// Exponent vector of character `index`: mixed radix over orders(),
  /// first generator most significant, so index 0 is the trivial character.
  std::vector<std::uint32_t> character_vector(std::size_t index) const;
  std::size_t character_index(const std::vector<std::uint32_t>& vec) const;
  /// chi_c(x) = e(sum_j c_j e_j(x) / m_j).
  Angle character_angle(const std::vector<std::uint32_t>& c, std::size_t x) const;

 private:
  std::size_t identity_ = 0;
  std::vector<std::size_t> generators_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::vector<std::uint32_t>> dlog_;
  std::vector<std::size_t> by_vector_;  // mixed-radix vector code -> element
};

}  // namespace ffm
