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

#include <memory>
#include <vector>

#include "algebra/context.hpp"
#include "characters/abelian_group.hpp"
#include "common/unit_value.hpp"

namespace ffm {

/// R_s: series 1 + a_1 x^{-1} + ... + a_s x^{-s} under multiplication
/// truncated after x^{-s}. Element code is sum_i a_i q^{i-1}.
class ShortIntervalGroup {
 public:
  static std::shared_ptr<const ShortIntervalGroup> create(ContextPtr ctx, int s);

  const FieldContext& context() const { return *ctx_; }
  const ContextPtr& context_ptr() const { return ctx_; }
  int length() const { return s_; }
  std::uint64_t size() const { return structure_.size(); }
  const AbelianGroupStructure& structure() const { return structure_; }

  std::uint64_t multiply(std::uint64_t a, std::uint64_t b) const;
  /// Image of g != 0: the top s coefficients of g / (lc(g) x^deg g),
  /// padded with zeros below degree 0.
  std::uint64_t element_code(const Polynomial& g) const;

 private:
  ShortIntervalGroup() = default;

  ContextPtr ctx_;
  int s_ = 0;
  AbelianGroupStructure structure_;
};

class ShortIntervalCharacter {
 public:
  ShortIntervalCharacter(std::shared_ptr<const ShortIntervalGroup> group, std::size_t index,
                         std::uint32_t unit_exponent = 0);
  ShortIntervalCharacter(std::shared_ptr<const ShortIntervalGroup> group,
                         const std::vector<std::uint32_t>& exponents, std::uint32_t unit_exponent = 0);

  const ShortIntervalGroup& group() const { return *group_; }
  const std::shared_ptr<const ShortIntervalGroup>& group_ptr() const { return group_; }
  /// Declared length s.
  int length() const { return group_->length(); }
  std::size_t index() const { return index_; }
  const std::vector<std::uint32_t>& exponents() const { return exponents_; }
  /// k in psi(c) = e(k log c / (q - 1)), the optional character of the
  /// leading coefficient. 0 makes xi invariant under units.
  std::uint32_t unit_exponent() const { return unit_exponent_; }
  /// Least s' <= s such that xi depends only on the top s' + 1 coefficients.
  int effective_length() const;
  bool is_trivial() const { return index_ == 0 && unit_exponent_ == 0; }

  /// xi(g) for g != 0.
  UnitValue operator()(const Polynomial& g) const;
  UnitValue on_element(std::uint64_t code) const { return (*table_)[code]; }

 private:
  void build_table();

  std::shared_ptr<const ShortIntervalGroup> group_;
  std::size_t index_ = 0;
  std::vector<std::uint32_t> exponents_;
  std::uint32_t unit_exponent_ = 0;
  std::shared_ptr<const std::vector<UnitValue>> table_;
};

/// All q^s characters of R_s in index order (unit-invariant).
std::vector<ShortIntervalCharacter> short_interval_characters(ContextPtr ctx, int s);

}  // namespace ffm
