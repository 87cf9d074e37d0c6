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
#include <optional>
#include <vector>

#include "algebra/context.hpp"
#include "characters/abelian_group.hpp"
#include "common/unit_value.hpp"

namespace ffm {

/// (F_q[x]/g)^* together with its character group. The modulus is stored
/// monic; g = 1 gives the one-element group.
class DirichletGroup {
 public:
  static std::shared_ptr<const DirichletGroup> create(ContextPtr ctx, const Polynomial& g);

  const FieldContext& context() const { return *ctx_; }
  const ContextPtr& context_ptr() const { return ctx_; }
  const Polynomial& modulus() const { return modulus_; }
  int degree() const { return degree_; }
  /// Number of residues q^deg g.
  std::uint64_t residue_count() const { return unit_of_residue_.size(); }
  /// |(F_q[x]/g)^*|.
  std::size_t phi() const { return units_.size(); }
  const AbelianGroupStructure& structure() const { return structure_; }

  /// Code of h mod g.
  std::uint64_t residue_code(const Polynomial& h) const;
  /// Index into the unit group, or nullopt when gcd(residue, g) != 1.
  std::optional<std::size_t> unit_index(std::uint64_t residue_code) const;
  std::uint64_t unit_residue(std::size_t unit) const { return units_[unit]; }

 private:
  DirichletGroup() = default;

  ContextPtr ctx_;
  Polynomial modulus_;
  int degree_ = 0;
  std::vector<std::int64_t> unit_of_residue_;
  std::vector<std::uint64_t> units_;
  AbelianGroupStructure structure_;
};

class DirichletCharacter {
 public:
  DirichletCharacter(std::shared_ptr<const DirichletGroup> group, std::size_t index);
  DirichletCharacter(std::shared_ptr<const DirichletGroup> group, const std::vector<std::uint32_t>& exponents);

  const DirichletGroup& group() const { return *group_; }
  const std::shared_ptr<const DirichletGroup>& group_ptr() const { return group_; }
  std::size_t index() const { return index_; }
  const std::vector<std::uint32_t>& exponents() const { return exponents_; }
  bool is_principal() const { return index_ == 0; }

  /// chi(h): zero iff gcd(h, g) != 1.
  UnitValue operator()(const Polynomial& h) const { return on_residue(group_->residue_code(h)); }
  UnitValue on_residue(std::uint64_t residue_code) const { return (*table_)[residue_code]; }

 private:
  void build_table();

  std::shared_ptr<const DirichletGroup> group_;
  std::size_t index_ = 0;
  std::vector<std::uint32_t> exponents_;
  std::shared_ptr<const std::vector<UnitValue>> table_;
};

/// All phi(g) characters mod g in index order; index 0 is principal.
std::vector<DirichletCharacter> dirichlet_characters(ContextPtr ctx, const Polynomial& g);

}  // namespace ffm
