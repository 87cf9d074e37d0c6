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

#include "characters/dirichlet.hpp"

#include "common/error.hpp"

namespace ffm {

std::shared_ptr<const DirichletGroup> DirichletGroup::create(ContextPtr ctx, const Polynomial& g) {
  require(ctx != nullptr, "missing field context");
  require(!g.is_zero(), "Dirichlet modulus must be nonzero");
  const PolyRing& R = ctx->ring();
  const PolyCodec& codec = ctx->codec();
  const double budget = ctx->budgets().group_size;

  std::shared_ptr<DirichletGroup> G(new DirichletGroup());
  G->ctx_ = ctx;
  G->modulus_ = R.monic(g);
  G->degree_ = G->modulus_.degree().value();
  check_budget(power_estimate(ctx->q(), G->degree_), budget,
               "residues mod " + G->modulus_.to_string());
  const std::uint64_t count = checked_pow(ctx->q(), G->degree_);
  G->unit_of_residue_.assign(count, -1);
  std::vector<Polynomial> decoded;
  for (std::uint64_t r = 0; r < count; ++r) {
    Polynomial h = codec.decode(r);
    if (R.gcd(h, G->modulus_).degree() == Degree::of(0)) {
      G->unit_of_residue_[r] = static_cast<std::int64_t>(G->units_.size());
      G->units_.push_back(r);
      decoded.push_back(std::move(h));
    }
  }
  const Polynomial& m = G->modulus_;
  const std::size_t identity = G->degree_ == 0 ? 0 : static_cast<std::size_t>(G->unit_of_residue_[1]);
  auto op = [&](std::size_t a, std::size_t b) -> std::size_t {
    if (G->degree_ == 0) return 0;
    std::uint64_t code = codec.encode(R.mulmod(decoded[a], decoded[b], m));
    std::int64_t u = G->unit_of_residue_[code];
    if (u < 0) throw std::logic_error("product of units is not a unit");
    return static_cast<std::size_t>(u);
  };
  G->structure_ = AbelianGroupStructure::decompose(G->units_.size(), identity, op, budget);
  return G;
}

std::uint64_t DirichletGroup::residue_code(const Polynomial& h) const {
  if (degree_ == 0) return 0;
  if (h.degree() < Degree::of(degree_)) return ctx_->codec().encode(h);
  return ctx_->codec().encode(ctx_->ring().mod(h, modulus_));
}

std::optional<std::size_t> DirichletGroup::unit_index(std::uint64_t residue_code) const {
  require(residue_code < unit_of_residue_.size(), "residue code out of range");
  std::int64_t u = unit_of_residue_[residue_code];
  if (u < 0) return std::nullopt;
  return static_cast<std::size_t>(u);
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const DirichletGroup> group, std::size_t index)
    : group_(std::move(group)), index_(index) {
  require(group_ != nullptr, "missing Dirichlet group");
  exponents_ = group_->structure().character_vector(index);
  build_table();
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const DirichletGroup> group,
                                       const std::vector<std::uint32_t>& exponents)
    : group_(std::move(group)) {
  require(group_ != nullptr, "missing Dirichlet group");
  index_ = group_->structure().character_index(exponents);
  exponents_ = exponents;
  build_table();
}

void DirichletCharacter::build_table() {
  auto table = std::make_shared<std::vector<UnitValue>>(group_->residue_count(), UnitValue::zero());
  for (std::size_t u = 0; u < group_->phi(); ++u) {
    (*table)[group_->unit_residue(u)] = UnitValue(group_->structure().character_angle(exponents_, u));
  }
  table_ = std::move(table);
}

std::vector<DirichletCharacter> dirichlet_characters(ContextPtr ctx, const Polynomial& g) {
  auto group = DirichletGroup::create(std::move(ctx), g);
  std::vector<DirichletCharacter> out;
  out.reserve(group->phi());
  for (std::size_t i = 0; i < group->phi(); ++i) out.emplace_back(group, i);
  return out;
}

}  // namespace ffm
