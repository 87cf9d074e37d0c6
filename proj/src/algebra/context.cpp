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

#include "algebra/context.hpp"

#include "common/error.hpp"

namespace ffm {

FieldContext::FieldContext(FieldPtr field, int cache_degree, Budgets budgets)
    : field_(std::move(field)),
      ring_(*field_),
      codec_(field_->q()),
      irreducibles_(std::make_unique<IrreducibleTable>(*field_, cache_degree)),
      budgets_(budgets) {}

std::shared_ptr<const FieldContext> FieldContext::create(std::uint32_t p, int r, int cache_degree,
                                                         Budgets budgets) {
  FieldPtr field = GaloisField::build(p, r);
  if (cache_degree <= 0) cache_degree = default_cache_degree(field->q());
  return std::shared_ptr<const FieldContext>(new FieldContext(std::move(field), cache_degree, budgets));
}

int FieldContext::default_cache_degree(std::uint32_t q) {
  constexpr std::uint64_t kTarget = 6561;  // 3^8
  int d = 0;
  std::uint64_t v = 1;
  while (v * q <= kTarget) {
    v *= q;
    ++d;
  }
  return d < 1 ? 1 : d;
}

Polynomial PolynomialSet::operator[](std::uint64_t i) const { return codec_.decode(code(i)); }

std::uint64_t PolynomialSet::code(std::uint64_t i) const {
  require(i < size_, "polynomial set index out of range");
  if (!explicit_.empty()) return explicit_[i];
  return offset_ + i;
}

PolynomialSet enumerate_set(const FieldContext& ctx, SetKind kind, int n) {
  PolynomialSet set;
  set.codec_ = ctx.codec();
  const double budget = ctx.budgets().enumeration;
  switch (kind) {
    case SetKind::G: {
      require(n >= 0, "G_n needs n >= 0");
      check_budget(power_estimate(ctx.q(), n), budget, "enumeration of G_" + std::to_string(n));
      set.size_ = checked_pow(ctx.q(), n);
      set.offset_ = 0;
      break;
    }
    case SetKind::MonicOfDegree: {
      require(n >= 0, "monic_of_degree needs n >= 0");
      check_budget(power_estimate(ctx.q(), n), budget,
                   "enumeration of monic polynomials of degree " + std::to_string(n));
      set.size_ = checked_pow(ctx.q(), n);
      set.offset_ = set.size_;  // the leading 1 sits at digit n
      break;
    }
    case SetKind::IrreducibleWindow: {
      require(n >= 1, "P_k needs k >= 1");
      const auto& table = ctx.irreducibles();
      require(n + 1 <= table.max_degree(),
              "P_" + std::to_string(n) + " needs irreducibles up to degree " + std::to_string(n + 1) +
                  " but the cache stops at " + std::to_string(table.max_degree()));
      for (int d : {n, n + 1}) {
        for (const Irreducible& irr : table.of_degree(d)) set.explicit_.push_back(irr.code);
      }
      set.size_ = set.explicit_.size();
      break;
    }
  }
  return set;
}

}  // namespace ffm
