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

#include "characters/short_interval.hpp"

#include "common/error.hpp"

namespace ffm {

std::shared_ptr<const ShortIntervalGroup> ShortIntervalGroup::create(ContextPtr ctx, int s) {
  require(ctx != nullptr, "missing field context");
  require(s >= 0, "short interval length must be >= 0");
  check_budget(power_estimate(ctx->q(), s), ctx->budgets().group_size,
               "short interval group R_" + std::to_string(s));
  std::shared_ptr<ShortIntervalGroup> G(new ShortIntervalGroup());
  G->ctx_ = ctx;
  G->s_ = s;
  const std::uint64_t size = checked_pow(ctx->q(), s);
  G->structure_ = AbelianGroupStructure::decompose(
      size, 0, [&](std::size_t a, std::size_t b) { return G->multiply(a, b); }, ctx->budgets().group_size);
  return G;
}

std::uint64_t ShortIntervalGroup::multiply(std::uint64_t a, std::uint64_t b) const {
  const GaloisField& F = ctx_->field();
  const std::uint32_t q = F.q();
  const auto n = static_cast<std::size_t>(s_);
  // index 0 holds the constant 1 of the series
  std::vector<FieldElement> x(n + 1), y(n + 1), z(n + 1);
  x[0] = y[0] = F.one();
  for (std::size_t i = 1; i <= n; ++i) {
    x[i].code = static_cast<std::uint32_t>(a % q);
    a /= q;
    y[i].code = static_cast<std::uint32_t>(b % q);
    b /= q;
  }
  for (std::size_t i = 0; i <= n; ++i) {
    if (x[i].code == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) z[i + j] = F.add(z[i + j], F.mul(x[i], y[j]));
  }
  std::uint64_t code = 0;
  for (std::size_t i = n; i >= 1; --i) code = code * q + z[i].code;
  return code;
}

std::uint64_t ShortIntervalGroup::element_code(const Polynomial& g) const {
  require(!g.is_zero(), "short interval character of the zero polynomial");
  const GaloisField& F = ctx_->field();
  const int d = g.degree().value();
  const FieldElement inv = F.inv(g.leading());
  std::uint64_t code = 0;
  for (int i = s_; i >= 1; --i) {
    FieldElement a = d - i >= 0 ? F.mul(inv, g.coeff(static_cast<std::size_t>(d - i))) : FieldElement{};
    code = code * F.q() + a.code;
  }
  return code;
}

ShortIntervalCharacter::ShortIntervalCharacter(std::shared_ptr<const ShortIntervalGroup> group,
                                               std::size_t index, std::uint32_t unit_exponent)
    : group_(std::move(group)), index_(index), unit_exponent_(unit_exponent) {
  require(group_ != nullptr, "missing short interval group");
  exponents_ = group_->structure().character_vector(index);
  build_table();
}

ShortIntervalCharacter::ShortIntervalCharacter(std::shared_ptr<const ShortIntervalGroup> group,
                                               const std::vector<std::uint32_t>& exponents,
                                               std::uint32_t unit_exponent)
    : group_(std::move(group)), unit_exponent_(unit_exponent) {
  require(group_ != nullptr, "missing short interval group");
  index_ = group_->structure().character_index(exponents);
  exponents_ = exponents;
  build_table();
}

void ShortIntervalCharacter::build_table() {
  const std::uint32_t q = group_->context().q();
  require(unit_exponent_ < q - 1 || (q == 2 && unit_exponent_ == 0),
          "unit character exponent must lie in [0, q - 1)");
  auto table = std::make_shared<std::vector<UnitValue>>(group_->size());
  for (std::size_t x = 0; x < group_->size(); ++x) {
    (*table)[x] = UnitValue(group_->structure().character_angle(exponents_, x));
  }
  table_ = std::move(table);
}

int ShortIntervalCharacter::effective_length() const {
  const std::uint64_t q = group_->context().q();
  const int s = length();
  for (int t = 0; t < s; ++t) {
    // trivial on 1 + O(x^{-(t+1)}), i.e. on codes divisible by q^t
    const std::uint64_t stride = checked_pow(q, t);
    bool trivial = true;
    for (std::uint64_t c = 0; c < group_->size() && trivial; c += stride) {
      trivial = (*table_)[c] == UnitValue::one();
    }
    if (trivial) return t;
  }
  return s;
}

UnitValue ShortIntervalCharacter::operator()(const Polynomial& g) const {
  UnitValue v = on_element(group_->element_code(g));
  if (unit_exponent_ != 0) {
    const GaloisField& F = group_->context().field();
    std::uint64_t k = static_cast<std::uint64_t>(unit_exponent_) * F.discrete_log(g.leading());
    v *= UnitValue(Angle(static_cast<std::int64_t>(k % (F.q() - 1)), F.q() - 1));
  }
  return v;
}

std::vector<ShortIntervalCharacter> short_interval_characters(ContextPtr ctx, int s) {
  auto group = ShortIntervalGroup::create(std::move(ctx), s);
  std::vector<ShortIntervalCharacter> out;
  out.reserve(group->size());
  for (std::size_t i = 0; i < group->size(); ++i) out.emplace_back(group, i);
  return out;
}

}  // namespace ffm
