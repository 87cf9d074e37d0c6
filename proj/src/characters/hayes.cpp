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

#include "characters/hayes.hpp"

#include <algorithm>

#include "common/error.hpp"

namespace ffm {

UnitValue DegreeTwist::operator()(const Polynomial& g) const {
  require(!g.is_zero(), "degree twist of the zero polynomial");
  return UnitValue(theta.times(g.degree().value()));
}

HayesCharacter::HayesCharacter(std::optional<DirichletCharacter> chi, std::optional<ShortIntervalCharacter> xi,
                               Angle theta)
    : chi_(std::move(chi)), xi_(std::move(xi)), twist_{theta} {
  if (chi_ && xi_) {
    require(&chi_->group().context() == &xi_->group().context(),
            "Hayes character factors live over different fields");
  }
}

bool HayesCharacter::is_trivial() const {
  return (!chi_ || (chi_->is_principal() && chi_->group().degree() == 0)) && (!xi_ || xi_->is_trivial()) &&
         twist_.theta == Angle::zero();
}

bool HayesCharacter::depends_only_on_degree() const {
  return (!chi_ || chi_->group().degree() == 0) && (!xi_ || xi_->is_trivial());
}

UnitValue HayesCharacter::operator()(const Polynomial& g) const {
  require(!g.is_zero(), "Hayes character of the zero polynomial");
  UnitValue v = twist_(g);
  if (chi_) v *= (*chi_)(g);
  if (xi_ && !v.is_zero()) v *= (*xi_)(g);
  return v;
}

Polynomial polynomial_from_json(const FieldContext& ctx, const nlohmann::json& j) {
  if (j.is_number_unsigned() || j.is_number_integer()) {
    require(j.get<std::int64_t>() >= 0, "polynomial code must be nonnegative");
    return ctx.codec().decode(j.get<std::uint64_t>());
  }
  require(j.is_array(), "polynomial must be an array of coefficient codes or an integer code");
  std::vector<FieldElement> c;
  for (const auto& e : j) {
    require(e.is_number_integer(), "polynomial coefficients must be integers");
    auto v = e.get<std::int64_t>();
    require(v >= 0 && v < static_cast<std::int64_t>(ctx.q()),
            "polynomial coefficient " + std::to_string(v) + " outside [0, q)");
    c.push_back(FieldElement{static_cast<std::uint32_t>(v)});
  }
  return Polynomial(std::move(c));
}

nlohmann::json polynomial_to_json(const Polynomial& g) {
  nlohmann::json j = nlohmann::json::array();
  for (auto c : g.coeffs()) j.push_back(c.code);
  return j;
}

nlohmann::json HayesCharacter::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  if (chi_) {
    j["modulus"] = polynomial_to_json(chi_->group().modulus());
    j["chi"] = chi_->exponents();
  }
  if (xi_) {
    j["length"] = xi_->length();
    j["xi"] = xi_->exponents();
    if (xi_->unit_exponent() != 0) j["unit_exponent"] = xi_->unit_exponent();
  }
  if (!(twist_.theta == Angle::zero())) j["theta"] = twist_.theta.to_string();
  return j;
}

namespace {

std::vector<std::uint32_t> index_vector(const nlohmann::json& j, const AbelianGroupStructure& G,
                                        const char* what) {
  if (j.is_number_integer()) {
    auto i = j.get<std::int64_t>();
    require(i >= 0 && static_cast<std::uint64_t>(i) < G.size(),
            std::string(what) + " index " + std::to_string(i) + " out of range");
    return G.character_vector(static_cast<std::size_t>(i));
  }
  require(j.is_array(), std::string(what) + " must be an index or an exponent vector");
  std::vector<std::uint32_t> v;
  for (const auto& e : j) {
    require(e.is_number_integer() && e.get<std::int64_t>() >= 0,
            std::string(what) + " exponents must be nonnegative integers");
    v.push_back(e.get<std::uint32_t>());
  }
  return v;
}

Angle angle_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Angle::parse(j.get<std::string>());
  if (j.is_number_integer()) return Angle(j.get<std::int64_t>(), 1);
  require(j.is_number(), "theta must be a string \"a/b\" or a number");
  return Angle::parse(j.dump());
}

}  // namespace

HayesCharacter HayesCharacter::from_json(const ContextPtr& ctx, const nlohmann::json& j) {
  require(j.is_object(), "character descriptor must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    static const std::vector<std::string> known{"modulus", "chi", "length", "xi", "unit_exponent", "theta"};
    require(std::find(known.begin(), known.end(), it.key()) != known.end(),
            "unknown character key \"" + it.key() + "\"");
  }
  std::optional<DirichletCharacter> chi;
  if (j.contains("modulus")) {
    auto group = DirichletGroup::create(ctx, polynomial_from_json(*ctx, j.at("modulus")));
    std::vector<std::uint32_t> v =
        j.contains("chi") ? index_vector(j.at("chi"), group->structure(), "chi")
                          : group->structure().character_vector(0);
    chi.emplace(group, v);
  } else {
    require(!j.contains("chi"), "\"chi\" given without \"modulus\"");
  }
  std::optional<ShortIntervalCharacter> xi;
  if (j.contains("length") || j.contains("xi") || j.contains("unit_exponent")) {
    int s = j.value("length", 0);
    auto group = ShortIntervalGroup::create(ctx, s);
    std::vector<std::uint32_t> v =
        j.contains("xi") ? index_vector(j.at("xi"), group->structure(), "xi") : group->structure().character_vector(0);
    xi.emplace(group, v, j.value("unit_exponent", 0u));
  }
  Angle theta = j.contains("theta") ? angle_from_json(j.at("theta")) : Angle::zero();
  return HayesCharacter(std::move(chi), std::move(xi), theta);
}

std::string HayesCharacter::describe() const { return to_json().dump(); }

}  // namespace ffm
