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

#include <optional>

#include "characters/dirichlet.hpp"
#include "characters/short_interval.hpp"
#include "json.hpp"

namespace ffm {

/// e_theta(g) = e(theta deg g).
struct DegreeTwist {
  Angle theta;

  UnitValue operator()(const Polynomial& g) const;
};

/// chi * xi * e_theta; each factor defaults to the trivial one.
class HayesCharacter {
 public:
  HayesCharacter() = default;
  HayesCharacter(std::optional<DirichletCharacter> chi, std::optional<ShortIntervalCharacter> xi,
                 Angle theta = {});

  static HayesCharacter twist_only(Angle theta) { return HayesCharacter(std::nullopt, std::nullopt, theta); }

  const std::optional<DirichletCharacter>& chi() const { return chi_; }
  const std::optional<ShortIntervalCharacter>& xi() const { return xi_; }
  const Angle& theta() const { return twist_.theta; }

  bool is_trivial() const;
  /// True when the value depends on deg g alone (no nontrivial chi or xi).
  bool depends_only_on_degree() const;

  /// Throws InvalidArgument for g == 0.
  UnitValue operator()(const Polynomial& g) const;

  /// {"modulus": [...], "chi": [...], "length": s, "xi": [...],
  ///  "unit_exponent": k, "theta": "a/b"}; absent keys mean trivial.
  nlohmann::json to_json() const;
  static HayesCharacter from_json(const ContextPtr& ctx, const nlohmann::json& j);
  std::string describe() const;

 private:
  std::optional<DirichletCharacter> chi_;
  std::optional<ShortIntervalCharacter> xi_;
  DegreeTwist twist_;
};

/// Reads a polynomial from a JSON array of coefficient codes (lowest
/// first) or a single integer PolyCodec code.
Polynomial polynomial_from_json(const FieldContext& ctx, const nlohmann::json& j);
nlohmann::json polynomial_to_json(const Polynomial& g);

}  // namespace ffm
