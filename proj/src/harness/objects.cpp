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

#include "harness/objects.hpp"

#include <random>

#include "common/error.hpp"

namespace ffm {

nlohmann::json resolve_function_seeds(const nlohmann::json& desc, std::optional<std::uint64_t> seed) {
  if (!desc.is_object()) return desc;
  nlohmann::json out = desc;
  const std::string type = desc.value("type", "");
  if (type == "random" && !desc.contains("seed")) {
    require(seed.has_value(), "a seed is required for the random function (set \"seed\" at top level or in the descriptor)");
    out["seed"] = *seed;
  }
  if (type == "twist" && desc.contains("base")) out["base"] = resolve_function_seeds(desc.at("base"), seed);
  return out;
}

PolynomialPhase build_phase(const FieldContext& ctx, const nlohmann::json& desc, int ambient,
                            std::optional<std::uint64_t> seed) {
  require(desc.is_object(), "phase descriptor must be an object");
  if (desc.contains("random")) {
    for (auto it = desc.begin(); it != desc.end(); ++it) {
      require(it.key() == "random" || it.key() == "n", "unknown phase key \"" + it.key() + "\"");
    }
    const auto& r = desc.at("random");
    require(r.is_object(), "\"random\" must be an object");
    for (auto it = r.begin(); it != r.end(); ++it) {
      require(it.key() == "degree" || it.key() == "terms" || it.key() == "all_nonzero" || it.key() == "seed",
              "unknown random phase key \"" + it.key() + "\"");
    }
    std::optional<std::uint64_t> s = r.contains("seed") ? std::optional(r.at("seed").get<std::uint64_t>()) : seed;
    require(s.has_value(), "a seed is required for the random phase");
    const int n = desc.value("n", ambient);
    const int degree = r.value("degree", 1);
    const int terms = r.value("terms", 1);
    require(degree >= 0 && terms >= 1, "random phase needs degree >= 0 and terms >= 1");
    const bool all_nonzero = r.value("all_nonzero", true);
    std::mt19937_64 rng(*s);
    PolynomialPhase P(ctx.field_ptr(), n);
    for (int t = 0; t < terms; ++t) {
      std::vector<LaurentTruncation> factors;
      for (int i = 0; i < degree; ++i) factors.push_back(random_laurent(ctx.field(), n, rng, all_nonzero));
      P.add_term(ctx.field().one(), std::move(factors));
    }
    return P;
  }
  nlohmann::json j = desc;
  if (!j.contains("n")) j["n"] = ambient;
  return PolynomialPhase::from_json(ctx.field_ptr(), j);
}

namespace {

void check_test_keys(const nlohmann::json& test) {
  require(test.is_object(), "test descriptor must be an object");
  for (auto it = test.begin(); it != test.end(); ++it) {
    require(it.key() == "type" || it.key() == "phase" || it.key() == "character",
            "unknown test key \"" + it.key() + "\"");
  }
  const std::string type = test.value("type", "");
  require(type == "one" || type == "phase" || type == "character",
          "test \"type\" must be one, phase or character");
  if (type != "one") require(test.contains(type), "test of type " + type + " needs a \"" + type + "\" entry");
}

}  // namespace

void check_test_descriptor(const ContextPtr& ctx, const nlohmann::json& test, int ambient,
                           std::optional<std::uint64_t> seed) {
  check_test_keys(test);
  const std::string type = test.at("type").get<std::string>();
  if (type == "phase") {
    auto P = build_phase(*ctx, test.at("phase"), ambient, seed);
    require(P.ambient() >= ambient, "phase lives on G_" + std::to_string(P.ambient()) + " but n reaches " +
                                        std::to_string(ambient));
  } else if (type == "character") {
    (void)HayesCharacter::from_json(ctx, test.at("character"));
  }
}

FunctionTable tabulate_test(const ContextPtr& ctx, const nlohmann::json& test, int n, int ambient,
                            std::optional<std::uint64_t> seed) {
  check_test_keys(test);
  const std::string type = test.at("type").get<std::string>();
  if (type == "one") return constant_table(ctx->q(), n, 1.0);
  if (type == "phase") return tabulate_phase_character(build_phase(*ctx, test.at("phase"), ambient, seed), n);
  return tabulate_character(*ctx, HayesCharacter::from_json(ctx, test.at("character")), n);
}

}  // namespace ffm
