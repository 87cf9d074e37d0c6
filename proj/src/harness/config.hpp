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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "algebra/context.hpp"
#include "json.hpp"

namespace ffm {

enum class ExperimentKind {
  DecayTable,
  DistanceGrowth,
  GowersDecay,
  ApDecay,
  KataiCheck,
  TkCheck,
  BiasRankDemo,
  ZeroCountCheck,
};

ExperimentKind parse_experiment_kind(const std::string& s);
std::string to_string(ExperimentKind k);
std::vector<std::string> experiment_kind_names();

struct ConfigIssue {
  std::string path;  // JSON pointer, e.g. "/field/p"
  std::string message;
  bool budget = false;
  int line = 0;  // 1-based line in the source text, 0 when unknown
};

/// Every problem found in a config, reported together.
class ConfigInvalid : public std::runtime_error {
 public:
  explicit ConfigInvalid(std::vector<ConfigIssue> issues);

  const std::vector<ConfigIssue>& issues() const { return issues_; }
  /// True when every issue is a budget refusal.
  bool budget_only() const;
  /// One "source:line: error: path: message" line per issue.
  std::string report(const std::string& source) const;

 private:
  std::vector<ConfigIssue> issues_;
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::DecayTable;
  nlohmann::json normalized;  // every key present, defaults applied, seeds resolved

  std::uint32_t p() const { return normalized.at("field").at("p").get<std::uint32_t>(); }
  int r() const { return normalized.at("field").at("r").get<int>(); }
  int cache_degree() const { return normalized.at("field").at("cache_degree").get<int>(); }
  Budgets budgets() const;
  int n_from() const { return normalized.at("n").at("from").get<int>(); }
  int n_to() const { return normalized.at("n").at("to").get<int>(); }
  std::optional<std::uint64_t> seed() const;
  std::string output_path() const { return normalized.at("output").at("path").get<std::string>(); }
  std::string output_format() const { return normalized.at("output").at("format").get<std::string>(); }

  ContextPtr make_context() const;
};

/// Parses and validates JSON text. Throws ConfigInvalid listing every issue.
ExperimentConfig validate_config(const std::string& text);
ExperimentConfig validate_config_json(const nlohmann::json& j, const std::string& text = "");

/// Applies "a.b.c=value" overrides; value is parsed as JSON and falls back to
/// a plain string.
void apply_override(nlohmann::json& j, const std::string& assignment);

}  // namespace ffm
