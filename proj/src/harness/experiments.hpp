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
#include <ostream>
#include <string>
#include <vector>

#include "harness/config.hpp"
#include "json.hpp"

namespace ffm {

/// Receives one table: metadata and column names first, then rows in
/// increasing n.
class RowSink {
 public:
  virtual ~RowSink() = default;
  virtual void begin(const nlohmann::json& metadata, const std::vector<std::string>& columns) = 0;
  virtual void row(const std::vector<nlohmann::json>& cells) = 0;
  virtual void end() = 0;
};

/// "# ffmult <kind> v1" header, metadata comments, then a header line and
/// one flushed line per row. Floats print with %.17g; null cells are empty.
class CsvSink : public RowSink {
 public:
  explicit CsvSink(std::ostream& out) : out_(out) {}
  void begin(const nlohmann::json& metadata, const std::vector<std::string>& columns) override;
  void row(const std::vector<nlohmann::json>& cells) override;
  void end() override;

 private:
  std::ostream& out_;
};

/// A single JSON document written by end().
class JsonSink : public RowSink {
 public:
  explicit JsonSink(std::ostream& out) : out_(out) {}
  void begin(const nlohmann::json& metadata, const std::vector<std::string>& columns) override;
  void row(const std::vector<nlohmann::json>& cells) override;
  void end() override;

 private:
  std::ostream& out_;
  nlohmann::json doc_;
};

std::unique_ptr<RowSink> make_sink(const std::string& format, std::ostream& out);

/// Fixed column names for a kind (the distance table gains M, min_distance
/// and argmin when a Hayes scan is configured).
std::vector<std::string> experiment_columns(const ExperimentConfig& cfg);

/// Runs the experiment, streaming rows into the sink. Budget overruns found
/// at run time throw BudgetExceeded naming the offending n.
void run_experiment(const ExperimentConfig& cfg, RowSink& sink);

/// Runs into a string in the configured format.
std::string run_experiment_to_string(const ExperimentConfig& cfg);

/// Runs into cfg.output_path(), or the given stream when the path is empty.
void run_experiment_to_output(const ExperimentConfig& cfg, std::ostream& fallback);

}  // namespace ffm
