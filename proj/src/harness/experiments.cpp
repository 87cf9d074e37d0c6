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

#include "harness/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "analytics/gowers.hpp"
#include "analytics/pretentious.hpp"
#include "analytics/statistics.hpp"
#include "analytics/tables.hpp"
#include "common/error.hpp"
#include "harness/objects.hpp"
#include "phases/multilinear.hpp"
#include "phases/zeros.hpp"

namespace ffm {

namespace {

constexpr const char* kFormatVersion = "v1";

std::string format_cell(const nlohmann::json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return v.dump();
  if (v.is_number_float()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
    return buf;
  }
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

nlohmann::json opt(const std::optional<int>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }

std::uint64_t seed_or_zero(const ExperimentConfig& cfg) { return cfg.seed().value_or(0); }

void run_decay(const ExperimentConfig& cfg, const ContextPtr& ctx, RowSink& sink) {
  const auto& c = cfg.normalized;
  auto f = MultiplicativeFunction::from_json(ctx, c.at("function"));
  const Domain domain = parse_domain(c.at("domain").get<std::string>());
  for (int n = cfg.n_from(); n <= cfg.n_to(); ++n) {
    auto nu = tabulate(f, n);
    auto t = tabulate_test(ctx, c.at("test"), n, cfg.n_to(), cfg.seed());
    auto r = correlate(nu, t, domain);
    sink.row({n, r.mean.real(), r.mean.imag(), std::abs(r.mean), r.count});
  }
}

void run_distance(const ExperimentConfig& cfg, const ContextPtr& ctx, RowSink& sink) {
  const auto& c = cfg.normalized;
  auto f = MultiplicativeFunction::from_json(ctx, c.at("function"));
  auto g = MultiplicativeFunction::from_json(ctx, c.at("against"));
  auto series = pretentious_series(f, g, cfg.n_to(), c.at("window_low").get<int>());
  for (int n = std::max(1, cfg.n_from()); n <= cfg.n_to(); ++n) {
    const auto& d = series[static_cast<std::size_t>(n - 1)];
    std::vector<nlohmann::json> cells = {n, d.distance, d.squared, d.method};
    if (!c.at("hayes").is_null()) {
      const auto& h = c.at("hayes");
      auto m = min_distance_over_hayes(f, n, h.at("modulus_bound").get<int>(), h.at("length_bound").get<int>(),
                                       h.at("grid").get<int>());
      cells.push_back(m.M);
      cells.push_back(m.min_distance);
      cells.push_back(m.argmin.to_json().dump());
    }
    sink.row(cells);
  }
}

void run_gowers(const ExperimentConfig& cfg, const ContextPtr& ctx, RowSink& sink) {
  const auto& c = cfg.normalized;
  auto f = MultiplicativeFunction::from_json(ctx, c.at("function"));
  const auto orders = c.at("orders").get<std::vector<int>>();
  const bool brute = c.at("brute_force").get<bool>();
  const double budget = ctx->budgets().evaluation;
  for (int n = cfg.n_from(); n <= cfg.n_to(); ++n) {
    auto table = pointwise_product(tabulate(f, n), tabulate_test(ctx, c.at("test"), n, cfg.n_to(), cfg.seed()));
    std::vector<nlohmann::json> cells = {n};
    for (int k : orders) {
      try {
        cells.push_back(k == 2 && !brute ? u2_fourier(ctx->field(), table, budget)
                                         : gowers_norm(ctx->field(), table, k, budget));
      } catch (const BudgetExceeded& e) {
        throw BudgetExceeded("n = " + std::to_string(n) + ": U^" + std::to_string(k), e.cost(), e.budget());
      }
    }
    sink.row(cells);
  }
}

void run_ap(const ExperimentConfig& cfg, const ContextPtr& ctx, RowSink& sink) {
  const auto& c = cfg.normalized;
  std::vector<MultiplicativeFunction> fs;
  if (c.contains("functions")) {
    for (const auto& d : c.at("functions")) fs.push_back(MultiplicativeFunction::from_json(ctx, d));
  } else {
    const int k = c.at("k").get<int>();
    for (int i = 0; i < k; ++i) fs.push_back(MultiplicativeFunction::from_json(ctx, c.at("function")));
  }
  for (int n = cfg.n_from(); n <= cfg.n_to(); ++n) {
    std::vector<FunctionTable> tables;
    for (const auto& f : fs) tables.push_back(tabulate(f, n));
    ApCorrelation r;
    try {
      r = ap_correlation(ctx->field(), tables, ctx->budgets().evaluation);
    } catch (const BudgetExceeded& e) {
      throw BudgetExceeded("n = " + std::to_string(n) + ": AP correlation", e.cost(), e.budget());
    }
    sink.row({n, r.mean.real(), r.mean.imag(), std::abs(r.mean), r.bound, r.holds});
  }
}

void run_katai(const ExperimentConfig& cfg, const ContextPtr& ctx, RowSink& sink) {
  const auto& c = cfg.normalized;
  const int k = c.at("k").get<int>();
  const PairSet pairs = parse_pair_set(c.at("pair_set").get<std::string>());
  const KataiNormalization norm = parse_katai_normalization(c.at("normalization").get<std::string>());
  std::optional<MultiplicativeFunction> f;
  if (c.contains("function")) f = MultiplicativeFunction::from_json(ctx, c.at("function"));
  for (int n = cfg.n_from(); n <= cfg.n_to(); ++n) {
    std::optional<FunctionTable> table;
    if (f) table = tabulate(*f, n);
    if (c.contains("test")) {
      auto t = tabulate_test(ctx, c.at("test"), n, cfg.n_to(), cfg.seed());
      table = table ? pointwise_product(*table, t) : t;
    }
    auto r = katai_statistic(*ctx, *table, k, pairs, norm);
    sink.row({n, r.statistic, r.diagonal_share, r.pair_set_size});
  }
}

void run_tk(const ExperimentConfig& cfg, const ContextPtr& ctx, RowSink& sink) {
  const int W = cfg.normalized.at("W").get<int>();
  const int H = cfg.normalized.at("H").get<int>();
  for (int n = cfg.n_from(); n <= cfg.n_to(); ++n) {
    auto r = turan_kubilius(*ctx, n, W, H);
    sink.row({n, r.A, r.lhs, r.ratio, r.window_primes});
  }
}

void run_bias(const ExperimentConfig& cfg, const ContextPtr& ctx, RowSink& sink) {
  const auto& c = cfg.normalized;
  const int m = c.at("m").get<int>();
  const bool sampled = c.at("mode") == "sampled";
  const double q = ctx->q();
  for (int n = cfg.n_from(); n <= cfg.n_to(); ++n) {
    auto P = build_phase(*ctx, c.at("phase"), n, cfg.seed());
    auto Q = derivative_form(P, m);
    BiasResult b;
    try {
      b = sampled ? bias_sampled(Q, c.at("samples").get<std::uint64_t>(), seed_or_zero(cfg))
                  : bias_exhaustive(Q, ctx->budgets().evaluation);
    } catch (const BudgetExceeded& e) {
      throw BudgetExceeded("n = " + std::to_string(n) + ": bias of d^mP", e.cost(), e.budget());
    }
    auto pb = rank_upper_bounds(P);
    auto qb = rank_upper_bounds(Q);
    nlohmann::json floor = nullptr, holds = nullptr;
    if (qb.partition_upper) {
      const double fl = std::pow(q, -*qb.partition_upper);
      floor = fl;
      holds = b.bias >= fl - 1e-9 - 3.0 * b.std_error;
    }
    sink.row({n, b.bias, b.analytic_rank, b.std_error, opt(pb.schmidt_upper), opt(qb.partition_upper),
              opt(qb.derivative_bound), floor, holds});
  }
}

void run_zero_count(const ExperimentConfig& cfg, const ContextPtr& ctx, RowSink& sink) {
  const auto& c = cfg.normalized;
  const int dim = c.at("dim").get<int>();
  const double budget = ctx->budgets().enumeration;
  auto emit = [&](int trial, const std::vector<PolynomialPhase>& system) {
    auto z = projective_common_zeros(ctx->field_ptr(), system, dim, budget);
    sink.row({trial, dim, z.total_degree, system.size(), z.count, z.projective_size, z.bound, z.passes});
  };
  if (!c.at("phases").is_null()) {
    std::vector<PolynomialPhase> system;
    for (const auto& d : c.at("phases")) system.push_back(build_phase(*ctx, d, dim, cfg.seed()));
    emit(0, system);
    return;
  }
  const auto& s = c.at("systems");
  const int count = s.at("count").get<int>();
  const auto max_degree = s.at("max_total_degree").get<std::uint64_t>();
  const int max_terms = s.at("max_terms").get<int>();
  std::mt19937_64 rng(seed_or_zero(cfg));
  for (int trial = 0; trial < count; ++trial) {
    const int D = 1 + static_cast<int>(rng() % max_degree);
    emit(trial, random_homogeneous_system(ctx->field_ptr(), dim, D, max_terms, rng));
  }
}

}  // namespace

void CsvSink::begin(const nlohmann::json& metadata, const std::vector<std::string>& columns) {
  out_ << "# ffmult " << metadata.at("experiment").get<std::string>() << " " << kFormatVersion << "\n";
  for (auto it = metadata.begin(); it != metadata.end(); ++it) {
    if (it.key() == "experiment") continue;
    out_ << "# " << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
  }
  for (std::size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << columns[i];
  out_ << "\n";
  out_.flush();
}

void CsvSink::row(const std::vector<nlohmann::json>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << format_cell(cells[i]);
  out_ << "\n";
  out_.flush();
}

void CsvSink::end() { out_.flush(); }

void JsonSink::begin(const nlohmann::json& metadata, const std::vector<std::string>& columns) {
  doc_ = {{"format", "ffmult " + metadata.at("experiment").get<std::string>() + " " + kFormatVersion},
          {"metadata", metadata},
          {"columns", columns},
          {"rows", nlohmann::json::array()}};
}

void JsonSink::row(const std::vector<nlohmann::json>& cells) { doc_["rows"].push_back(cells); }

void JsonSink::end() {
  out_ << doc_.dump(2) << "\n";
  out_.flush();
}

std::unique_ptr<RowSink> make_sink(const std::string& format, std::ostream& out) {
  if (format == "csv") return std::make_unique<CsvSink>(out);
  if (format == "json") return std::make_unique<JsonSink>(out);
  throw InvalidArgument("unknown output format \"" + format + "\"");
}

std::vector<std::string> experiment_columns(const ExperimentConfig& cfg) {
  switch (cfg.kind) {
    case ExperimentKind::DecayTable:
      return {"n", "re", "im", "abs", "count"};
    case ExperimentKind::DistanceGrowth: {
      std::vector<std::string> cols = {"n", "distance", "squared", "method"};
      if (!cfg.normalized.at("hayes").is_null()) cols.insert(cols.end(), {"M", "min_distance", "argmin"});
      return cols;
    }
    case ExperimentKind::GowersDecay: {
      std::vector<std::string> cols = {"n"};
      for (int k : cfg.normalized.at("orders").get<std::vector<int>>()) cols.push_back("U" + std::to_string(k));
      return cols;
    }
    case ExperimentKind::ApDecay:
      return {"n", "re", "im", "abs", "bound", "holds"};
    case ExperimentKind::KataiCheck:
      return {"n", "statistic", "diagonal_share", "pair_set_size"};
    case ExperimentKind::TkCheck:
      return {"n", "A", "lhs", "ratio", "window_primes"};
    case ExperimentKind::BiasRankDemo:
      return {"n",           "bias",          "analytic_rank",    "std_error",  "schmidt_upper",
              "partition_upper", "derivative_bound", "bias_floor", "floor_holds"};
    case ExperimentKind::ZeroCountCheck:
      return {"trial", "dim", "D", "equations", "count", "projective_size", "bound", "passes"};
  }
  return {};
}

void run_experiment(const ExperimentConfig& cfg, RowSink& sink) {
  auto ctx = cfg.make_context();
  nlohmann::json meta = cfg.normalized;
  meta["field"]["cache_degree"] = ctx->cache_degree();
  if (cfg.kind == ExperimentKind::DistanceGrowth) meta["summation"] = "clamped per prime; degree rule beyond the cache";
  meta.erase("output");
  sink.begin(meta, experiment_columns(cfg));
  switch (cfg.kind) {
    case ExperimentKind::DecayTable: run_decay(cfg, ctx, sink); break;
    case ExperimentKind::DistanceGrowth: run_distance(cfg, ctx, sink); break;
    case ExperimentKind::GowersDecay: run_gowers(cfg, ctx, sink); break;
    case ExperimentKind::ApDecay: run_ap(cfg, ctx, sink); break;
    case ExperimentKind::KataiCheck: run_katai(cfg, ctx, sink); break;
    case ExperimentKind::TkCheck: run_tk(cfg, ctx, sink); break;
    case ExperimentKind::BiasRankDemo: run_bias(cfg, ctx, sink); break;
    case ExperimentKind::ZeroCountCheck: run_zero_count(cfg, ctx, sink); break;
  }
  sink.end();
}

std::string run_experiment_to_string(const ExperimentConfig& cfg) {
  std::ostringstream out;
  auto sink = make_sink(cfg.output_format(), out);
  run_experiment(cfg, *sink);
  return out.str();
}

void run_experiment_to_output(const ExperimentConfig& cfg, std::ostream& fallback) {
  if (cfg.output_path().empty()) {
    auto sink = make_sink(cfg.output_format(), fallback);
    run_experiment(cfg, *sink);
    return;
  }
  std::ofstream file(cfg.output_path(), std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open output file " + cfg.output_path());
  auto sink = make_sink(cfg.output_format(), file);
  run_experiment(cfg, *sink);
}

}  // namespace ffm
