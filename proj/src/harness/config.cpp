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

#include "harness/config.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "algebra/irreducible.hpp"
#include "analytics/statistics.hpp"
#include "analytics/tables.hpp"
#include "common/error.hpp"
#include "harness/objects.hpp"
#include "multfn/multiplicative.hpp"

namespace ffm {

namespace {

const std::map<std::string, ExperimentKind>& kind_table() {
  static const std::map<std::string, ExperimentKind> t = {
      {"decay-table", ExperimentKind::DecayTable},     {"distance-growth", ExperimentKind::DistanceGrowth},
      {"gowers-decay", ExperimentKind::GowersDecay},   {"ap-decay", ExperimentKind::ApDecay},
      {"katai-check", ExperimentKind::KataiCheck},     {"tk-check", ExperimentKind::TkCheck},
      {"bias-rank-demo", ExperimentKind::BiasRankDemo}, {"zero-count-check", ExperimentKind::ZeroCountCheck},
  };
  return t;
}

// keys accepted at top level beyond the common ones
const std::map<ExperimentKind, std::set<std::string>>& kind_keys() {
  static const std::map<ExperimentKind, std::set<std::string>> t = {
      {ExperimentKind::DecayTable, {"function", "test", "domain"}},
      {ExperimentKind::DistanceGrowth, {"function", "against", "window_low", "hayes"}},
      {ExperimentKind::GowersDecay, {"function", "test", "orders", "brute_force"}},
      {ExperimentKind::ApDecay, {"function", "functions", "k"}},
      {ExperimentKind::KataiCheck, {"function", "test", "k", "pair_set", "normalization"}},
      {ExperimentKind::TkCheck, {"W", "H"}},
      {ExperimentKind::BiasRankDemo, {"phase", "m", "mode", "samples"}},
      {ExperimentKind::ZeroCountCheck, {"systems", "phases", "dim"}},
  };
  return t;
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::string join_path(const std::string& base, const std::string& key) { return base + "/" + key; }

class Checker {
 public:
  std::vector<ConfigIssue> issues;

  void error(const std::string& path, const std::string& msg, bool budget = false) {
    issues.push_back({path, msg, budget, 0});
  }

  // Unknown keys are errors. A near miss of a missing required key is
  // reported once, with a hint, instead of twice.
  void check_keys(const nlohmann::json& obj, const std::string& path, const std::set<std::string>& allowed,
                  const std::set<std::string>& required, std::set<std::string>* suppressed = nullptr) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      if (allowed.count(it.key())) continue;
      std::string hint;
      for (const auto& r : required) {
        if (!obj.contains(r) && edit_distance(it.key(), r) <= 2) {
          hint = " (did you mean \"" + r + "\"?)";
          if (suppressed) suppressed->insert(r);
        }
      }
      error(join_path(path, it.key()), "unknown key \"" + it.key() + "\"" + hint);
    }
  }

  std::optional<std::int64_t> integer(const nlohmann::json& obj, const std::string& key, const std::string& path,
                                      std::optional<std::int64_t> fallback, std::int64_t lo, std::int64_t hi) {
    if (!obj.contains(key)) {
      if (!fallback) error(join_path(path, key), "missing required key \"" + key + "\"");
      return fallback;
    }
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) {
      error(join_path(path, key), "\"" + key + "\" must be an integer");
      return std::nullopt;
    }
    const auto x = v.get<std::int64_t>();
    if (x < lo || x > hi) {
      error(join_path(path, key), "\"" + key + "\" = " + std::to_string(x) + " outside [" + std::to_string(lo) + ", " +
                                      std::to_string(hi) + "]");
      return std::nullopt;
    }
    return x;
  }

  std::optional<double> number(const nlohmann::json& obj, const std::string& key, const std::string& path,
                               double fallback) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_number() || v.get<double>() <= 0) {
      error(join_path(path, key), "\"" + key + "\" must be a positive number");
      return std::nullopt;
    }
    return v.get<double>();
  }

  std::optional<std::string> choice(const nlohmann::json& obj, const std::string& key, const std::string& path,
                                    const std::string& fallback, const std::vector<std::string>& options) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_string() || std::find(options.begin(), options.end(), v.get<std::string>()) == options.end()) {
      std::string list;
      for (const auto& o : options) list += (list.empty() ? "" : ", ") + o;
      error(join_path(path, key), "\"" + key + "\" must be one of: " + list);
      return std::nullopt;
    }
    return v.get<std::string>();
  }

  // Runs f and records InvalidArgument / BudgetExceeded at path.
  template <class F>
  bool guard(const std::string& path, F&& f) {
    try {
      f();
      return true;
    } catch (const BudgetExceeded& e) {
      error(path, e.what(), true);
    } catch (const std::exception& e) {
      error(path, e.what());
    }
    return false;
  }
};

int line_of(const std::string& text, const std::string& path) {
  if (text.empty() || path.empty()) return 0;
  std::size_t pos = 0;
  bool found = false;
  std::stringstream ss(path.substr(1));
  std::string seg;
  while (std::getline(ss, seg, '/')) {
    if (!seg.empty() && std::all_of(seg.begin(), seg.end(), ::isdigit)) continue;
    auto at = text.find("\"" + seg + "\"", pos);
    if (at == std::string::npos) break;
    pos = at;
    found = true;
  }
  if (!found) return 0;
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(pos), '\n'));
}

double estimate_cost(ExperimentKind kind, const nlohmann::json& c, std::uint32_t q, std::uint32_t p, int r, int n,
                     const FieldContext& ctx, std::string& which) {
  const double qn = power_estimate(q, n);
  switch (kind) {
    case ExperimentKind::DecayTable:
      which = "enumeration";
      return qn;
    case ExperimentKind::DistanceGrowth:
      which = "evaluation";
      return 0.0;
    case ExperimentKind::GowersDecay: {
      which = "evaluation";
      double worst = qn;
      for (int k : c.at("orders").get<std::vector<int>>()) {
        worst = std::max(worst, (k == 2 && !c.at("brute_force").get<bool>()) ? qn * p * n * r : std::pow(qn, k));
      }
      return worst;
    }
    case ExperimentKind::ApDecay:
      which = "evaluation";
      return qn * qn * c.at("k").get<int>();
    case ExperimentKind::KataiCheck: {
      which = "evaluation";
      const int k = c.at("k").get<int>();
      double members = c.at("pair_set") == "P_k"
                           ? static_cast<double>(irreducible_count(q, k) + irreducible_count(q, k + 1))
                           : power_estimate(q, k + 1) - 1;
      return members * members * power_estimate(q, std::max(0, n - k));
    }
    case ExperimentKind::TkCheck:
      which = "evaluation";
      return qn * (c.at("H").get<int>() - c.at("W").get<int>());
    case ExperimentKind::BiasRankDemo:
      which = "evaluation";
      return c.at("mode") == "sampled" ? c.at("samples").get<double>() : std::pow(qn, c.at("m").get<int>());
    case ExperimentKind::ZeroCountCheck:
      which = "enumeration";
      return 0.0;
  }
  (void)ctx;
  return 0.0;
}

}  // namespace

ExperimentKind parse_experiment_kind(const std::string& s) {
  auto it = kind_table().find(s);
  if (it == kind_table().end()) throw InvalidArgument("unknown experiment kind \"" + s + "\"");
  return it->second;
}

std::string to_string(ExperimentKind k) {
  for (const auto& [name, kind] : kind_table())
    if (kind == k) return name;
  return "?";
}

std::vector<std::string> experiment_kind_names() {
  std::vector<std::string> out;
  for (const auto& [name, kind] : kind_table()) out.push_back(name);
  return out;
}

ConfigInvalid::ConfigInvalid(std::vector<ConfigIssue> issues)
    : std::runtime_error(issues.empty() ? "invalid config" : issues.front().path + ": " + issues.front().message),
      issues_(std::move(issues)) {}

bool ConfigInvalid::budget_only() const {
  return !issues_.empty() && std::all_of(issues_.begin(), issues_.end(), [](const auto& i) { return i.budget; });
}

std::string ConfigInvalid::report(const std::string& source) const {
  std::string out;
  for (const auto& i : issues_) {
    out += source;
    if (i.line > 0) out += ":" + std::to_string(i.line);
    out += ": error: " + (i.path.empty() ? std::string("/") : i.path) + ": " + i.message + "\n";
  }
  return out;
}

Budgets ExperimentConfig::budgets() const {
  const auto& b = normalized.at("budgets");
  Budgets out;
  out.enumeration = b.at("enumeration").get<double>();
  out.evaluation = b.at("evaluation").get<double>();
  out.group_size = b.at("group_size").get<double>();
  out.memo_entries = b.at("memo_entries").get<std::size_t>();
  return out;
}

std::optional<std::uint64_t> ExperimentConfig::seed() const {
  if (normalized.at("seed").is_null()) return std::nullopt;
  return normalized.at("seed").get<std::uint64_t>();
}

ContextPtr ExperimentConfig::make_context() const {
  return FieldContext::create(p(), r(), cache_degree(), budgets());
}

ExperimentConfig validate_config(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::string msg = e.what();
    int line = 0;
    if (e.byte > 0) {
      const auto upto = std::min<std::size_t>(e.byte, text.size());
      line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n'));
    }
    throw ConfigInvalid({{"", "malformed JSON: " + msg, false, line}});
  }
  return validate_config_json(j, text);
}

ExperimentConfig validate_config_json(const nlohmann::json& j, const std::string& text) {
  Checker ck;
  auto finish = [&]() {
    for (auto& i : ck.issues) i.line = line_of(text, i.path);
    throw ConfigInvalid(ck.issues);
  };
  if (!j.is_object()) {
    ck.error("", "config must be a JSON object");
    finish();
  }
  ExperimentConfig cfg;
  nlohmann::json out;

  // experiment kind decides which keys are allowed
  std::optional<ExperimentKind> kind;
  if (!j.contains("experiment")) {
    ck.error("/experiment", "missing required key \"experiment\"");
  } else if (!j.at("experiment").is_string()) {
    ck.error("/experiment", "\"experiment\" must be a string");
  } else {
    ck.guard("/experiment", [&] { kind = parse_experiment_kind(j.at("experiment").get<std::string>()); });
  }
  std::set<std::string> allowed = {"experiment", "field", "budgets", "seed", "n", "output"};
  std::set<std::string> required = {"experiment", "field"};
  if (kind) {
    const auto& extra = kind_keys().at(*kind);
    allowed.insert(extra.begin(), extra.end());
    if (*kind != ExperimentKind::ZeroCountCheck) required.insert("n");
    if (*kind == ExperimentKind::TkCheck) required.insert({"W", "H"});
    if (*kind == ExperimentKind::BiasRankDemo) required.insert("phase");
    if (*kind == ExperimentKind::DecayTable || *kind == ExperimentKind::DistanceGrowth ||
        *kind == ExperimentKind::GowersDecay)
      required.insert("function");
  }
  std::set<std::string> suppressed;
  ck.check_keys(j, "", allowed, required, &suppressed);
  if (!kind) finish();
  cfg.kind = *kind;
  out["experiment"] = to_string(*kind);

  // field
  std::optional<std::int64_t> p, r, cache;
  if (!j.contains("field")) {
    if (!suppressed.count("field")) ck.error("/field", "missing required key \"field\"");
  } else if (!j.at("field").is_object()) {
    ck.error("/field", "\"field\" must be an object with \"p\" and optional \"r\", \"cache_degree\"");
  } else {
    const auto& f = j.at("field");
    ck.check_keys(f, "/field", {"p", "r", "cache_degree"}, {"p"});
    p = ck.integer(f, "p", "/field", std::nullopt, 2, 1021);
    r = ck.integer(f, "r", "/field", 1, 1, 10);
    cache = ck.integer(f, "cache_degree", "/field", 0, 0, 64);
    if (p && r) out["field"] = {{"p", *p}, {"r", *r}, {"cache_degree", cache.value_or(0)}};
  }

  // budgets
  Budgets defaults;
  nlohmann::json b = j.value("budgets", nlohmann::json::object());
  if (!b.is_object()) {
    ck.error("/budgets", "\"budgets\" must be an object");
    b = nlohmann::json::object();
  }
  ck.check_keys(b, "/budgets", {"enumeration", "evaluation", "group_size", "memo_entries"}, {});
  out["budgets"] = {{"enumeration", ck.number(b, "enumeration", "/budgets", defaults.enumeration).value_or(defaults.enumeration)},
                    {"evaluation", ck.number(b, "evaluation", "/budgets", defaults.evaluation).value_or(defaults.evaluation)},
                    {"group_size", ck.number(b, "group_size", "/budgets", defaults.group_size).value_or(defaults.group_size)},
                    {"memo_entries", ck.integer(b, "memo_entries", "/budgets", static_cast<std::int64_t>(defaults.memo_entries), 0,
                                                std::int64_t{1} << 40)
                                         .value_or(static_cast<std::int64_t>(defaults.memo_entries))}};

  // seed
  std::optional<std::uint64_t> seed;
  if (j.contains("seed") && !j.at("seed").is_null()) {
    if (!j.at("seed").is_number_unsigned() && !(j.at("seed").is_number_integer() && j.at("seed").get<std::int64_t>() >= 0)) {
      ck.error("/seed", "\"seed\" must be a non-negative integer");
    } else {
      seed = j.at("seed").get<std::uint64_t>();
    }
  }
  out["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);

  // n range
  std::optional<std::int64_t> n_from, n_to;
  if (j.contains("n")) {
    const auto& n = j.at("n");
    if (n.is_number_integer()) {
      n_from = n_to = n.get<std::int64_t>();
      if (*n_from < 0 || *n_from > 64) {
        ck.error("/n", "\"n\" outside [0, 64]");
        n_from = n_to = std::nullopt;
      }
    } else if (n.is_object()) {
      ck.check_keys(n, "/n", {"from", "to"}, {"from", "to"});
      n_from = ck.integer(n, "from", "/n", std::nullopt, 0, 64);
      n_to = ck.integer(n, "to", "/n", std::nullopt, 0, 64);
      if (n_from && n_to && *n_from > *n_to) {
        ck.error("/n", "empty n range: from > to");
        n_from = n_to = std::nullopt;
      }
    } else {
      ck.error("/n", "\"n\" must be an integer or {\"from\": a, \"to\": b}");
    }
  } else if (*kind != ExperimentKind::ZeroCountCheck && !suppressed.count("n")) {
    ck.error("/n", "missing required key \"n\"");
  }
  if (*kind == ExperimentKind::ZeroCountCheck && !n_from) n_from = n_to = 0;
  if (n_from && n_to) out["n"] = {{"from", *n_from}, {"to", *n_to}};

  // output
  nlohmann::json o = j.value("output", nlohmann::json::object());
  if (!o.is_object()) {
    ck.error("/output", "\"output\" must be an object");
    o = nlohmann::json::object();
  }
  ck.check_keys(o, "/output", {"path", "format"}, {});
  std::string path;
  if (o.contains("path")) {
    if (o.at("path").is_string()) {
      path = o.at("path").get<std::string>();
    } else {
      ck.error("/output/path", "\"path\" must be a string");
    }
  }
  out["output"] = {{"path", path}, {"format", ck.choice(o, "format", "/output", "csv", {"csv", "json"}).value_or("csv")}};

  // the context is needed for descriptor checks
  ContextPtr ctx;
  if (out.contains("field")) {
    ck.guard("/field", [&] {
      Budgets bud;
      bud.enumeration = out["budgets"]["enumeration"].get<double>();
      bud.evaluation = out["budgets"]["evaluation"].get<double>();
      bud.group_size = out["budgets"]["group_size"].get<double>();
      bud.memo_entries = out["budgets"]["memo_entries"].get<std::size_t>();
      ctx = FieldContext::create(static_cast<std::uint32_t>(*p), static_cast<int>(*r), static_cast<int>(cache.value_or(0)), bud);
    });
  }
  const int ambient = static_cast<int>(n_to.value_or(0));

  auto function_desc = [&](const std::string& key, std::optional<nlohmann::json> fallback) {
    if (!j.contains(key)) {
      if (!fallback && !suppressed.count(key)) ck.error("/" + key, "missing required key \"" + key + "\"");
      if (fallback) out[key] = *fallback;
      return;
    }
    nlohmann::json d;
    if (!ck.guard("/" + key, [&] { d = resolve_function_seeds(j.at(key), seed); })) return;
    out[key] = d;
    if (ctx) ck.guard("/" + key, [&] { (void)MultiplicativeFunction::from_json(ctx, d); });
  };
  auto test_desc = [&](std::optional<nlohmann::json> fallback) {
    if (!j.contains("test")) {
      if (fallback) out["test"] = *fallback;
      return;
    }
    out["test"] = j.at("test");
    if (ctx) ck.guard("/test", [&] { check_test_descriptor(ctx, j.at("test"), ambient, seed); });
  };

  switch (*kind) {
    case ExperimentKind::DecayTable:
      function_desc("function", std::nullopt);
      if (!j.contains("test")) ck.error("/test", "missing required key \"test\"");
      test_desc(std::nullopt);
      if (auto d = ck.choice(j, "domain", "", "all", {"all", "nonzero", "monic"})) out["domain"] = *d;
      break;
    case ExperimentKind::DistanceGrowth: {
      function_desc("function", std::nullopt);
      function_desc("against", nlohmann::json("one"));
      if (auto w = ck.integer(j, "window_low", "", 0, 0, 64)) out["window_low"] = *w;
      if (j.contains("hayes")) {
        const auto& h = j.at("hayes");
        if (!h.is_object()) {
          ck.error("/hayes", "\"hayes\" must be an object");
        } else {
          ck.check_keys(h, "/hayes", {"modulus_bound", "length_bound", "grid"}, {});
          auto mb = ck.integer(h, "modulus_bound", "/hayes", 1, 0, 16);
          auto lb = ck.integer(h, "length_bound", "/hayes", 1, 0, 16);
          auto g = ck.integer(h, "grid", "/hayes", 16, 1, 1 << 16);
          if (mb && lb && g) out["hayes"] = {{"modulus_bound", *mb}, {"length_bound", *lb}, {"grid", *g}};
        }
      } else {
        out["hayes"] = nullptr;
      }
      if (ctx && out.contains("function") && out.contains("against") && n_to) {
        ck.guard("/n/to", [&] {
          auto f = MultiplicativeFunction::from_json(ctx, out["function"]);
          auto g = MultiplicativeFunction::from_json(ctx, out["against"]);
          if (*n_to > ctx->cache_degree()) {
            require(f.depends_only_on_degree() && g.depends_only_on_degree(),
                    "N = " + std::to_string(*n_to) + " exceeds the irreducible cache (degree " +
                        std::to_string(ctx->cache_degree()) + "); raise field.cache_degree");
            require(out["hayes"].is_null(), "the Hayes minimum needs N within the irreducible cache");
          }
        });
      }
      break;
    }
    case ExperimentKind::GowersDecay: {
      function_desc("function", std::nullopt);
      test_desc(nlohmann::json{{"type", "one"}});
      std::vector<int> orders = {1, 2};
      if (j.contains("orders")) {
        const auto& o2 = j.at("orders");
        bool ok = o2.is_array() && !o2.empty();
        if (ok)
          for (const auto& e : o2) ok &= e.is_number_integer() && e.get<int>() >= 1 && e.get<int>() <= 6;
        if (ok) {
          orders = o2.get<std::vector<int>>();
        } else {
          ck.error("/orders", "\"orders\" must be a nonempty array of integers in [1, 6]");
        }
      }
      out["orders"] = orders;
      out["brute_force"] = j.value("brute_force", false);
      break;
    }
    case ExperimentKind::ApDecay: {
      auto k = ck.integer(j, "k", "", 3, 2, 64);
      out["k"] = k.value_or(3);
      if (k && p && *k >= *p) ck.error("/k", "AP length k = " + std::to_string(*k) + " needs k < p = " + std::to_string(*p));
      if (j.contains("functions")) {
        const auto& fs = j.at("functions");
        if (!fs.is_array() || static_cast<std::int64_t>(fs.size()) != k.value_or(3)) {
          ck.error("/functions", "\"functions\" must list exactly k descriptors");
        } else {
          nlohmann::json resolved = nlohmann::json::array();
          for (std::size_t i = 0; i < fs.size(); ++i) {
            const std::string at = "/functions/" + std::to_string(i);
            nlohmann::json d;
            if (ck.guard(at, [&] { d = resolve_function_seeds(fs[i], seed); })) {
              if (ctx) ck.guard(at, [&] { (void)MultiplicativeFunction::from_json(ctx, d); });
              resolved.push_back(d);
            }
          }
          out["functions"] = resolved;
        }
      } else {
        function_desc("function", std::nullopt);
      }
      break;
    }
    case ExperimentKind::KataiCheck: {
      if (!j.contains("function") && !j.contains("test")) ck.error("/function", "katai-check needs \"function\" or \"test\"");
      if (j.contains("function")) function_desc("function", std::nullopt);
      test_desc(std::nullopt);
      out["k"] = ck.integer(j, "k", "", 3, 0, 32).value_or(3);
      out["pair_set"] = ck.choice(j, "pair_set", "", "P_k", {"P_k", "G_k+1"}).value_or("P_k");
      out["normalization"] = ck.choice(j, "normalization", "", "paper", {"paper", "per-pair"}).value_or("paper");
      if (ctx && n_from && out["k"].get<int>() + 1 > ctx->cache_degree() && out["pair_set"] == "P_k")
        ck.error("/k", "P_k needs irreducibles of degree k+1 within the cache (degree " + std::to_string(ctx->cache_degree()) + ")");
      if (n_from && out["k"].get<int>() + 1 > *n_from) ck.error("/k", "k + 1 must not exceed n");
      break;
    }
    case ExperimentKind::TkCheck: {
      auto W = ck.integer(j, "W", "", suppressed.count("W") ? std::optional<std::int64_t>(0) : std::nullopt, 0, 64);
      auto Hh = ck.integer(j, "H", "", suppressed.count("H") ? std::optional<std::int64_t>(2) : std::nullopt, 1, 64);
      if (W && Hh) {
        out["W"] = *W;
        out["H"] = *Hh;
        if (*W + 1 >= *Hh) ck.error("/H", "prime window W < deg p < H is empty");
        if (ctx && *Hh - 1 > ctx->cache_degree())
          ck.error("/H", "H - 1 = " + std::to_string(*Hh - 1) + " exceeds the irreducible cache (degree " +
                             std::to_string(ctx->cache_degree()) + ")");
      }
      break;
    }
    case ExperimentKind::BiasRankDemo: {
      out["mode"] = ck.choice(j, "mode", "", "exhaustive", {"exhaustive", "sampled"}).value_or("exhaustive");
      out["samples"] = ck.integer(j, "samples", "", 10000, 2, std::int64_t{1} << 40).value_or(10000);
      if (j.contains("phase")) {
        out["phase"] = j.at("phase");
        if (ctx) {
          ck.guard("/phase", [&] {
            auto P = build_phase(*ctx, j.at("phase"), ambient, seed);
            require(P.ambient() >= ambient, "phase lives on G_" + std::to_string(P.ambient()) + " but n reaches " +
                                                std::to_string(ambient));
            auto m = ck.integer(j, "m", "", std::max(1, P.degree()), 1, 64);
            if (m) {
              out["m"] = *m;
              (void)derivative_form(P, static_cast<int>(*m));
            }
          });
        }
      }
      if (!out.contains("m")) out["m"] = j.value("m", 1);
      break;
    }
    case ExperimentKind::ZeroCountCheck: {
      auto dim = ck.integer(j, "dim", "", 3, 1, 64);
      out["dim"] = dim.value_or(3);
      if (j.contains("phases") && j.contains("systems")) ck.error("/phases", "give either \"phases\" or \"systems\", not both");
      if (j.contains("phases")) {
        const auto& ph = j.at("phases");
        if (!ph.is_array()) {
          ck.error("/phases", "\"phases\" must be an array of phase descriptors");
        } else {
          out["phases"] = ph;
          out["systems"] = nullptr;
          for (std::size_t i = 0; i < ph.size(); ++i) {
            if (ctx) ck.guard("/phases/" + std::to_string(i), [&] { (void)build_phase(*ctx, ph[i], out["dim"].get<int>(), seed); });
          }
        }
      } else {
        nlohmann::json s = j.value("systems", nlohmann::json::object());
        if (!s.is_object()) {
          ck.error("/systems", "\"systems\" must be an object");
          s = nlohmann::json::object();
        }
        ck.check_keys(s, "/systems", {"count", "max_total_degree", "max_terms"}, {});
        out["systems"] = {{"count", ck.integer(s, "count", "/systems", 50, 1, 1 << 20).value_or(50)},
                          {"max_total_degree", ck.integer(s, "max_total_degree", "/systems", 3, 1, 16).value_or(3)},
                          {"max_terms", ck.integer(s, "max_terms", "/systems", 3, 1, 64).value_or(3)}};
        out["phases"] = nullptr;
        if (!seed) ck.error("/seed", "a seed is required for random systems");
      }
      if (ctx && dim) {
        const double cost = power_estimate(ctx->q(), static_cast<int>(*dim));
        if (cost > ctx->budgets().enumeration)
          ck.error("/dim", "dim = " + std::to_string(*dim) + ": enumerating q^dim costs " + format_count(cost) +
                               " > enumeration budget " + format_count(ctx->budgets().enumeration), true);
      }
      break;
    }
  }

  // budget estimates per n, only on an otherwise clean config
  if (ck.issues.empty() && ctx && n_from && n_to) {
    const auto& bud = ctx->budgets();
    for (std::int64_t n = *n_from; n <= *n_to; ++n) {
      if (*kind != ExperimentKind::ZeroCountCheck && *kind != ExperimentKind::DistanceGrowth) {
        const double size = power_estimate(ctx->q(), static_cast<int>(n));
        if (size > bud.enumeration) {
          ck.error("/n", "n = " + std::to_string(n) + ": tabulating G_n costs " + format_count(size) +
                             " > enumeration budget " + format_count(bud.enumeration),
                   true);
          break;
        }
      }
      std::string which;
      const double cost = estimate_cost(*kind, out, ctx->q(), ctx->p(), ctx->field().r(), static_cast<int>(n), *ctx, which);
      const double limit = which == "enumeration" ? bud.enumeration : bud.evaluation;
      if (cost > limit) {
        ck.error("/n", "n = " + std::to_string(n) + ": estimated cost " + format_count(cost) + " exceeds the " + which +
                           " budget " + format_count(limit),
                 true);
        break;
      }
    }
  }
  if (!ck.issues.empty()) finish();
  cfg.normalized = out;
  return cfg;
}

void apply_override(nlohmann::json& j, const std::string& assignment) {
  const auto eq = assignment.find('=');
  require(eq != std::string::npos && eq > 0, "override \"" + assignment + "\" must look like key.path=value");
  const std::string key = assignment.substr(0, eq);
  const std::string raw = assignment.substr(eq + 1);
  nlohmann::json value;
  try {
    value = nlohmann::json::parse(raw);
  } catch (const nlohmann::json::parse_error&) {
    value = raw;
  }
  nlohmann::json* node = &j;
  std::stringstream ss(key);
  std::string seg;
  std::vector<std::string> parts;
  while (std::getline(ss, seg, '.')) parts.push_back(seg);
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    if (!node->contains(parts[i]) || !(*node)[parts[i]].is_object()) (*node)[parts[i]] = nlohmann::json::object();
    node = &(*node)[parts[i]];
  }
  (*node)[parts.back()] = value;
}

}  // namespace ffm
