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

#include <ffmult/ffmult.h>

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr const char* kKinds[] = {"decay-table", "distance-growth", "gowers-decay",   "ap-decay",
                                  "katai-check", "tk-check",        "bias-rank-demo", "zero-count-check"};

struct CString {
  char* p = nullptr;
  ~CString() { ffmult_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct Overrides {
  std::optional<unsigned> p;
  std::optional<int> r, cache_degree, n_from, n_to;
  std::optional<unsigned long long> seed;
  std::optional<std::string> output, format, function, test;
  std::vector<std::string> sets;

  void attach(CLI::App* app) {
    app->add_option("--p", p, "Field characteristic");
    app->add_option("--r", r, "Extension degree");
    app->add_option("--cache-degree", cache_degree, "Irreducible cache degree");
    app->add_option("--n-from", n_from, "First n");
    app->add_option("--n-to", n_to, "Last n");
    app->add_option("--seed", seed, "Seed for random objects");
    app->add_option("--output", output, "Output path (stdout when empty)");
    app->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app->add_option("--function", function, "Function descriptor (builtin name or JSON)");
    app->add_option("--test", test, "Test descriptor (JSON)");
    app->add_option("--set", sets, "Override a config key: a.b.c=value (repeatable)");
  }

  std::vector<std::string> assignments() const {
    std::vector<std::string> out;
    if (p) out.push_back("field.p=" + std::to_string(*p));
    if (r) out.push_back("field.r=" + std::to_string(*r));
    if (cache_degree) out.push_back("field.cache_degree=" + std::to_string(*cache_degree));
    if (n_from) out.push_back("n.from=" + std::to_string(*n_from));
    if (n_to) out.push_back("n.to=" + std::to_string(*n_to));
    if (seed) out.push_back("seed=" + std::to_string(*seed));
    if (output) out.push_back("output.path=\"" + *output + "\"");
    if (format) out.push_back("output.format=" + *format);
    if (function) out.push_back("function=" + *function);
    if (test) out.push_back("test=" + *test);
    out.insert(out.end(), sets.begin(), sets.end());
    return out;
  }
};

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int apply_all(std::string& text, const std::vector<std::string>& assignments) {
  for (const auto& a : assignments) {
    CString out;
    const auto st = ffmult_config_override(text.c_str(), a.c_str(), &out.p);
    if (st != FFMULT_OK) {
      std::cerr << "error: override \"" << a << "\": " << ffmult_last_error() << "\n";
      return st;
    }
    text = out.str();
  }
  return 0;
}

int validate(const std::string& text, const std::string& source) {
  CString normalized, diagnostics;
  const auto st = ffmult_config_validate(text.c_str(), source.c_str(), &normalized.p, &diagnostics.p);
  if (st != FFMULT_OK) {
    std::cerr << diagnostics.str();
    return st;
  }
  std::cout << normalized.str();
  return 0;
}

int run(const std::string& text, const std::string& source) {
  CString output, diagnostics;
  const auto st = ffmult_config_run(text.c_str(), source.c_str(), &output.p, &diagnostics.p);
  if (st != FFMULT_OK) {
    std::cerr << diagnostics.str();
    return st;
  }
  std::cout << output.str();
  std::cout.flush();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Experiments with multiplicative functions over F_q[x]"};
  app.require_subcommand(0, 1);
  bool list_builtins = false;
  app.add_flag("--list-builtins", list_builtins, "Print builtin functions, descriptor types and experiment kinds");
  app.set_version_flag("--version", std::string(ffmult_version()));

  std::string run_path, validate_path;
  Overrides run_over, validate_over;
  auto* run_cmd = app.add_subcommand("run", "Run the experiment described by a config file");
  run_cmd->add_option("config", run_path, "Config file")->required();
  run_over.attach(run_cmd);
  auto* validate_cmd = app.add_subcommand("validate", "Validate a config file and print it normalized");
  validate_cmd->add_option("config", validate_path, "Config file")->required();
  validate_over.attach(validate_cmd);

  struct KindCommand {
    std::string kind;
    CLI::App* app = nullptr;
    std::string config;
    Overrides over;
  };
  std::vector<std::unique_ptr<KindCommand>> kinds;
  for (const char* k : kKinds) {
    auto cmd = std::make_unique<KindCommand>();
    cmd->kind = k;
    cmd->app = app.add_subcommand(k, std::string("Run a ") + k + " experiment built from flags");
    cmd->app->add_option("--config", cmd->config, "Base config file");
    cmd->over.attach(cmd->app);
    kinds.push_back(std::move(cmd));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (list_builtins) {
    CString s{ffmult_list_builtins()};
    std::cout << s.str();
    return 0;
  }

  auto load = [](const std::string& path, std::string& text) {
    auto t = read_file(path);
    if (!t) {
      std::cerr << path << ": error: cannot read config file\n";
      return false;
    }
    text = *t;
    return true;
  };

  std::string text;
  if (run_cmd->parsed() || validate_cmd->parsed()) {
    const bool is_run = run_cmd->parsed();
    const std::string& path = is_run ? run_path : validate_path;
    if (!load(path, text)) return 1;
    const auto assignments = (is_run ? run_over : validate_over).assignments();
    if (int st = apply_all(text, assignments)) return st;
    const std::string source = assignments.empty() ? path : path + " (with overrides)";
    return is_run ? run(text, source) : validate(text, source);
  }
  for (const auto& k : kinds) {
    if (!k->app->parsed()) continue;
    std::string source = "<flags>";
    text = "{}";
    if (!k->config.empty()) {
      if (!load(k->config, text)) return 1;
      source = k->config + " (with flags)";
    }
    auto assignments = k->over.assignments();
    assignments.insert(assignments.begin(), "experiment=\"" + k->kind + "\"");
    if (int st = apply_all(text, assignments)) return st;
    return run(text, source);
  }
  std::cout << app.help();
  return 0;
}
