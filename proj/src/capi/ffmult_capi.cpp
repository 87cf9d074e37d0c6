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

#include "ffmult/ffmult.h"

#include <cstring>
#include <sstream>
#include <string>

#include "analytics/gowers.hpp"
#include "analytics/pretentious.hpp"
#include "analytics/tables.hpp"
#include "common/error.hpp"
#include "harness/config.hpp"
#include "harness/experiments.hpp"
#include "harness/objects.hpp"
#include "multfn/multiplicative.hpp"

struct ffmult_context {
  ffm::ContextPtr ctx;
};

struct ffmult_function {
  ffm::MultiplicativeFunction f;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_out(char** out, const std::string& s) {
  if (out) *out = dup_string(s);
}

ffmult_status fail(ffmult_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Maps exceptions to status codes; config problems also fill diagnostics.
template <class F>
ffmult_status guarded(F&& body, const char* source = nullptr, char** diagnostics = nullptr) {
  try {
    g_last_error.clear();
    body();
    return FFMULT_OK;
  } catch (const ffm::ConfigInvalid& e) {
    const std::string report = e.report(source ? source : "<config>");
    set_out(diagnostics, report);
    return fail(e.budget_only() ? FFMULT_BUDGET : FFMULT_INVALID, report);
  } catch (const ffm::BudgetExceeded& e) {
    set_out(diagnostics, std::string(e.what()) + "\n");
    return fail(FFMULT_BUDGET, e.what());
  } catch (const std::invalid_argument& e) {
    set_out(diagnostics, std::string(e.what()) + "\n");
    return fail(FFMULT_INVALID, e.what());
  } catch (const nlohmann::json::exception& e) {
    set_out(diagnostics, std::string(e.what()) + "\n");
    return fail(FFMULT_INVALID, e.what());
  } catch (const std::exception& e) {
    set_out(diagnostics, std::string(e.what()) + "\n");
    return fail(FFMULT_INTERNAL, e.what());
  } catch (...) {
    return fail(FFMULT_INTERNAL, "unknown error");
  }
}

void need(const void* p, const char* what) {
  if (!p) throw ffm::InvalidArgument(std::string(what) + " is NULL");
}

ffm::FunctionTable table_from_arrays(const ffmult_context* c, int n, const double* re, const double* im,
                                     std::size_t len) {
  need(c, "context");
  need(re, "re");
  ffm::require(n >= 0, "n must be >= 0");
  const std::uint64_t size = ffm::checked_pow(c->ctx->q(), n);
  ffm::require(len == size, "expected q^n = " + std::to_string(size) + " values, got " + std::to_string(len));
  ffm::FunctionTable t{c->ctx->q(), n, std::vector<std::complex<double>>(size)};
  for (std::size_t i = 0; i < size; ++i) t.values[i] = {re[i], im ? im[i] : 0.0};
  return t;
}

}  // namespace

extern "C" {

const char* ffmult_version(void) { return "0.1.0"; }

const char* ffmult_last_error(void) { return g_last_error.c_str(); }

void ffmult_string_free(char* s) { delete[] s; }

void ffmult_default_budgets(ffmult_budgets* out) {
  if (!out) return;
  ffm::Budgets b;
  *out = {b.enumeration, b.evaluation, b.group_size, b.memo_entries};
}

ffmult_status ffmult_context_create(uint32_t p, int r, int cache_degree, const ffmult_budgets* budgets,
                                    ffmult_context** out) {
  return guarded([&] {
    need(out, "out");
    ffm::Budgets b;
    if (budgets) {
      b.enumeration = budgets->enumeration;
      b.evaluation = budgets->evaluation;
      b.group_size = budgets->group_size;
      b.memo_entries = budgets->memo_entries;
    }
    *out = new ffmult_context{ffm::FieldContext::create(p, r, cache_degree, b)};
  });
}

void ffmult_context_free(ffmult_context* ctx) { delete ctx; }

uint32_t ffmult_context_q(const ffmult_context* ctx) { return ctx ? ctx->ctx->q() : 0; }

int ffmult_context_cache_degree(const ffmult_context* ctx) { return ctx ? ctx->ctx->cache_degree() : 0; }

ffmult_status ffmult_function_create(const ffmult_context* ctx, const char* descriptor, ffmult_function** out) {
  return guarded([&] {
    need(ctx, "context");
    need(descriptor, "descriptor");
    need(out, "out");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(descriptor);
    } catch (const nlohmann::json::parse_error&) {
      j = std::string(descriptor);
    }
    *out = new ffmult_function{ffm::MultiplicativeFunction::from_json(ctx->ctx, j)};
  });
}

void ffmult_function_free(ffmult_function* f) { delete f; }

ffmult_status ffmult_function_eval(const ffmult_function* f, const uint32_t* coeffs, size_t len, double* re,
                                   double* im) {
  return guarded([&] {
    need(f, "function");
    need(re, "re");
    ffm::require(len == 0 || coeffs != nullptr, "coeffs is NULL");
    std::vector<ffm::FieldElement> c(len);
    for (std::size_t i = 0; i < len; ++i) {
      ffm::require(coeffs[i] < f->f.context().q(), "coefficient code out of range");
      c[i] = ffm::FieldElement{coeffs[i]};
    }
    const auto v = f->f(ffm::Polynomial(std::move(c)));
    *re = v.real();
    if (im) *im = v.imag();
  });
}

ffmult_status ffmult_function_tabulate(const ffmult_function* f, int n, double* re, double* im, size_t len) {
  return guarded([&] {
    need(f, "function");
    need(re, "re");
    ffm::require(n >= 0, "n must be >= 0");
    const std::uint64_t size = ffm::checked_pow(f->f.context().q(), n);
    ffm::require(len == size, "expected q^n = " + std::to_string(size) + " slots, got " + std::to_string(len));
    const auto t = ffm::tabulate(f->f, n);
    for (std::size_t i = 0; i < size; ++i) {
      re[i] = t.values[i].real();
      if (im) im[i] = t.values[i].imag();
    }
  });
}

ffmult_status ffmult_correlate(const ffmult_function* f, const char* test, int n, const char* domain, double* re,
                               double* im) {
  return guarded([&] {
    need(f, "function");
    need(test, "test");
    need(re, "re");
    const auto& ctx = f->f.context_ptr();
    const auto j = nlohmann::json::parse(test);
    ffm::check_test_descriptor(ctx, j, n, std::nullopt);
    const auto r = ffm::correlate(ffm::tabulate(f->f, n), ffm::tabulate_test(ctx, j, n, n, std::nullopt),
                                  ffm::parse_domain(domain ? domain : "all"));
    *re = r.mean.real();
    if (im) *im = r.mean.imag();
  });
}

ffmult_status ffmult_distance(const ffmult_function* f, const ffmult_function* g, int N, int window_low,
                              double* out) {
  return guarded([&] {
    need(f, "f");
    need(g, "g");
    need(out, "out");
    *out = ffm::pretentious_distance(f->f, g->f, N, window_low).distance;
  });
}

ffmult_status ffmult_halasz_product(const ffmult_function* f, int n, double* re, double* im) {
  return guarded([&] {
    need(f, "function");
    need(re, "re");
    const auto v = ffm::halasz_product(f->f, n).value;
    *re = v.real();
    if (im) *im = v.imag();
  });
}

ffmult_status ffmult_mean_value(const ffmult_function* f, int n, const char* domain, double* re, double* im) {
  return guarded([&] {
    need(f, "function");
    need(re, "re");
    const auto v = ffm::mean_value(f->f, n, ffm::parse_domain(domain ? domain : "monic"));
    *re = v.real();
    if (im) *im = v.imag();
  });
}

ffmult_status ffmult_gowers_norm(const ffmult_context* ctx, int n, const double* re, const double* im, size_t len,
                                 int k, double* out) {
  return guarded([&] {
    need(out, "out");
    const auto t = table_from_arrays(ctx, n, re, im, len);
    *out = ffm::gowers_norm(ctx->ctx->field(), t, k, ctx->ctx->budgets().evaluation);
  });
}

ffmult_status ffmult_u2_fourier(const ffmult_context* ctx, int n, const double* re, const double* im, size_t len,
                                double* out) {
  return guarded([&] {
    need(out, "out");
    const auto t = table_from_arrays(ctx, n, re, im, len);
    *out = ffm::u2_fourier(ctx->ctx->field(), t, ctx->ctx->budgets().evaluation);
  });
}

ffmult_status ffmult_config_validate(const char* text, const char* source, char** normalized, char** diagnostics) {
  if (normalized) *normalized = nullptr;
  if (diagnostics) *diagnostics = nullptr;
  return guarded(
      [&] {
        need(text, "text");
        const auto cfg = ffm::validate_config(std::string(text));
        set_out(normalized, cfg.normalized.dump(2) + "\n");
      },
      source, diagnostics);
}

ffmult_status ffmult_config_override(const char* text, const char* assignment, char** out) {
  if (out) *out = nullptr;
  return guarded([&] {
    need(text, "text");
    need(assignment, "assignment");
    need(out, "out");
    auto j = std::string(text).empty() ? nlohmann::json::object() : nlohmann::json::parse(text);
    ffm::apply_override(j, assignment);
    *out = dup_string(j.dump(2));
  });
}

ffmult_status ffmult_config_run(const char* text, const char* source, char** output, char** diagnostics) {
  if (output) *output = nullptr;
  if (diagnostics) *diagnostics = nullptr;
  return guarded(
      [&] {
        need(text, "text");
        const auto cfg = ffm::validate_config(std::string(text));
        if (cfg.output_path().empty()) {
          need(output, "output");
          *output = dup_string(ffm::run_experiment_to_string(cfg));
        } else {
          std::ostringstream unused;
          ffm::run_experiment_to_output(cfg, unused);
        }
      },
      source, diagnostics);
}

char* ffmult_list_builtins(void) {
  nlohmann::json j;
  j["functions"] = ffm::MultiplicativeFunction::builtin_names();
  j["function_descriptors"] = {
      {{"type", "builtin"}, {"keys", {"name"}}},
      {{"type", "random"}, {"keys", {"seed", "values"}}, {"values", {"pm1", "circle"}}},
      {{"type", "character"}, {"keys", {"character"}}},
      {{"type", "twist"}, {"keys", {"base", "character", "conjugate"}}},
  };
  j["character_keys"] = {"modulus", "chi", "length", "xi", "unit_exponent", "theta"};
  j["tests"] = {"one", "phase", "character"};
  j["phase_descriptors"] = {{{"form", "explicit"}, {"keys", {"n", "terms", "monomials"}}},
                            {{"form", "random"}, {"keys", {"n", "random"}},
                             {"random_keys", {"degree", "terms", "all_nonzero", "seed"}}}};
  j["experiments"] = ffm::experiment_kind_names();
  j["domains"] = {"all", "nonzero", "monic"};
  j["pair_sets"] = {"P_k", "G_k+1"};
  return dup_string(j.dump(2) + "\n");
}

}  // extern "C"
