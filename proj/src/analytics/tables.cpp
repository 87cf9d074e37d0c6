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

#include "analytics/tables.hpp"

#include "common/error.hpp"
#include "common/reduce.hpp"

namespace ffm {

Domain parse_domain(const std::string& s) {
  if (s == "all") return Domain::All;
  if (s == "nonzero") return Domain::Nonzero;
  if (s == "monic") return Domain::Monic;
  throw InvalidArgument("unknown domain \"" + s + "\" (expected all, nonzero or monic)");
}

std::string to_string(Domain d) {
  switch (d) {
    case Domain::All:
      return "all";
    case Domain::Nonzero:
      return "nonzero";
    case Domain::Monic:
      return "monic";
  }
  return "all";
}

CodeArithmetic::CodeArithmetic(const GaloisField& F, int n)
    : q_(F.q()), p_(F.p()), n_(n), digits_(n * F.r()), size_(checked_pow(F.q(), n)) {}

std::uint64_t CodeArithmetic::add(std::uint64_t a, std::uint64_t b) const {
  if (p_ == 2) return a ^ b;
  std::uint64_t out = 0, scale = 1;
  for (int i = 0; i < digits_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

std::uint64_t CodeArithmetic::neg(std::uint64_t a) const { return times(-1, a); }

std::uint64_t CodeArithmetic::times(std::int64_t k, std::uint64_t a) const {
  const auto kk = static_cast<std::uint64_t>(((k % static_cast<std::int64_t>(p_)) + p_) % p_);
  if (p_ == 2) return kk ? a : 0;
  std::uint64_t out = 0, scale = 1;
  for (int i = 0; i < digits_; ++i) {
    out += (a % p_ * kk % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

std::uint32_t CodeArithmetic::leading(std::uint64_t a) const {
  while (a >= q_) a /= q_;
  return static_cast<std::uint32_t>(a);
}

bool CodeArithmetic::in_domain(std::uint64_t a, Domain d) const {
  switch (d) {
    case Domain::All:
      return true;
    case Domain::Nonzero:
      return a != 0;
    case Domain::Monic:
      return a != 0 && leading(a) == 1;
  }
  return true;
}

FunctionTable tabulate(const MultiplicativeFunction& f, int n) {
  const FieldContext& ctx = f.context();
  check_budget(power_estimate(ctx.q(), n), ctx.budgets().enumeration, "tabulating a function on G_" + std::to_string(n));
  FunctionTable t{ctx.q(), n, std::vector<std::complex<double>>(checked_pow(ctx.q(), n))};
  for (std::uint64_t c = 1; c < t.values.size(); ++c) t.values[c] = f(ctx.codec().decode(c));
  return t;
}

FunctionTable tabulate_phase_character(const PolynomialPhase& P, int n) {
  const GaloisField& F = P.field();
  auto vals = tabulate(P, n);
  FunctionTable t{F.q(), n, std::vector<std::complex<double>>(vals.size())};
  for (std::size_t c = 0; c < vals.size(); ++c) t.values[c] = F.root_of_unity(F.trace(vals[c]));
  return t;
}

FunctionTable tabulate_character(const FieldContext& ctx, const HayesCharacter& H, int n) {
  check_budget(power_estimate(ctx.q(), n), ctx.budgets().enumeration, "tabulating a character on G_" + std::to_string(n));
  FunctionTable t{ctx.q(), n, std::vector<std::complex<double>>(checked_pow(ctx.q(), n))};
  for (std::uint64_t c = 1; c < t.values.size(); ++c) t.values[c] = H(ctx.codec().decode(c)).to_complex();
  return t;
}

FunctionTable constant_table(std::uint32_t q, int n, std::complex<double> v) {
  return FunctionTable{q, n, std::vector<std::complex<double>>(checked_pow(q, n), v)};
}

FunctionTable pointwise_product(const FunctionTable& a, const FunctionTable& b) {
  require(a.q == b.q && a.n == b.n, "function tables live on different G_n");
  FunctionTable out{a.q, a.n, a.values};
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] *= b.values[i];
  return out;
}

nlohmann::json CorrelationResult::to_json() const {
  return {{"re", mean.real()}, {"im", mean.imag()}, {"abs", std::abs(mean)}, {"count", count},
          {"domain", to_string(domain)}};
}

CorrelationResult correlate(const FunctionTable& nu, const FunctionTable& t, Domain domain) {
  require(nu.q == t.q && nu.n == t.n && nu.size() == t.size(), "correlated functions live on different G_n");
  CorrelationResult out;
  out.domain = domain;
  if (domain == Domain::All) {
    out.count = nu.size();
    out.mean = deterministic_sum(nu.size(), [&](std::uint64_t c) { return nu[c] * t[c]; });
  } else {
    const std::uint32_t q = nu.q;
    auto monic = [q](std::uint64_t c) {
      while (c >= q) c /= q;
      return c == 1;
    };
    std::uint64_t count = 0;
    for (std::uint64_t c = 1; c < nu.size(); ++c) count += domain == Domain::Nonzero || monic(c);
    out.count = count;
    out.mean = deterministic_sum(nu.size(), [&](std::uint64_t c) -> std::complex<double> {
      if (c == 0 || (domain == Domain::Monic && !monic(c))) return 0.0;
      return nu[c] * t[c];
    });
  }
  require(out.count > 0, "empty correlation domain");
  out.mean /= static_cast<double>(out.count);
  return out;
}

}  // namespace ffm
