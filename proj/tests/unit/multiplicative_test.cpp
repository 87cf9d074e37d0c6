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

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "common/error.hpp"
#include "multfn/multiplicative.hpp"

namespace ffm {
namespace {

// Moebius on monic polynomials from sum_{d | g} mu(d) = [g = 1], using
// only polynomial division; no factorization involved.
std::map<std::uint64_t, int> moebius_by_divisor_sums(const FieldContext& ctx, int max_deg) {
  std::map<std::uint64_t, int> mu;
  std::vector<std::pair<Polynomial, std::uint64_t>> seen;
  for (int d = 0; d <= max_deg; ++d) {
    std::uint64_t lead = checked_pow(ctx.q(), d);
    for (std::uint64_t low = 0; low < lead; ++low) {
      std::uint64_t code = lead + low;
      Polynomial g = ctx.codec().decode(code);
      int acc = 0;
      for (const auto& [h, hc] : seen) {
        if (h.degree() < g.degree() && ctx.ring().mod(g, h).is_zero()) acc += mu[hc];
      }
      mu[code] = d == 0 ? 1 : -acc;
      seen.emplace_back(g, code);
    }
  }
  return mu;
}

TEST(Multiplicative, MoebiusExamples) {
  auto ctx = FieldContext::create(2, 1);
  auto mu = MultiplicativeFunction::builtin(ctx, "moebius");
  EXPECT_EQ(mu.eval(Polynomial{0, 1}), UnitValue::minus_one());
  EXPECT_EQ(mu.eval(Polynomial{0, 0, 1}), UnitValue::zero());
  EXPECT_EQ(mu.eval(Polynomial{0, 1, 1}), UnitValue::one());
  EXPECT_EQ(mu.eval(Polynomial{1}), UnitValue::one());
  EXPECT_EQ(mu.eval(Polynomial{}), UnitValue::zero());
  EXPECT_THROW(MultiplicativeFunction::builtin(ctx, "mobeius"), InvalidArgument);
}

TEST(Multiplicative, MoebiusMatchesDivisorSumOracle) {
  for (auto [p, deg] : std::vector<std::pair<std::uint32_t, int>>{{2, 9}, {3, 5}, {5, 3}}) {
    auto ctx = FieldContext::create(p, 1);
    auto mu = MultiplicativeFunction::builtin(ctx, "moebius");
    auto oracle = moebius_by_divisor_sums(*ctx, deg);
    for (const auto& [code, v] : oracle) {
      EXPECT_EQ(mu.eval(ctx->codec().decode(code)).to_complex(), std::complex<double>(v, 0)) << code;
    }
  }
}

TEST(Multiplicative, MoebiusSumOverGn) {
  auto ctx = FieldContext::create(2, 1);
  auto mu = MultiplicativeFunction::builtin(ctx, "moebius");
  for (int n = 3; n <= 12; ++n) {
    std::complex<double> acc = 0;
    for (std::uint64_t c = 0; c < checked_pow(2, n); ++c) acc += mu(ctx->codec().decode(c));
    EXPECT_EQ(acc, std::complex<double>(-1, 0)) << n;
  }
  // monic degree-d sums over F_3: 1, -3, 0, 0, ...
  auto c3 = FieldContext::create(3, 1);
  auto mu3 = MultiplicativeFunction::builtin(c3, "moebius");
  for (int d = 0; d <= 6; ++d) {
    double acc = 0;
    std::uint64_t lead = checked_pow(3, d);
    for (std::uint64_t low = 0; low < lead; ++low) acc += mu3(c3->codec().decode(lead + low)).real();
    EXPECT_EQ(acc, d == 0 ? 1.0 : (d == 1 ? -3.0 : 0.0));
  }
}

TEST(Multiplicative, BuiltinsAreBoundedOnG12) {
  auto ctx = FieldContext::create(2, 1);
  for (const auto& name : MultiplicativeFunction::builtin_names()) {
    auto f = MultiplicativeFunction::builtin(ctx, name);
    for (std::uint64_t c = 0; c < 4096; ++c) EXPECT_LE(std::abs(f(ctx->codec().decode(c))), 1.0 + 1e-15);
  }
}

TEST(Multiplicative, CoprimeMultiplicativityAndCacheTransparency) {
  auto ctx = FieldContext::create(3, 1);
  auto H = HayesCharacter::from_json(ctx, {{"modulus", {1, 1, 1}}, {"chi", 1}, {"length", 1}, {"xi", 1}});
  std::vector<MultiplicativeFunction> fs{
      MultiplicativeFunction::builtin(ctx, "moebius"),
      MultiplicativeFunction::builtin(ctx, "liouville"),
      MultiplicativeFunction::random_on_irreducibles(ctx, 3, RandomValues::UnitCircle),
      MultiplicativeFunction::from_character(ctx, H),
      MultiplicativeFunction::twist(MultiplicativeFunction::builtin(ctx, "moebius"), H, true),
  };
  std::mt19937_64 rng(17);
  const PolyRing& R = ctx->ring();
  int tested = 0;
  while (tested < 1000) {
    Polynomial a = ctx->codec().decode(1 + rng() % 242);
    Polynomial b = ctx->codec().decode(1 + rng() % 242);
    if (R.gcd(a, b).degree() != Degree::of(0)) continue;
    ++tested;
    for (const auto& f : fs) {
      EXPECT_EQ(f.eval(R.mul(a, b)), f.eval(a) * f.eval(b));
      EXPECT_EQ(f.eval(a), f.eval_uncached(a));
    }
  }
}

TEST(Multiplicative, RandomFunctionContract) {
  auto ctx = FieldContext::create(2, 1);
  auto f = MultiplicativeFunction::random_on_irreducibles(ctx, 42, RandomValues::PlusMinusOne);
  auto g = MultiplicativeFunction::random_on_irreducibles(ctx, 42, RandomValues::PlusMinusOne);
  auto h = MultiplicativeFunction::random_on_irreducibles(ctx, 43, RandomValues::PlusMinusOne);
  bool differs = false;
  for (std::uint64_t c = 0; c < 1024; ++c) {
    Polynomial x = ctx->codec().decode(c);
    EXPECT_EQ(f.eval(x), g.eval(x));
    differs |= !(f.eval(x) == h.eval(x));
  }
  EXPECT_TRUE(differs);
  EXPECT_EQ(f.eval(Polynomial{1}), UnitValue::one());
  for (const auto& p : ctx->irreducibles().of_degree(6)) {
    EXPECT_EQ(f.eval(ctx->ring().mul(p.poly, p.poly)), f.eval(p.poly).pow(2));
  }
  // 335 irreducibles of degree 12; a fair coin stays well inside [120, 215]
  int plus = 0;
  for (const auto& p : ctx->irreducibles().of_degree(12)) plus += f.eval(p.poly) == UnitValue::one();
  EXPECT_GT(plus, 120);
  EXPECT_LT(plus, 215);
  EXPECT_THROW(f.eval(Polynomial::monomial(FieldElement{1}, 13)), InvalidArgument);
}

TEST(Multiplicative, CharacterAndTwistExamples) {
  auto ctx = FieldContext::create(2, 1);
  auto one = MultiplicativeFunction::builtin(ctx, "one");
  auto trivial = MultiplicativeFunction::from_character(ctx, HayesCharacter());
  auto e13 = MultiplicativeFunction::from_character(ctx, HayesCharacter::twist_only(Angle(1, 3)));
  auto mu = MultiplicativeFunction::builtin(ctx, "moebius");
  auto mu_twisted = MultiplicativeFunction::twist(mu, HayesCharacter::twist_only(Angle(1, 2)));
  auto mu_trivial = MultiplicativeFunction::twist(mu, HayesCharacter());
  auto chi_x = HayesCharacter::from_json(ctx, {{"modulus", {0, 1}}});
  auto fx = MultiplicativeFunction::from_character(ctx, chi_x);
  auto one_twisted = MultiplicativeFunction::twist(one, chi_x);
  for (std::uint64_t c = 1; c < 2048; ++c) {
    Polynomial g = ctx->codec().decode(c);
    int d = g.degree().value();
    EXPECT_EQ(trivial.eval(g), one.eval(g));
    EXPECT_EQ(e13.eval(g), UnitValue(Angle(d, 3)));
    EXPECT_EQ(mu_twisted.eval(g), mu.eval(g) * (d % 2 ? UnitValue::minus_one() : UnitValue::one()));
    EXPECT_EQ(mu_trivial.eval(g), mu.eval(g));
    EXPECT_EQ(one_twisted.eval(g), fx.eval(g));
    EXPECT_TRUE(fx.eval(ctx->ring().mul(Polynomial{0, 1}, g)).is_zero());
  }
  EXPECT_TRUE(mu_twisted.depends_only_on_degree());
  EXPECT_FALSE(fx.depends_only_on_degree());
}

TEST(Multiplicative, DescriptorRoundTrip) {
  auto ctx = FieldContext::create(3, 1);
  nlohmann::json j = {{"type", "twist"},
                      {"base", {{"type", "random"}, {"seed", 9}, {"values", "circle"}}},
                      {"character", {{"modulus", {2, 1}}, {"chi", 1}, {"theta", "1/5"}}},
                      {"conjugate", true}};
  auto f = MultiplicativeFunction::from_json(ctx, j);
  auto g = MultiplicativeFunction::from_json(ctx, f.descriptor());
  for (std::uint64_t c = 0; c < 2187; ++c) EXPECT_EQ(f.eval(ctx->codec().decode(c)), g.eval(ctx->codec().decode(c)));
  EXPECT_THROW(MultiplicativeFunction::from_json(ctx, {{"type", "random"}}), InvalidArgument);
  EXPECT_THROW(MultiplicativeFunction::from_json(ctx, {{"type", "builtin"}, {"name", "one"}, {"nmae", 1}}),
               InvalidArgument);
}

}  // namespace
}  // namespace ffm
