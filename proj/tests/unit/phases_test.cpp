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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "algebra/context.hpp"
#include "common/error.hpp"
#include "phases/multilinear.hpp"
#include "phases/zeros.hpp"

namespace ffm {
namespace {

PolynomialPhase random_phase(const FieldPtr& F, int n, int max_deg, int terms, std::mt19937_64& rng,
                             bool with_monomials) {
  PolynomialPhase P(F, n);
  for (int t = 0; t < terms; ++t) {
    int k = static_cast<int>(rng() % static_cast<std::uint64_t>(max_deg + 1));
    std::vector<LaurentTruncation> f;
    for (int i = 0; i < k; ++i) f.push_back(random_laurent(*F, n + static_cast<int>(rng() % 3), rng, false));
    P.add_term(FieldElement{static_cast<std::uint32_t>(rng() % F->q())}, f);
  }
  if (with_monomials) {
    for (int t = 0; t < 2; ++t) {
      std::vector<std::pair<int, int>> pw;
      int left = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_deg));
      while (left > 0) {
        int e = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(left));
        pw.emplace_back(static_cast<int>(rng() % static_cast<std::uint64_t>(n)), e);
        left -= e;
      }
      P.add_monomial(FieldElement{1 + static_cast<std::uint32_t>(rng() % (F->q() - 1))}, pw);
    }
  }
  return P;
}

// Homogeneous structured phase of degree m.
PolynomialPhase random_homogeneous(const FieldPtr& F, int n, int m, int terms, std::mt19937_64& rng) {
  PolynomialPhase P(F, n);
  for (int t = 0; t < terms; ++t) {
    std::vector<LaurentTruncation> f;
    for (int i = 0; i < m; ++i) f.push_back(random_laurent(*F, n, rng, false));
    P.add_term(FieldElement{1 + static_cast<std::uint32_t>(rng() % (F->q() - 1))}, f);
  }
  return P;
}

FieldElement factorial(const GaloisField& F, int m) {
  FieldElement r = F.from_int(1);
  for (int i = 2; i <= m; ++i) r = F.mul(r, F.from_int(static_cast<std::uint64_t>(i)));
  return r;
}

TEST(Phases, EvaluationExamples) {
  auto F = GaloisField::build(5, 1);
  PolynomialPhase P(F, 3);
  EXPECT_EQ(P(Polynomial{1, 2, 3}).code, 0u);
  auto L = LaurentTruncation::coordinate(0, 3);
  P.add_term(FieldElement{1}, {L, L});
  EXPECT_EQ(P(Polynomial{2, 4}).code, 4u);
  EXPECT_THROW(P(Polynomial{0, 0, 0, 1}), InvalidArgument);
  PolynomialPhase Q(F, 4);
  EXPECT_THROW(Q.add_term(FieldElement{1}, {L}), InvalidArgument);
  PolynomialPhase lin(F, 3);
  LaurentTruncation beta({FieldElement{1}, FieldElement{3}, FieldElement{2}});
  lin.add_term(FieldElement{1}, {beta});
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    auto g = random_polynomial(*F, 3, rng);
    EXPECT_EQ(lin(g), linear_form(*F, beta, g));
  }
}

TEST(Phases, DeltaMatchesPointwiseDifference) {
  std::mt19937_64 rng(7);
  int checked = 0;
  for (auto [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 1}, {3, 1}, {2, 2}, {7, 1}}) {
    auto F = GaloisField::build(p, r);
    PolyRing R(*F);
    for (int trial = 0; trial < 250; ++trial) {
      auto P = random_phase(F, 4, 3, 3, rng, trial % 2 == 1);
      auto h = random_polynomial(*F, 4, rng);
      auto g = random_polynomial(*F, 4, rng);
      auto D = delta(P, h);
      EXPECT_EQ(D(g), F->sub(P(R.add(g, h)), P(g)));
      if (!P.has_monomials() && P.degree() > 0) EXPECT_LT(D.degree(), P.degree());
      ++checked;
    }
  }
  EXPECT_EQ(checked, 1000);
}

TEST(Phases, DeltaExamples) {
  auto F = GaloisField::build(3, 1);
  std::mt19937_64 rng(3);
  auto L1 = random_laurent(*F, 4, rng, true);
  auto L2 = random_laurent(*F, 4, rng, true);
  PolynomialPhase c(F, 4);
  c.add_term(FieldElement{2}, {});
  EXPECT_TRUE(delta(c, Polynomial{1, 1}).empty());

  PolynomialPhase lin(F, 4);
  lin.add_term(FieldElement{1}, {L1});
  auto h = random_polynomial(*F, 4, rng);
  auto Dl = delta(lin, h);
  EXPECT_EQ(Dl.degree(), 0);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(Dl(random_polynomial(*F, 4, rng)), linear_form(*F, L1, h));

  PolynomialPhase q(F, 4);
  q.add_term(FieldElement{1}, {L1, L2});
  auto Dq = delta(q, h);
  for (int i = 0; i < 20; ++i) {
    auto g = random_polynomial(*F, 4, rng);
    FieldElement a = linear_form(*F, L1, h), b = linear_form(*F, L2, h);
    FieldElement expect = F->add(F->add(F->mul(a, linear_form(*F, L2, g)), F->mul(linear_form(*F, L1, g), b)), F->mul(a, b));
    EXPECT_EQ(Dq(g), expect);
  }
}

TEST(Phases, DerivativeFormIsSymmetricAndBaseIndependent) {
  auto F = GaloisField::build(5, 1);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    auto P = random_phase(F, 3, 3, 4, rng, true);
    if (P.degree() < 3) continue;
    auto Q = derivative_form(P, 3);
    for (int probe = 0; probe < 100; ++probe) {
      std::vector<Polynomial> hs;
      for (int i = 0; i < 3; ++i) hs.push_back(random_polynomial(*F, 3, rng));
      auto g0 = random_polynomial(*F, 3, rng);
      FieldElement v = Q(hs);
      EXPECT_EQ(iterated_difference(P, hs, Polynomial{}), v);
      EXPECT_EQ(iterated_difference(P, hs, g0), v);
      std::vector<int> perm{0, 1, 2};
      while (std::next_permutation(perm.begin(), perm.end())) {
        std::vector<Polynomial> ps;
        for (int i : perm) ps.push_back(hs[static_cast<std::size_t>(i)]);
        EXPECT_EQ(Q(ps), v);
      }
    }
  }
}

TEST(Phases, DerivativeFormExamplesAndErrors) {
  auto F = GaloisField::build(5, 1);
  std::mt19937_64 rng(5);
  auto L = random_laurent(*F, 3, rng, true);
  PolynomialPhase P(F, 3);
  P.add_term(FieldElement{3}, {L, L});
  auto Q = derivative_form(P, 2);
  for (int i = 0; i < 50; ++i) {
    auto h1 = random_polynomial(*F, 3, rng), h2 = random_polynomial(*F, 3, rng);
    EXPECT_EQ(Q({h1, h2}), F->mul(F->from_int(6), F->mul(linear_form(*F, L, h1), linear_form(*F, L, h2))));
  }
  PolynomialPhase lin(F, 3);
  lin.add_term(FieldElement{2}, {L});
  lin.add_term(FieldElement{4}, {});
  auto Q1 = derivative_form(lin, 1);
  for (int i = 0; i < 20; ++i) {
    auto h = random_polynomial(*F, 3, rng);
    EXPECT_EQ(Q1({h}), F->sub(lin(h), lin(Polynomial{})));
  }
  EXPECT_THROW(derivative_form(P, 1), InvalidArgument);
  auto F3 = GaloisField::build(3, 1);
  PolynomialPhase cube(F3, 2);
  auto c = LaurentTruncation::coordinate(0, 2);
  cube.add_term(FieldElement{1}, {c, c, c});
  EXPECT_THROW(derivative_form(cube, 3), InvalidArgument);
}

TEST(Phases, FactorialIdentities) {
  std::mt19937_64 rng(23);
  for (std::uint32_t p : {5u, 7u}) {
    auto F = GaloisField::build(p, 1);
    const int n = 3;
    for (int m : {2, 3}) {
      auto P = random_homogeneous(F, n, m, 3, rng);
      auto diag = diagonal(derivative_form(P, m));
      auto lhs = tabulate(diag, n);
      auto rhs = tabulate(P.scaled(factorial(*F, m)), n);
      EXPECT_EQ(lhs, rhs) << p << " " << m;

      // symmetric Q built as a derivative form; d^m(P_Q) = m! Q
      auto Q = derivative_form(random_homogeneous(F, n, m, 2, rng), m);
      auto back = derivative_form(diagonal(Q), m);
      for (int probe = 0; probe < 200; ++probe) {
        std::vector<Polynomial> hs;
        for (int i = 0; i < m; ++i) hs.push_back(random_polynomial(*F, n, rng));
        EXPECT_EQ(back(hs), F->mul(factorial(*F, m), Q(hs)));
      }
    }
  }
}

TEST(Phases, DiagonalExamples) {
  auto F = GaloisField::build(3, 1);
  std::mt19937_64 rng(2);
  auto L = random_laurent(*F, 2, rng, true);
  MultilinearForm Q(F, {2, 2});
  Q.add_term(FieldElement{1}, {L, L});
  PolynomialPhase sq(F, 2);
  sq.add_term(FieldElement{1}, {L, L});
  EXPECT_EQ(tabulate(diagonal(Q), 2), tabulate(sq, 2));
  EXPECT_TRUE(diagonal(MultilinearForm(F, {2, 2})).empty());
  EXPECT_THROW(diagonal(MultilinearForm(F, {2, 3})), InvalidArgument);
}

TEST(Phases, VerifyDegree) {
  auto F = GaloisField::build(5, 1);
  auto L = LaurentTruncation::coordinate(0, 3);
  PolynomialPhase lin(F, 3);
  lin.add_term(FieldElement{1}, {L});
  EXPECT_TRUE(verify_degree(lin, 1, 10));
  PolynomialPhase sq(F, 3);
  sq.add_monomial(FieldElement{1}, {{0, 2}});
  EXPECT_FALSE(verify_degree(sq, 1, 50));
  // explicit witness: second difference of g0^2 is 2 h0 h1
  EXPECT_EQ(iterated_difference(sq, {Polynomial{1}, Polynomial{1}}, Polynomial{}).code, 2u);
  EXPECT_TRUE(verify_degree(sq, 2, 50));
  std::mt19937_64 rng(4);
  auto P = random_phase(F, 3, 3, 4, rng, false);
  EXPECT_TRUE(verify_degree(P, P.degree(), 5));
}

MultilinearForm rank_one_block(const FieldPtr& F, int n, int j) {
  MultilinearForm Q(F, {n, n});
  Q.add_term(FieldElement{1}, {LaurentTruncation::coordinate(j, n), LaurentTruncation::coordinate(j, n)});
  return Q;
}

TEST(Phases, BiasExamples) {
  for (auto [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    auto F = GaloisField::build(p, r);
    const double q = F->q();
    auto zero = bias_exhaustive(MultilinearForm(F, {2, 2}));
    EXPECT_EQ(zero.bias, 1.0);
    EXPECT_EQ(zero.analytic_rank, 0.0);
    auto one = bias_exhaustive(rank_one_block(F, 3, 0));
    EXPECT_NEAR(one.bias, 1.0 / q, 1e-12);
    EXPECT_NEAR(one.mean.imag(), 0.0, 1e-12);
    EXPECT_NEAR(one.analytic_rank, 1.0, 1e-12);
    for (int rr = 2; rr <= 3; ++rr) {
      MultilinearForm Q(F, {3, 3});
      for (int j = 0; j < rr; ++j) Q.add_term(FieldElement{1}, rank_one_block(F, 3, j).terms()[0].slots);
      auto b = bias_exhaustive(Q);
      EXPECT_NEAR(b.bias, std::pow(q, -rr), 1e-12);
      EXPECT_GE(b.bias + 1e-12, std::pow(q, -rank_upper_bounds(Q).partition_upper.value()));
    }
  }
}

TEST(Phases, ExhaustiveBiasIsNonnegative) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    auto F = GaloisField::build(trial % 2 ? 3 : 2, 1);
    int arity = 2 + trial % 2;
    int n = arity == 2 ? 4 : 3;
    MultilinearForm Q(F, std::vector<int>(static_cast<std::size_t>(arity), n));
    int terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
      std::vector<LaurentTruncation> slots;
      for (int i = 0; i < arity; ++i) slots.push_back(random_laurent(*F, n, rng, false));
      Q.add_term(FieldElement{1 + static_cast<std::uint32_t>(rng() % (F->q() - 1))}, slots);
    }
    auto b = bias_exhaustive(Q, 1e6);
    EXPECT_GE(std::round(b.bias * 1e9) / 1e9, 0.0);
    EXPECT_NEAR(b.mean.imag(), 0.0, 1e-9);
    EXPECT_GE(b.bias + 1e-9, std::pow(F->q(), -terms));
  }
}

TEST(Phases, PartitionBlocksRespectBiasBound) {
  auto F = GaloisField::build(3, 1);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    auto left = std::make_shared<MultilinearForm>(F, std::vector<int>{2});
    left->add_term(FieldElement{1}, {random_laurent(*F, 2, rng, false)});
    auto right = std::make_shared<MultilinearForm>(F, std::vector<int>{2, 2});
    for (int t = 0; t < 2; ++t)
      right->add_term(FieldElement{1}, {random_laurent(*F, 2, rng, false), random_laurent(*F, 2, rng, false)});
    MultilinearForm Q(F, {2, 2, 2});
    Q.add_block(FieldElement{1}, {1}, left, {0, 2}, right);
    Q.add_term(FieldElement{2},
               {random_laurent(*F, 2, rng, false), random_laurent(*F, 2, rng, false), random_laurent(*F, 2, rng, false)});
    auto pr = rank_upper_bounds(Q).partition_upper.value();
    EXPECT_EQ(pr, 2);
    auto b = bias_exhaustive(Q);
    EXPECT_GE(b.bias + 1e-12, std::pow(3.0, -pr));
    for (int probe = 0; probe < 20; ++probe) {
      std::vector<Polynomial> x;
      for (int i = 0; i < 3; ++i) x.push_back(random_polynomial(*F, 2, rng));
      FieldElement expect = F->mul(left->operator()({x[1]}), right->operator()({x[0], x[2]}));
      const auto& t = Q.terms()[0];
      FieldElement rank_one = t.coeff;
      for (int i = 0; i < 3; ++i) rank_one = F->mul(rank_one, linear_form(*F, t.slots[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(i)]));
      EXPECT_EQ(Q(x), F->add(expect, rank_one));
    }
  }
  MultilinearForm bad(F, {2, 2});
  auto one = std::make_shared<MultilinearForm>(F, std::vector<int>{2});
  EXPECT_THROW(bad.add_block(FieldElement{1}, {0}, one, {0}, one), InvalidArgument);
}

TEST(Phases, SampledBiasTracksExhaustive) {
  auto F = GaloisField::build(2, 1);
  auto Q = rank_one_block(F, 4, 1);
  auto s = bias_sampled(Q, 20000, 5);
  EXPECT_FALSE(s.exhaustive);
  EXPECT_GT(s.std_error, 0.0);
  EXPECT_NEAR(s.bias, 0.5, 5 * s.std_error);
  EXPECT_THROW(bias_exhaustive(MultilinearForm(F, {20, 20}), 1e8), BudgetExceeded);
}

TEST(Phases, RankBounds) {
  auto F = GaloisField::build(5, 1);
  std::mt19937_64 rng(6);
  PolynomialPhase P(F, 3);
  for (int t = 0; t < 3; ++t) P.add_term(FieldElement{1}, {random_laurent(*F, 3, rng, true), random_laurent(*F, 3, rng, true)});
  P.add_term(FieldElement{2}, {random_laurent(*F, 3, rng, true)});
  EXPECT_EQ(rank_upper_bounds(P).schmidt_upper, 3);
  EXPECT_EQ(rank_upper_bounds(derivative_form(P, 2)).derivative_bound, 12);
  PolynomialPhase lin(F, 3);
  lin.add_term(FieldElement{1}, {random_laurent(*F, 3, rng, true)});
  EXPECT_EQ(rank_upper_bounds(lin).schmidt_upper, 0);
}

TEST(Phases, ProjectiveZeroExamples) {
  auto F2 = GaloisField::build(2, 1);
  PolynomialPhase L(F2, 3);
  L.add_term(FieldElement{1}, {LaurentTruncation({FieldElement{1}, FieldElement{1}, FieldElement{0}})});
  auto one = projective_common_zeros(F2, {L}, 3);
  EXPECT_EQ(one.count, 3u);
  EXPECT_EQ(one.projective_size, 7u);
  EXPECT_DOUBLE_EQ(one.bound, 0.875);
  EXPECT_TRUE(one.passes);

  auto empty = projective_common_zeros(F2, {}, 3);
  EXPECT_EQ(empty.count, 7u);

  auto F3 = GaloisField::build(3, 1);
  PolynomialPhase A(F3, 3), B(F3, 3);
  A.add_term(FieldElement{1}, {LaurentTruncation({FieldElement{1}, FieldElement{2}, FieldElement{1}})});
  B.add_term(FieldElement{1}, {LaurentTruncation({FieldElement{0}, FieldElement{1}, FieldElement{1}})});
  auto two = projective_common_zeros(F3, {A, B}, 3);
  EXPECT_EQ(two.count, 1u);
  EXPECT_NEAR(two.bound, 13.0 / 54.0, 1e-15);
  EXPECT_TRUE(two.passes);

  PolynomialPhase mixed(F3, 3);
  mixed.add_term(FieldElement{1}, {LaurentTruncation::coordinate(0, 3)});
  mixed.add_term(FieldElement{1}, {});
  EXPECT_THROW(projective_common_zeros(F3, {mixed}, 3), InvalidArgument);
}

TEST(Phases, ProjectiveZeroBoundFailsForIndependentCoordinates) {
  // three independent linear forms on F_2^3 have no common projective zero
  auto F2 = GaloisField::build(2, 1);
  std::vector<PolynomialPhase> sys;
  for (int j = 0; j < 3; ++j) {
    PolynomialPhase P(F2, 3);
    P.add_term(FieldElement{1}, {LaurentTruncation::coordinate(j, 3)});
    sys.push_back(P);
  }
  auto r = projective_common_zeros(F2, sys, 3);
  EXPECT_EQ(r.count, 0u);
  EXPECT_NEAR(r.bound, 7.0 / 32.0, 1e-15);
  EXPECT_FALSE(r.passes);
  // x^2 + y^2 over F_3 is anisotropic
  auto F3 = GaloisField::build(3, 1);
  PolynomialPhase N(F3, 2);
  N.add_monomial(FieldElement{1}, {{0, 2}});
  N.add_monomial(FieldElement{1}, {{1, 2}});
  auto an = projective_common_zeros(F3, {N}, 2);
  EXPECT_EQ(an.count, 0u);
  EXPECT_FALSE(an.passes);
}

TEST(Phases, DescriptorRoundTrip) {
  auto F = GaloisField::build(5, 1);
  std::mt19937_64 rng(12);
  auto P = random_phase(F, 3, 3, 4, rng, true);
  auto back = PolynomialPhase::from_json(F, P.to_json());
  EXPECT_EQ(tabulate(back, 3), tabulate(P, 3));
  nlohmann::json j = {{"n", 3},
                      {"terms", {{{"c", 2}, {"factors", {{{"coordinate", 1}}, {{"rational", {{1}, {4, 1}}}}}}}}}};
  auto R = PolynomialPhase::from_json(F, j);
  EXPECT_EQ(R.degree(), 2);
  EXPECT_THROW(PolynomialPhase::from_json(F, {{"n", 3}, {"term", nlohmann::json::array()}}), InvalidArgument);

  auto Q = derivative_form(P.top_part().has_monomials() ? random_homogeneous(F, 3, 2, 2, rng) : P.top_part(),
                           std::max(1, P.top_part().degree()));
  auto Qb = MultilinearForm::from_json(F, Q.to_json());
  for (int probe = 0; probe < 30; ++probe) {
    std::vector<Polynomial> hs;
    for (int i = 0; i < Q.arity(); ++i) hs.push_back(random_polynomial(*F, 3, rng));
    EXPECT_EQ(Qb(hs), Q(hs));
  }
}

}  // namespace
}  // namespace ffm
