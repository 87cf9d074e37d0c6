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

#include "phases/multilinear.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "common/error.hpp"
#include "common/reduce.hpp"

namespace ffm {

MultilinearForm::MultilinearForm(FieldPtr field, std::vector<int> slot_dims)
    : field_(std::move(field)), dims_(std::move(slot_dims)) {
  require(field_ != nullptr, "missing field");
  require(!dims_.empty(), "a multilinear form needs at least one slot");
  for (int n : dims_) require(n >= 0, "slot dimension must be >= 0");
}

void MultilinearForm::add_term(FieldElement c, std::vector<LaurentTruncation> slots) {
  require(slots.size() == dims_.size(), "rank-one term needs one linear form per slot");
  for (std::size_t i = 0; i < slots.size(); ++i) {
    require(slots[i].depth() >= dims_[i], "linear form too shallow for slot " + std::to_string(i));
  }
  if (c.code == 0) return;
  terms_.push_back({c, std::move(slots)});
}

void MultilinearForm::add_block(FieldElement c, std::vector<int> left_slots, std::shared_ptr<const MultilinearForm> left,
                                std::vector<int> right_slots, std::shared_ptr<const MultilinearForm> right) {
  require(left && right, "partition block needs two forms");
  require(!left_slots.empty() && !right_slots.empty(), "partition block sides must be nonempty");
  require(static_cast<int>(left_slots.size()) == left->arity() &&
              static_cast<int>(right_slots.size()) == right->arity(),
          "partition block slot lists must match the arities of its forms");
  std::vector<int> all = left_slots;
  all.insert(all.end(), right_slots.begin(), right_slots.end());
  std::sort(all.begin(), all.end());
  std::vector<int> expect(dims_.size());
  std::iota(expect.begin(), expect.end(), 0);
  require(all == expect, "partition block slots must partition the form's slots");
  for (std::size_t i = 0; i < left_slots.size(); ++i)
    require(left->slot_dims()[i] == dims_[static_cast<std::size_t>(left_slots[i])], "block slot dimension mismatch");
  for (std::size_t i = 0; i < right_slots.size(); ++i)
    require(right->slot_dims()[i] == dims_[static_cast<std::size_t>(right_slots[i])], "block slot dimension mismatch");
  if (c.code == 0) return;
  blocks_.push_back({c, std::move(left_slots), std::move(left), std::move(right_slots), std::move(right)});
}

FieldElement MultilinearForm::operator()(const std::vector<Polynomial>& x) const {
  require(x.size() == dims_.size(), "wrong number of arguments to a multilinear form");
  for (std::size_t i = 0; i < x.size(); ++i) {
    require(x[i].degree() < Degree::of(dims_[i]), "argument " + std::to_string(i) + " outside its slot domain");
  }
  const GaloisField& F = *field_;
  FieldElement acc{};
  for (const auto& t : terms_) {
    FieldElement v = t.coeff;
    for (std::size_t i = 0; i < x.size() && v.code != 0; ++i) v = F.mul(v, linear_form(F, t.slots[i], x[i]));
    acc = F.add(acc, v);
  }
  for (const auto& b : blocks_) {
    std::vector<Polynomial> xl, xr;
    for (int s : b.left_slots) xl.push_back(x[static_cast<std::size_t>(s)]);
    for (int s : b.right_slots) xr.push_back(x[static_cast<std::size_t>(s)]);
    acc = F.add(acc, F.mul(b.coeff, F.mul((*b.left)(xl), (*b.right)(xr))));
  }
  return acc;
}

namespace {

std::vector<std::vector<int>> permutations(int m) {
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Tabulated evaluator over slot codes.
class CompiledForm {
 public:
  explicit CompiledForm(const MultilinearForm& Q) : F_(Q.field()) {
    for (const auto& t : Q.terms()) {
      coeffs_.push_back(t.coeff);
      std::vector<std::vector<FieldElement>> per_slot;
      for (std::size_t i = 0; i < t.slots.size(); ++i) {
        per_slot.push_back(tabulate_linear(F_, t.slots[i], Q.slot_dims()[i]));
      }
      tables_.push_back(std::move(per_slot));
    }
    for (const auto& b : Q.blocks()) {
      blocks_.push_back({b.coeff, b.left_slots, std::make_unique<CompiledForm>(*b.left), b.right_slots,
                         std::make_unique<CompiledForm>(*b.right)});
    }
  }

  FieldElement eval(const std::uint64_t* codes) const {
    FieldElement acc{};
    for (std::size_t t = 0; t < tables_.size(); ++t) {
      FieldElement v = coeffs_[t];
      for (std::size_t i = 0; i < tables_[t].size() && v.code != 0; ++i) v = F_.mul(v, tables_[t][i][codes[i]]);
      acc = F_.add(acc, v);
    }
    for (const auto& b : blocks_) {
      std::vector<std::uint64_t> l, r;
      for (int s : b.left_slots) l.push_back(codes[s]);
      for (int s : b.right_slots) r.push_back(codes[s]);
      FieldElement lv = b.left->eval(l.data());
      if (lv.code == 0) continue;
      acc = F_.add(acc, F_.mul(b.coeff, F_.mul(lv, b.right->eval(r.data()))));
    }
    return acc;
  }

 private:
  struct Block {
    FieldElement coeff;
    std::vector<int> left_slots;
    std::unique_ptr<CompiledForm> left;
    std::vector<int> right_slots;
    std::unique_ptr<CompiledForm> right;
  };

  const GaloisField& F_;
  std::vector<FieldElement> coeffs_;
  std::vector<std::vector<std::vector<FieldElement>>> tables_;
  std::vector<Block> blocks_;
};

double analytic_rank_of(double bias, std::uint32_t q) {
  if (bias <= 0.0) return std::numeric_limits<double>::infinity();
  double r = -std::log(bias) / std::log(static_cast<double>(q));
  return r == 0.0 ? 0.0 : r;  // normalise -0
}

}  // namespace

MultilinearForm derivative_form(const PolynomialPhase& P, int m) {
  const GaloisField& F = P.field();
  require(m >= 1, "derivative order must be >= 1");
  require(static_cast<std::uint32_t>(m) < F.p(),
          "derivative form of order " + std::to_string(m) + " needs m < p = " + std::to_string(F.p()));
  require(P.degree() <= m, "phase of degree " + std::to_string(P.degree()) + " exceeds derivative order " +
                               std::to_string(m));
  const int n = P.ambient();
  MultilinearForm Q(P.field_ptr(), std::vector<int>(static_cast<std::size_t>(m), n));
  const auto perms = permutations(m);
  auto add_symmetrised = [&](FieldElement c, const std::vector<LaurentTruncation>& factors) {
    for (const auto& sigma : perms) {
      std::vector<LaurentTruncation> slots;
      for (int i : sigma) slots.push_back(factors[static_cast<std::size_t>(i)]);
      Q.add_term(c, std::move(slots));
    }
  };
  for (const auto& t : P.terms()) {
    if (static_cast<int>(t.factors.size()) == m) add_symmetrised(t.coeff, t.factors);
  }
  for (const auto& mono : P.monomials()) {
    if (mono.degree() != m) continue;
    std::vector<LaurentTruncation> factors;
    for (const auto& [j, e] : mono.powers) {
      for (int k = 0; k < e; ++k) factors.push_back(LaurentTruncation::coordinate(j, std::max(n, j + 1)));
    }
    add_symmetrised(mono.coeff, factors);
  }
  Q.set_source_schmidt_upper(*rank_upper_bounds(P).schmidt_upper);
  return Q;
}

PolynomialPhase diagonal(const MultilinearForm& Q) {
  const int n = Q.slot_dims()[0];
  for (int d : Q.slot_dims()) require(d == n, "diagonal needs all slots on the same G_n");
  PolynomialPhase P(Q.field_ptr(), n);
  for (const auto& t : Q.terms()) P.add_term(t.coeff, t.slots);
  for (const auto& b : Q.blocks()) P += diagonal(*b.left).times(diagonal(*b.right)).scaled(b.coeff);
  return P;
}

BiasResult bias_exhaustive(const MultilinearForm& Q, double budget) {
  const GaloisField& F = Q.field();
  double cost = 1.0;
  for (int n : Q.slot_dims()) cost *= power_estimate(F.q(), n);
  check_budget(cost, budget, "exhaustive bias");
  const std::size_t m = Q.slot_dims().size();
  std::vector<std::uint64_t> sizes(m);
  for (std::size_t i = 0; i < m; ++i) sizes[i] = checked_pow(F.q(), Q.slot_dims()[i]);

  CompiledForm C(Q);
  BiasResult out;
  out.exponent_counts.assign(F.p(), 0);
  std::vector<std::uint64_t> codes(m, 0);
  std::uint64_t total = 0;
  for (;;) {
    ++out.exponent_counts[F.trace(C.eval(codes.data()))];
    ++total;
    std::size_t i = m;
    bool carried = true;
    while (carried && i > 0) {
      --i;
      carried = ++codes[i] == sizes[i];
      if (carried) codes[i] = 0;
    }
    if (carried) break;
  }
  ComplexSum acc;
  for (std::uint32_t k = 0; k < F.p(); ++k) {
    acc.add(static_cast<double>(out.exponent_counts[k]) * F.root_of_unity(k));
  }
  out.mean = acc.value() / static_cast<double>(total);
  out.bias = out.mean.real();
  out.analytic_rank = analytic_rank_of(out.bias, F.q());
  out.exhaustive = true;
  out.samples = total;
  return out;
}

BiasResult bias_sampled(const MultilinearForm& Q, std::uint64_t samples, std::uint64_t seed) {
  require(samples >= 2, "sampled bias needs at least 2 samples");
  const GaloisField& F = Q.field();
  const std::size_t m = Q.slot_dims().size();
  std::vector<std::uint64_t> sizes(m);
  for (std::size_t i = 0; i < m; ++i) sizes[i] = checked_pow(F.q(), Q.slot_dims()[i]);
  CompiledForm C(Q);
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> codes(m);
  ComplexSum sum;
  CompensatedSum sq;
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (std::size_t i = 0; i < m; ++i) codes[i] = rng() % sizes[i];
    auto z = F.root_of_unity(F.trace(C.eval(codes.data())));
    sum.add(z);
    sq.add(z.real() * z.real());
  }
  BiasResult out;
  const double N = static_cast<double>(samples);
  out.mean = sum.value() / N;
  out.bias = out.mean.real();
  double var = std::max(0.0, (sq.value() - N * out.bias * out.bias) / (N - 1.0));
  out.std_error = std::sqrt(var / N);
  out.analytic_rank = analytic_rank_of(out.bias, F.q());
  out.exhaustive = false;
  out.samples = samples;
  return out;
}

RankBounds rank_upper_bounds(const PolynomialPhase& P) {
  RankBounds r;
  const int d = P.degree();
  int count = 0;
  if (d >= 2) {
    for (const auto& t : P.terms()) count += static_cast<int>(t.factors.size()) == d;
    for (const auto& m : P.monomials()) count += m.degree() == d;
  }
  r.schmidt_upper = count;
  r.derivative_bound = (1 << d) * count;
  return r;
}

RankBounds rank_upper_bounds(const MultilinearForm& Q) {
  RankBounds r;
  r.partition_upper = Q.arity() < 2 ? 0 : static_cast<int>(Q.terms().size() + Q.blocks().size());
  if (Q.source_schmidt_upper()) {
    r.schmidt_upper = *Q.source_schmidt_upper();
    r.derivative_bound = (1 << Q.arity()) * *Q.source_schmidt_upper();
  }
  return r;
}

nlohmann::json MultilinearForm::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : terms_) {
    nlohmann::json s = nlohmann::json::array();
    for (const auto& L : t.slots) s.push_back(laurent_to_json(L));
    terms.push_back({{"c", t.coeff.code}, {"slots", s}});
  }
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : blocks_) {
    blocks.push_back({{"c", b.coeff.code},
                      {"left_slots", b.left_slots},
                      {"left", b.left->to_json()},
                      {"right_slots", b.right_slots},
                      {"right", b.right->to_json()}});
  }
  nlohmann::json out = {{"dims", dims_}, {"terms", terms}};
  if (!blocks_.empty()) out["blocks"] = blocks;
  return out;
}

MultilinearForm MultilinearForm::from_json(FieldPtr field, const nlohmann::json& j) {
  require(j.is_object(), "form descriptor must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    require(it.key() == "dims" || it.key() == "terms" || it.key() == "blocks",
            "unknown form key \"" + it.key() + "\"");
  }
  require(j.contains("dims") && j.at("dims").is_array(), "form descriptor needs \"dims\"");
  MultilinearForm Q(field, j.at("dims").get<std::vector<int>>());
  const GaloisField& F = *field;
  auto coeff = [&](const nlohmann::json& t) {
    auto c = t.value("c", 1);
    require(c >= 0 && c < static_cast<int>(F.q()), "form coefficient outside [0, q)");
    return FieldElement{static_cast<std::uint32_t>(c)};
  };
  for (const auto& t : j.value("terms", nlohmann::json::array())) {
    std::vector<LaurentTruncation> slots;
    const auto& s = t.at("slots");
    require(s.is_array() && s.size() == Q.slot_dims().size(), "term needs one linear form per slot");
    for (std::size_t i = 0; i < s.size(); ++i) slots.push_back(laurent_from_json(F, s[i], Q.slot_dims()[i]));
    Q.add_term(coeff(t), std::move(slots));
  }
  for (const auto& b : j.value("blocks", nlohmann::json::array())) {
    auto left = std::make_shared<const MultilinearForm>(from_json(field, b.at("left")));
    auto right = std::make_shared<const MultilinearForm>(from_json(field, b.at("right")));
    Q.add_block(coeff(b), b.at("left_slots").get<std::vector<int>>(), left, b.at("right_slots").get<std::vector<int>>(),
                right);
  }
  return Q;
}

}  // namespace ffm
