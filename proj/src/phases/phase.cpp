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

#include "phases/phase.hpp"

#include <algorithm>
#include <map>

#include "common/error.hpp"

namespace ffm {

int MonomialTerm::degree() const {
  int d = 0;
  for (const auto& [j, e] : powers) d += e;
  return d;
}

PolynomialPhase::PolynomialPhase(FieldPtr field, int n) : field_(std::move(field)), n_(n) {
  require(field_ != nullptr, "missing field");
  require(n >= 0, "phase ambient n must be >= 0");
}

int PolynomialPhase::degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.factors.size()));
  for (const auto& m : monomials_) d = std::max(d, m.degree());
  return d;
}

void PolynomialPhase::add_term(FieldElement c, std::vector<LaurentTruncation> factors) {
  for (const auto& f : factors) {
    require(f.depth() >= n_, "linear factor of depth " + std::to_string(f.depth()) +
                                 " is too shallow for G_" + std::to_string(n_));
  }
  if (c.code == 0) return;
  terms_.push_back({c, std::move(factors)});
}

void PolynomialPhase::add_monomial(FieldElement c, std::vector<std::pair<int, int>> powers) {
  std::map<int, int> merged;
  for (const auto& [j, e] : powers) {
    require(j >= 0 && j < n_, "monomial coordinate " + std::to_string(j) + " outside [0, n)");
    require(e >= 0, "monomial exponent must be >= 0");
    if (e > 0) merged[j] += e;
  }
  if (c.code == 0) return;
  monomials_.push_back({c, std::vector<std::pair<int, int>>(merged.begin(), merged.end())});
}

PolynomialPhase& PolynomialPhase::operator+=(const PolynomialPhase& other) {
  require(other.field_ == field_ || other.field_->q() == field_->q(), "phases over different fields");
  require(other.n_ == n_, "phases on different G_n");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  monomials_.insert(monomials_.end(), other.monomials_.begin(), other.monomials_.end());
  return *this;
}

PolynomialPhase PolynomialPhase::scaled(FieldElement c) const {
  PolynomialPhase out(field_, n_);
  for (const auto& t : terms_) out.add_term(field_->mul(c, t.coeff), t.factors);
  for (const auto& m : monomials_) out.add_monomial(field_->mul(c, m.coeff), m.powers);
  return out;
}

PolynomialPhase PolynomialPhase::times(const PolynomialPhase& other) const {
  require(other.n_ == n_, "phases on different G_n");
  require(!has_monomials() && !other.has_monomials(), "products are only formed for structured phases");
  PolynomialPhase out(field_, n_);
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      std::vector<LaurentTruncation> f = a.factors;
      f.insert(f.end(), b.factors.begin(), b.factors.end());
      out.add_term(field_->mul(a.coeff, b.coeff), std::move(f));
    }
  }
  return out;
}

PolynomialPhase PolynomialPhase::top_part() const {
  const int d = degree();
  PolynomialPhase out(field_, n_);
  for (const auto& t : terms_)
    if (static_cast<int>(t.factors.size()) == d) out.add_term(t.coeff, t.factors);
  for (const auto& m : monomials_)
    if (m.degree() == d) out.add_monomial(m.coeff, m.powers);
  return out;
}

std::optional<int> PolynomialPhase::homogeneous_degree() const {
  std::optional<int> d;
  auto check = [&](int k) {
    if (!d) d = k;
    return *d == k;
  };
  for (const auto& t : terms_)
    if (!check(static_cast<int>(t.factors.size()))) return std::nullopt;
  for (const auto& m : monomials_)
    if (!check(m.degree())) return std::nullopt;
  return d ? d : std::optional<int>(0);
}

FieldElement PolynomialPhase::eval_coeffs(const std::vector<FieldElement>& g) const {
  const GaloisField& F = *field_;
  FieldElement acc{};
  for (const auto& t : terms_) {
    FieldElement v = t.coeff;
    for (const auto& L : t.factors) {
      if (v.code == 0) break;
      v = F.mul(v, linear_form(F, L, g));
    }
    acc = F.add(acc, v);
  }
  for (const auto& m : monomials_) {
    FieldElement v = m.coeff;
    for (const auto& [j, e] : m.powers) {
      FieldElement x = static_cast<std::size_t>(j) < g.size() ? g[static_cast<std::size_t>(j)] : FieldElement{};
      v = F.mul(v, F.pow(x, static_cast<std::uint64_t>(e)));
    }
    acc = F.add(acc, v);
  }
  return acc;
}

FieldElement PolynomialPhase::operator()(const Polynomial& g) const {
  require(g.degree() < Degree::of(n_), "phase evaluated outside G_" + std::to_string(n_));
  return eval_coeffs(g.coeffs());
}

namespace {

// C(n, k) mod p for n < 64.
std::uint32_t binomial_mod(int n, int k, std::uint32_t p) {
  static thread_local std::map<std::uint32_t, std::vector<std::vector<std::uint32_t>>> cache;
  auto& rows = cache[p];
  if (rows.empty()) {
    rows.assign(64, std::vector<std::uint32_t>(64, 0));
    for (int i = 0; i < 64; ++i) {
      rows[i][0] = 1 % p;
      for (int j = 1; j <= i; ++j) rows[i][j] = (rows[i - 1][j - 1] + (j < i ? rows[i - 1][j] : 0)) % p;
    }
  }
  require(n < 64, "monomial exponent too large");
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace

PolynomialPhase delta(const PolynomialPhase& P, const Polynomial& h) {
  require(h.degree() < Degree::of(P.ambient()), "difference step h must lie in G_n");
  const GaloisField& F = P.field();
  PolynomialPhase out(P.field_ptr(), P.ambient());
  for (const auto& t : P.terms()) {
    const std::size_t k = t.factors.size();
    std::vector<FieldElement> at_h(k);
    for (std::size_t i = 0; i < k; ++i) at_h[i] = linear_form(F, t.factors[i], h);
    // every nonempty subset S of positions takes its factors at h
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      FieldElement c = t.coeff;
      std::vector<LaurentTruncation> rest;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask >> i & 1) {
          c = F.mul(c, at_h[i]);
        } else {
          rest.push_back(t.factors[i]);
        }
      }
      out.add_term(c, std::move(rest));
    }
  }
  for (const auto& m : P.monomials()) {
    // prod_j (g_j + h_j)^{e_j} - prod_j g_j^{e_j}
    const std::size_t v = m.powers.size();
    std::vector<int> k(v, 0);
    for (;;) {
      bool all_top = true;
      FieldElement c = m.coeff;
      std::vector<std::pair<int, int>> powers;
      for (std::size_t i = 0; i < v; ++i) {
        auto [j, e] = m.powers[i];
        all_top &= k[i] == e;
        c = F.mul(c, F.from_int(binomial_mod(e, k[i], F.p())));
        c = F.mul(c, F.pow(h.coeff(static_cast<std::size_t>(j)), static_cast<std::uint64_t>(e - k[i])));
        if (k[i] > 0) powers.emplace_back(j, k[i]);
      }
      if (!all_top) out.add_monomial(c, std::move(powers));
      std::size_t i = 0;
      for (; i < v; ++i) {
        if (++k[i] <= m.powers[i].second) break;
        k[i] = 0;
      }
      if (i == v) break;
    }
  }
  return out;
}

FieldElement iterated_difference(const PolynomialPhase& P, const std::vector<Polynomial>& hs, const Polynomial& g) {
  const GaloisField& F = P.field();
  PolyRing R(F);
  const std::size_t k = hs.size();
  FieldElement acc{};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    Polynomial x = g;
    int dropped = static_cast<int>(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1) {
        x = R.add(x, hs[i]);
        --dropped;
      }
    }
    FieldElement v = P(x);
    acc = F.add(acc, dropped % 2 == 0 ? v : F.neg(v));
  }
  return acc;
}

Polynomial random_polynomial(const GaloisField& F, int n, std::mt19937_64& rng) {
  std::vector<FieldElement> c(static_cast<std::size_t>(n));
  for (auto& e : c) e.code = static_cast<std::uint32_t>(rng() % F.q());
  return Polynomial(std::move(c));
}

LaurentTruncation random_laurent(const GaloisField& F, int depth, std::mt19937_64& rng, bool all_nonzero) {
  require(depth >= 1, "Laurent depth must be >= 1");
  std::vector<FieldElement> c(static_cast<std::size_t>(depth));
  for (auto& e : c) {
    e.code = all_nonzero ? 1 + static_cast<std::uint32_t>(rng() % (F.q() - 1))
                         : static_cast<std::uint32_t>(rng() % F.q());
  }
  return LaurentTruncation(std::move(c));
}

bool verify_degree(const PolynomialPhase& P, int m, int trials, std::uint64_t seed) {
  require(trials >= 1, "verify_degree needs trials >= 1");
  require(m >= 0, "degree must be >= 0");
  if (!P.has_monomials() && P.degree() <= m) return true;
  std::mt19937_64 rng(seed);
  const int n = P.ambient();
  for (int t = 0; t < trials; ++t) {
    std::vector<Polynomial> hs;
    for (int i = 0; i <= m; ++i) hs.push_back(random_polynomial(P.field(), n, rng));
    Polynomial g = random_polynomial(P.field(), n, rng);
    if (iterated_difference(P, hs, g).code != 0) return false;
  }
  return true;
}

std::vector<FieldElement> tabulate_linear(const GaloisField& F, const LaurentTruncation& beta, int n) {
  require(beta.depth() >= n, "linear form too shallow for G_" + std::to_string(n));
  const std::uint64_t size = checked_pow(F.q(), n);
  std::vector<FieldElement> table(size);
  std::uint64_t block = 1;
  for (int j = 0; j < n; ++j) {
    const FieldElement b = beta.at(j + 1);
    for (std::uint32_t a = 1; a < F.q(); ++a) {
      const FieldElement shift = F.mul(FieldElement{a}, b);
      const std::uint64_t base = a * block;
      for (std::uint64_t c = 0; c < block; ++c) table[base + c] = F.add(table[c], shift);
    }
    block *= F.q();
  }
  return table;
}

std::vector<FieldElement> tabulate(const PolynomialPhase& P, int n) {
  require(n >= 0 && n <= P.ambient(), "tabulation outside the phase domain");
  const GaloisField& F = P.field();
  const std::uint64_t size = checked_pow(F.q(), n);
  std::vector<FieldElement> out(size);
  std::vector<FieldElement> prod(size);
  for (const auto& t : P.terms()) {
    std::fill(prod.begin(), prod.end(), t.coeff);
    for (const auto& L : t.factors) {
      auto lt = tabulate_linear(F, L, n);
      for (std::uint64_t c = 0; c < size; ++c) prod[c] = F.mul(prod[c], lt[c]);
    }
    for (std::uint64_t c = 0; c < size; ++c) out[c] = F.add(out[c], prod[c]);
  }
  if (P.has_monomials()) {
    PolynomialPhase mono(P.field_ptr(), P.ambient());
    for (const auto& m : P.monomials()) mono.add_monomial(m.coeff, m.powers);
    std::vector<FieldElement> digits(static_cast<std::size_t>(n));
    for (std::uint64_t c = 0; c < size; ++c) {
      std::uint64_t x = c;
      for (auto& d : digits) {
        d.code = static_cast<std::uint32_t>(x % F.q());
        x /= F.q();
      }
      out[c] = F.add(out[c], mono.eval_coeffs(digits));
    }
  }
  return out;
}

nlohmann::json laurent_to_json(const LaurentTruncation& beta) {
  nlohmann::json j = nlohmann::json::array();
  for (auto c : beta.coeffs()) j.push_back(c.code);
  return j;
}

LaurentTruncation laurent_from_json(const GaloisField& F, const nlohmann::json& j, int min_depth) {
  if (j.is_array()) {
    std::vector<FieldElement> c;
    for (const auto& e : j) {
      require(e.is_number_integer() && e.get<std::int64_t>() >= 0 && e.get<std::int64_t>() < F.q(),
              "Laurent coefficients must be field element codes in [0, q)");
      c.push_back(FieldElement{e.get<std::uint32_t>()});
    }
    require(!c.empty(), "Laurent coefficient list is empty");
    return LaurentTruncation(std::move(c));
  }
  require(j.is_object(), "Laurent descriptor must be an array or an object");
  const int depth = std::max(min_depth, j.value("depth", min_depth));
  if (j.contains("coordinate")) return LaurentTruncation::coordinate(j.at("coordinate").get<int>(), depth);
  if (j.contains("rational")) {
    const auto& r = j.at("rational");
    require(r.is_array() && r.size() == 2, "\"rational\" must be [numerator, denominator]");
    auto poly = [&](const nlohmann::json& p) {
      std::vector<FieldElement> c;
      for (const auto& e : p) c.push_back(FieldElement{e.get<std::uint32_t>() % F.q()});
      return Polynomial(std::move(c));
    };
    return LaurentTruncation::from_rational(PolyRing(F), poly(r[0]), poly(r[1]), depth);
  }
  throw InvalidArgument("Laurent descriptor needs coefficients, \"coordinate\" or \"rational\"");
}

nlohmann::json PolynomialPhase::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : terms_) {
    nlohmann::json f = nlohmann::json::array();
    for (const auto& L : t.factors) f.push_back(laurent_to_json(L));
    terms.push_back({{"c", t.coeff.code}, {"factors", f}});
  }
  nlohmann::json monos = nlohmann::json::array();
  for (const auto& m : monomials_) {
    nlohmann::json pw = nlohmann::json::array();
    for (const auto& [j, e] : m.powers) pw.push_back({j, e});
    monos.push_back({{"c", m.coeff.code}, {"powers", pw}});
  }
  nlohmann::json out = {{"n", n_}, {"terms", terms}};
  if (!monomials_.empty()) out["monomials"] = monos;
  return out;
}

PolynomialPhase PolynomialPhase::from_json(FieldPtr field, const nlohmann::json& j) {
  require(j.is_object(), "phase descriptor must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    require(it.key() == "n" || it.key() == "terms" || it.key() == "monomials",
            "unknown phase key \"" + it.key() + "\"");
  }
  require(j.contains("n") && j.at("n").is_number_integer(), "phase descriptor needs an integer \"n\"");
  PolynomialPhase P(field, j.at("n").get<int>());
  const GaloisField& F = *field;
  auto coeff = [&](const nlohmann::json& t) {
    auto c = t.value("c", 1);
    require(c >= 0 && c < static_cast<int>(F.q()), "phase coefficient outside [0, q)");
    return FieldElement{static_cast<std::uint32_t>(c)};
  };
  for (const auto& t : j.value("terms", nlohmann::json::array())) {
    std::vector<LaurentTruncation> factors;
    for (const auto& f : t.value("factors", nlohmann::json::array())) {
      factors.push_back(laurent_from_json(F, f, P.ambient()));
    }
    P.add_term(coeff(t), std::move(factors));
  }
  for (const auto& m : j.value("monomials", nlohmann::json::array())) {
    std::vector<std::pair<int, int>> powers;
    for (const auto& pw : m.value("powers", nlohmann::json::array())) {
      require(pw.is_array() && pw.size() == 2, "monomial power must be [coordinate, exponent]");
      powers.emplace_back(pw[0].get<int>(), pw[1].get<int>());
    }
    P.add_monomial(coeff(m), std::move(powers));
  }
  return P;
}

}  // namespace ffm
