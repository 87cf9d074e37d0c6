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

#include "algebra/polynomial.hpp"

#include <algorithm>

#include "common/error.hpp"

namespace ffm {

int Degree::value() const {
  require(!neg_inf_, "degree of the zero polynomial is NEG_INF");
  return d_;
}

std::string Degree::to_string() const { return neg_inf_ ? "NEG_INF" : std::to_string(d_); }

Polynomial::Polynomial(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<std::uint32_t> codes) {
  coeffs_.reserve(codes.size());
  for (auto c : codes) coeffs_.push_back(FieldElement{c});
  trim();
}

Polynomial Polynomial::monomial(FieldElement c, int degree) {
  require(degree >= 0, "monomial degree must be nonnegative");
  std::vector<FieldElement> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().code == 0) coeffs_.pop_back();
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    std::uint32_t c = coeffs_[i].code;
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += "[" + std::to_string(c) + "]";
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Polynomial PolyRing::add(const Polynomial& a, const Polynomial& b) const {
  std::size_t n = std::max(a.size(), b.size());
  std::vector<FieldElement> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = F_->add(a.coeff(i), b.coeff(i));
  return Polynomial(std::move(out));
}

Polynomial PolyRing::neg(const Polynomial& a) const {
  std::vector<FieldElement> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = F_->neg(a.coeff(i));
  return Polynomial(std::move(out));
}

Polynomial PolyRing::sub(const Polynomial& a, const Polynomial& b) const { return add(a, neg(b)); }

Polynomial PolyRing::scale(const Polynomial& a, FieldElement c) const {
  std::vector<FieldElement> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = F_->mul(a.coeff(i), c);
  return Polynomial(std::move(out));
}

Polynomial PolyRing::mul(const Polynomial& a, const Polynomial& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<FieldElement> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    FieldElement ai = a.coeff(i);
    if (ai.code == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = F_->add(out[i + j], F_->mul(ai, b.coeff(j)));
    }
  }
  return Polynomial(std::move(out));
}

Polynomial PolyRing::pow(const Polynomial& a, unsigned k) const {
  Polynomial result = Polynomial::constant(F_->one());
  Polynomial base = a;
  while (k > 0) {
    if (k & 1u) result = mul(result, base);
    k >>= 1u;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

DivMod PolyRing::divmod(const Polynomial& a, const Polynomial& b) const {
  require(!b.is_zero(), "polynomial division by zero");
  if (a.size() < b.size()) return {Polynomial{}, a};
  std::vector<FieldElement> rem = a.coeffs();
  std::vector<FieldElement> quo(a.size() - b.size() + 1);
  const std::size_t db = b.size() - 1;
  const FieldElement lead_inv = F_->inv(b.leading());
  for (std::size_t k = rem.size(); k-- > db;) {
    FieldElement c = rem[k];
    if (c.code == 0) continue;
    FieldElement t = F_->mul(c, lead_inv);
    std::size_t shift = k - db;
    quo[shift] = t;
    for (std::size_t i = 0; i <= db; ++i) {
      rem[shift + i] = F_->sub(rem[shift + i], F_->mul(t, b.coeff(i)));
    }
  }
  rem.resize(db);
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial PolyRing::gcd(const Polynomial& a, const Polynomial& b) const {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

Polynomial PolyRing::monic(const Polynomial& a) const {
  if (a.is_zero()) return a;
  return scale(a, F_->inv(a.leading()));
}

FieldElement PolyRing::evaluate(const Polynomial& a, FieldElement x) const {
  FieldElement acc = F_->zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = F_->add(F_->mul(acc, x), a.coeff(i));
  return acc;
}

Polynomial PolyRing::mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& m) const {
  return mod(mul(a, b), m);
}

std::uint64_t PolyCodec::encode(const Polynomial& g) const {
  std::uint64_t code = 0;
  const auto& c = g.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (code > ((std::uint64_t{1} << 63) - c[i].code) / q_) {
      throw BudgetExceeded("polynomial code does not fit in 64 bits", static_cast<double>(c.size()),
                           63.0);
    }
    code = code * q_ + c[i].code;
  }
  return code;
}

Polynomial PolyCodec::decode(std::uint64_t code) const {
  std::vector<FieldElement> c;
  while (code > 0) {
    c.push_back(FieldElement{static_cast<std::uint32_t>(code % q_)});
    code /= q_;
  }
  return Polynomial(std::move(c));
}

void PolyCodec::decode_into(std::uint64_t code, std::vector<FieldElement>& out, std::size_t len) const {
  out.resize(len);
  for (std::size_t i = 0; i < len; ++i) {
    out[i] = FieldElement{static_cast<std::uint32_t>(code % q_)};
    code /= q_;
  }
}

}  // namespace ffm
