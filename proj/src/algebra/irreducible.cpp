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

#include "algebra/irreducible.hpp"

#include <algorithm>

#include "common/error.hpp"

namespace ffm {

int integer_moebius(std::uint64_t n) {
  require(n >= 1, "moebius of zero");
  int sign = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    n /= d;
    if (n % d == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::uint64_t irreducible_count(std::uint64_t q, int d) {
  require(d >= 1, "irreducible_count: degree must be at least 1");
  require(q >= 2, "irreducible_count: q must be at least 2");
  __int128 total = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    int mu = integer_moebius(static_cast<std::uint64_t>(e));
    if (mu == 0) continue;
    __int128 power = 1;
    for (int i = 0; i < d / e; ++i) {
      power *= q;
      if (power > (static_cast<__int128>(1) << 100)) {
        throw BudgetExceeded("irreducible_count overflow", power_estimate(q, d), 1e30);
      }
    }
    total += mu * power;
  }
  __int128 count = total / d;
  if (count * d != total) throw std::logic_error("necklace sum not divisible by degree");
  if (count > static_cast<__int128>(UINT64_MAX)) {
    throw BudgetExceeded("irreducible_count overflow", power_estimate(q, d), 1.8e19);
  }
  return static_cast<std::uint64_t>(count);
}

namespace {

Polynomial x_poly(const GaloisField& F) { return Polynomial::monomial(F.one(), 1); }

Polynomial powmod(const PolyRing& ring, Polynomial base, std::uint64_t k, const Polynomial& m) {
  Polynomial result = ring.mod(Polynomial::constant(ring.field().one()), m);
  base = ring.mod(base, m);
  while (k > 0) {
    if (k & 1) result = ring.mulmod(result, base, m);
    k >>= 1;
    if (k > 0) base = ring.mulmod(base, base, m);
  }
  return result;
}

}  // namespace

bool is_irreducible(const PolyRing& ring, const Polynomial& g) {
  require(!g.is_zero(), "irreducibility of the zero polynomial");
  int d = g.degree().value();
  if (d < 1) return false;
  const GaloisField& F = ring.field();
  Polynomial m = ring.monic(g);
  Polynomial x = x_poly(F);
  Polynomial frob = ring.mod(x, m);
  for (int i = 1; 2 * i <= d; ++i) {
    frob = powmod(ring, frob, F.q(), m);
    Polynomial h = ring.gcd(ring.sub(frob, x), m);
    if (h.degree() > Degree::of(0)) return false;
  }
  return true;
}

std::vector<std::uint64_t> sieve_irreducibles(const GaloisField& field, int d,
                                              const std::vector<std::vector<std::uint64_t>>& lower) {
  require(d >= 1, "sieve degree must be at least 1");
  const std::uint64_t q = field.q();
  const std::uint64_t span = checked_pow(q, d);
  check_budget(static_cast<double>(span), static_cast<double>(IrreducibleTable::kSieveBudget),
               "irreducible sieve at degree " + std::to_string(d));
  std::vector<std::uint8_t> composite(span, 0);

  if (q == 2) {
    // Codes are bit patterns; multiplication is carry-less.
    const std::uint64_t low_mask = span - 1;
    for (int e = 1; 2 * e <= d; ++e) {
      const std::uint64_t cofactors = std::uint64_t{1} << (d - e);
      for (std::uint64_t a : lower[static_cast<std::size_t>(e)]) {
        for (std::uint64_t blow = 0; blow < cofactors; ++blow) {
          std::uint64_t b = blow | cofactors;
          std::uint64_t prod = 0;
          for (std::uint64_t bits = a; bits; bits &= bits - 1) {
            prod ^= b << __builtin_ctzll(bits);
          }
          composite[prod & low_mask] = 1;
        }
      }
    }
  } else {
    std::vector<std::uint32_t> adig;
    std::vector<std::uint32_t> bdig;
    std::vector<std::uint32_t> prod(static_cast<std::size_t>(d) + 1);
    for (int e = 1; 2 * e <= d; ++e) {
      const int f = d - e;
      const std::uint64_t cofactors = checked_pow(q, f);
      for (std::uint64_t a : lower[static_cast<std::size_t>(e)]) {
        adig.assign(static_cast<std::size_t>(e) + 1, 0);
        std::uint64_t t = a;
        for (int i = 0; i <= e; ++i) {
          adig[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(t % q);
          t /= q;
        }
        bdig.assign(static_cast<std::size_t>(f) + 1, 0);
        bdig[static_cast<std::size_t>(f)] = 1;
        for (std::uint64_t blow = 0; blow < cofactors; ++blow) {
          std::fill(prod.begin(), prod.end(), 0u);
          for (int i = 0; i <= e; ++i) {
            FieldElement ai{adig[static_cast<std::size_t>(i)]};
            if (ai.code == 0) continue;
            for (int j = 0; j <= f && i + j < d; ++j) {
              auto k = static_cast<std::size_t>(i + j);
              prod[k] = field.add(FieldElement{prod[k]}, field.mul(ai, FieldElement{bdig[static_cast<std::size_t>(j)]})).code;
            }
          }
          std::uint64_t code = 0;
          for (int k = d; k-- > 0;) code = code * q + prod[static_cast<std::size_t>(k)];
          composite[code] = 1;
          // odometer increment of the cofactor's low digits
          for (int j = 0; j < f; ++j) {
            auto jj = static_cast<std::size_t>(j);
            if (++bdig[jj] < q) break;
            bdig[jj] = 0;
          }
        }
      }
    }
  }

  std::vector<std::uint64_t> out;
  const std::uint64_t lead = span;  // q^d: the monic leading term in code space
  for (std::uint64_t low = 0; low < span; ++low) {
    if (!composite[low]) out.push_back(lead + low);
  }
  return out;
}

IrreducibleTable::IrreducibleTable(const GaloisField& field, int max_degree)
    : max_degree_(max_degree), codec_(field.q()) {
  require(max_degree >= 1, "irreducible cache degree must be at least 1");
  std::vector<std::vector<std::uint64_t>> by_degree(static_cast<std::size_t>(max_degree) + 1);
  for (int d = 1; d <= max_degree; ++d) by_degree[static_cast<std::size_t>(d)] = sieve_irreducibles(field, d, by_degree);
  degree_start_.assign(static_cast<std::size_t>(max_degree) + 2, 0);
  for (int d = 1; d <= max_degree; ++d) {
    degree_start_[static_cast<std::size_t>(d)] = entries_.size();
    for (std::uint64_t code : by_degree[static_cast<std::size_t>(d)]) {
      Irreducible irr;
      irr.index = entries_.size();
      irr.degree = d;
      irr.code = code;
      irr.poly = codec_.decode(code);
      by_code_.emplace(code, irr.index);
      entries_.push_back(std::move(irr));
    }
  }
  degree_start_[static_cast<std::size_t>(max_degree) + 1] = entries_.size();
}

std::span<const Irreducible> IrreducibleTable::of_degree(int d) const {
  if (d < 1 || d > max_degree_) return {};
  std::size_t b = degree_start_[static_cast<std::size_t>(d)];
  std::size_t e = degree_start_[static_cast<std::size_t>(d) + 1];
  return std::span<const Irreducible>(entries_).subspan(b, e - b);
}

std::optional<std::size_t> IrreducibleTable::find(std::uint64_t monic_code) const {
  auto it = by_code_.find(monic_code);
  if (it == by_code_.end()) return std::nullopt;
  return it->second;
}

Factorization IrreducibleTable::factor(const PolyRing& ring, const Polynomial& g) const {
  require(!g.is_zero(), "cannot factor the zero polynomial");
  int deg = g.degree().value();
  if (deg > max_degree_) {
    throw InvalidArgument("cannot factor a polynomial of degree " + std::to_string(deg) +
                          ": irreducible cache only reaches degree " + std::to_string(max_degree_));
  }
  Factorization out;
  out.unit = g.leading();
  Polynomial rest = ring.monic(g);
  for (int d = 1; Degree::of(2 * d) <= rest.degree(); ++d) {
    for (const Irreducible& p : of_degree(d)) {
      if (rest.degree() < 2 * d) break;
      int k = 0;
      for (;;) {
        DivMod qr = ring.divmod(rest, p.poly);
        if (!qr.remainder.is_zero()) break;
        rest = std::move(qr.quotient);
        ++k;
      }
      if (k > 0) out.factors.push_back({p.index, k});
    }
  }
  if (rest.degree() > Degree::of(0)) {
    // No factor of degree <= deg/2 remains, so the cofactor is irreducible.
    auto idx = find(codec_.encode(rest));
    if (!idx) throw std::logic_error("irreducible cofactor missing from table: " + rest.to_string());
    auto it = std::find_if(out.factors.begin(), out.factors.end(),
                           [&](const PrimePower& pp) { return pp.index == *idx; });
    if (it != out.factors.end()) {
      ++it->exponent;
    } else {
      out.factors.push_back({*idx, 1});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.index < b.index; });
  return out;
}

Polynomial IrreducibleTable::expand(const PolyRing& ring, const Factorization& f) const {
  Polynomial acc = Polynomial::constant(f.unit);
  for (const PrimePower& pp : f.factors) {
    acc = ring.mul(acc, ring.pow(entries_.at(pp.index).poly, static_cast<unsigned>(pp.exponent)));
  }
  return acc;
}

}  // namespace ffm
