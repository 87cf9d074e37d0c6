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

#include "algebra/field.hpp"

#include <cmath>
#include <numbers>

#include "common/error.hpp"
#include "common/unit_value.hpp"

namespace ffm {

namespace {

using Coeffs = std::vector<std::uint32_t>;

// Polynomials over F_p with lowest coefficient first, used only while the
// field tables are being built.
Coeffs digits(std::uint32_t code, std::uint32_t p, int len) {
  Coeffs out(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    out[static_cast<std::size_t>(i)] = code % p;
    code /= p;
  }
  return out;
}

std::uint32_t undigits(const Coeffs& c, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
  return code;
}

// (a * b) mod modulus, modulus monic of degree r.
Coeffs mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& modulus, std::uint32_t p) {
  int r = static_cast<int>(modulus.size()) - 1;
  std::vector<std::uint64_t> prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += std::uint64_t{a[i]} * b[j];
  }
  for (auto& v : prod) v %= p;
  for (std::size_t k = prod.size(); k-- > static_cast<std::size_t>(r);) {
    std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (int i = 0; i <= r; ++i) {
      std::size_t idx = k - static_cast<std::size_t>(r) + static_cast<std::size_t>(i);
      prod[idx] = (prod[idx] + (p - c) * modulus[static_cast<std::size_t>(i)]) % p;
    }
  }
  Coeffs out(static_cast<std::size_t>(r), 0);
  for (int i = 0; i < r && static_cast<std::size_t>(i) < prod.size(); ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(prod[static_cast<std::size_t>(i)]);
  }
  return out;
}

// Remainder of a modulo a monic b over F_p; both lowest-first, b.back() == 1.
Coeffs remainder_monic(Coeffs a, const Coeffs& b, std::uint32_t p) {
  std::size_t db = b.size() - 1;
  while (a.size() > db) {
    std::uint32_t c = a.back();
    std::size_t shift = a.size() - 1 - db;
    if (c != 0) {
      for (std::size_t i = 0; i <= db; ++i) {
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + std::uint64_t{p - c} * b[i]) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

bool irreducible_over_prime_field(const Coeffs& f, std::uint32_t p) {
  int r = static_cast<int>(f.size()) - 1;
  // Trial division by every monic polynomial of degree 1..r/2.
  for (int d = 1; 2 * d <= r; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Coeffs g = digits(static_cast<std::uint32_t>(low), p, d);
      g.push_back(1);
      Coeffs rem = remainder_monic(f, g, p);
      bool zero = true;
      for (auto c : rem) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::shared_ptr<const GaloisField> GaloisField::build(std::uint32_t p, int r) {
  require(is_prime(p), "field characteristic " + std::to_string(p) + " is not prime");
  require(r >= 1, "extension degree must be at least 1");
  std::uint64_t q64 = 1;
  for (int i = 0; i < r; ++i) {
    q64 *= p;
    require(q64 <= kMaxOrder, "field order p^r exceeds the supported maximum " +
                                  std::to_string(kMaxOrder));
  }
  auto F = std::shared_ptr<GaloisField>(new GaloisField());
  F->p_ = p;
  F->r_ = r;
  F->q_ = static_cast<std::uint32_t>(q64);
  const std::uint32_t q = F->q_;

  if (r == 1) {
    F->modulus_ = {0, 1};
  } else {
    for (std::uint32_t low = 0; low < q; ++low) {
      Coeffs f = digits(low, p, r);
      f.push_back(1);
      if (irreducible_over_prime_field(f, p)) {
        F->modulus_ = f;
        break;
      }
    }
  }

  F->add_.resize(std::size_t{q} * q);
  F->mul_.resize(std::size_t{q} * q);
  F->neg_.resize(q);
  F->inv_.assign(q, 0);
  std::vector<Coeffs> coords(q);
  for (std::uint32_t a = 0; a < q; ++a) coords[a] = digits(a, p, r);
  for (std::uint32_t a = 0; a < q; ++a) {
    Coeffs n(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) n[static_cast<std::size_t>(i)] = (p - coords[a][static_cast<std::size_t>(i)]) % p;
    F->neg_[a] = undigits(n, p);
    for (std::uint32_t b = 0; b < q; ++b) {
      Coeffs s(static_cast<std::size_t>(r));
      for (int i = 0; i < r; ++i) {
        auto ii = static_cast<std::size_t>(i);
        s[ii] = (coords[a][ii] + coords[b][ii]) % p;
      }
      F->add_[std::size_t{a} * q + b] = undigits(s, p);
      std::uint32_t m;
      if (r == 1) {
        m = static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
      } else {
        m = undigits(mulmod(coords[a], coords[b], F->modulus_, p), p);
      }
      F->mul_[std::size_t{a} * q + b] = m;
      if (m == 1) F->inv_[a] = b;
    }
  }

  F->trace_.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    FieldElement t{a};
    FieldElement acc = F->zero();
    FieldElement frob = t;
    for (int i = 0; i < r; ++i) {
      acc = F->add(acc, frob);
      frob = F->pow(frob, p);
    }
    if (acc.code >= p) throw std::logic_error("trace left the prime field");
    F->trace_[a] = acc.code;
  }

  F->zeta_.resize(p);
  for (std::uint32_t k = 0; k < p; ++k) F->zeta_[k] = unit_circle(k, p);

  F->log_.assign(q, 0);
  for (std::uint32_t g = 1; g < q; ++g) {
    std::uint32_t x = 1;
    std::uint32_t order = 0;
    do {
      x = F->mul_[std::size_t{x} * q + g];
      ++order;
    } while (x != 1);
    if (order == q - 1) {
      F->primitive_ = g;
      break;
    }
  }
  std::uint32_t x = 1;
  for (std::uint32_t k = 0; k + 1 < q; ++k) {
    F->log_[x] = k;
    x = F->mul_[std::size_t{x} * q + F->primitive_];
  }
  return F;
}

FieldElement GaloisField::element(std::uint32_t code) const {
  require(code < q_, "field element code out of range");
  return {code};
}

FieldElement GaloisField::from_int(std::int64_t k) const {
  std::int64_t m = k % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  return {static_cast<std::uint32_t>(m)};
}

std::vector<std::uint32_t> GaloisField::coordinates(FieldElement a) const { return digits(a.code, p_, r_); }

FieldElement GaloisField::from_coordinates(std::span<const std::uint32_t> coords) const {
  require(coords.size() == static_cast<std::size_t>(r_), "wrong number of coordinates");
  std::uint32_t code = 0;
  for (std::size_t i = coords.size(); i-- > 0;) {
    require(coords[i] < p_, "coordinate out of range");
    code = code * p_ + coords[i];
  }
  return {code};
}

FieldElement GaloisField::inv(FieldElement a) const {
  require(a.code != 0, "inverse of zero in F_q");
  return {inv_[a.code]};
}

FieldElement GaloisField::pow(FieldElement a, std::uint64_t k) const {
  FieldElement result = one();
  FieldElement base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::uint32_t GaloisField::discrete_log(FieldElement a) const {
  require(a.code != 0, "discrete log of zero");
  return log_[a.code];
}

}  // namespace ffm
