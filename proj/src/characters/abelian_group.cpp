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

#include "characters/abelian_group.hpp"

#include <numeric>
#include <stdexcept>

#include "common/error.hpp"

namespace ffm {

AbelianGroupStructure AbelianGroupStructure::decompose(std::size_t size, std::size_t identity,
                                                       const Operation& op, double budget) {
  require(size >= 1, "a group needs at least one element");
  require(identity < size, "identity index outside the universe");
  check_budget(static_cast<double>(size), budget, "abelian group decomposition");

  auto step = [&](std::size_t a, std::size_t b) {
    std::size_t c = op(a, b);
    if (c >= size) throw InvalidArgument("operation is not closed on the universe");
    return c;
  };
  for (std::size_t x = 0; x < size; ++x) {
    if (step(identity, x) != x) throw InvalidArgument("declared identity is not neutral");
  }

  // Element orders; a power walk that never returns to the identity means
  // the element has no inverse.
  std::vector<std::uint64_t> ord(size, 0);
  for (std::size_t x = 0; x < size; ++x) {
    if (ord[x] != 0) continue;
    std::uint64_t k = 1;
    std::size_t y = x;
    while (y != identity) {
      y = step(y, x);
      if (++k > size) throw InvalidArgument("not a group: element " + std::to_string(x) + " has no inverse");
    }
    y = x;
    for (std::uint64_t j = 1; j <= k; ++j) {
      ord[y] = k / std::gcd(j, k);
      y = step(y, x);
    }
  }

  AbelianGroupStructure g;
  g.identity_ = identity;
  g.dlog_.assign(size, {});
  std::vector<bool> in_span(size, false);
  in_span[identity] = true;
  std::vector<std::size_t> span{identity};  // mixed-radix code -> element

  auto span_element = [&](const std::vector<std::uint32_t>& v) {
    std::size_t code = 0;
    for (std::size_t j = 0; j < v.size(); ++j) code = code * g.orders_[j] + v[j];
    return span[code];
  };

  while (span.size() < size) {
    std::size_t best = size;
    std::uint64_t best_m = 0;
    for (std::size_t x = 0; x < size; ++x) {
      if (in_span[x] || ord[x] <= best_m) continue;
      std::uint64_t m = 1;
      std::size_t y = x;
      while (!in_span[y]) {
        y = step(y, x);
        ++m;
      }
      if (m > best_m) {
        best_m = m;
        best = x;
      }
    }
    // x^m = sum t_j g_j inside the span; subtract (t_j / m) g_j to land in a complement.
    std::size_t y = identity;
    for (std::uint64_t i = 0; i < best_m; ++i) y = step(y, best);
    const std::vector<std::uint32_t> t = g.dlog_[y];
    std::vector<std::uint32_t> correction(t.size());
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (t[j] % best_m != 0) throw std::logic_error("group decomposition: lifting failed");
      std::uint64_t s = t[j] / best_m;
      correction[j] = static_cast<std::uint32_t>((g.orders_[j] - s % g.orders_[j]) % g.orders_[j]);
    }
    std::size_t gen = step(best, span_element(correction));
    if (ord[gen] != best_m) throw std::logic_error("group decomposition: lifted generator has wrong order");
    if (!g.orders_.empty() && g.orders_.back() % best_m != 0) {
      throw std::logic_error("group decomposition: orders do not form a divisibility chain");
    }

    std::vector<std::size_t> powers(best_m);
    powers[0] = identity;
    for (std::uint64_t e = 1; e < best_m; ++e) powers[e] = step(powers[e - 1], gen);
    std::vector<std::size_t> next;
    next.reserve(span.size() * best_m);
    for (std::size_t code = 0; code < span.size(); ++code) {
      const std::size_t base = span[code];
      const std::vector<std::uint32_t> base_vec = g.dlog_[base];
      for (std::uint64_t e = 0; e < best_m; ++e) {
        std::size_t z = e == 0 ? base : step(base, powers[e]);
        if (e != 0) {
          if (in_span[z]) throw std::logic_error("group decomposition: span is not a direct sum");
          in_span[z] = true;
        }
        g.dlog_[z] = base_vec;
        g.dlog_[z].push_back(static_cast<std::uint32_t>(e));
        next.push_back(z);
      }
    }
    span = std::move(next);
    g.generators_.push_back(gen);
    g.orders_.push_back(best_m);
  }
  g.by_vector_ = std::move(span);
  return g;
}

std::size_t AbelianGroupStructure::element(const std::vector<std::uint32_t>& v) const {
  require(v.size() == orders_.size(), "exponent vector has the wrong length");
  std::size_t code = 0;
  for (std::size_t j = 0; j < v.size(); ++j) code = code * orders_[j] + v[j] % orders_[j];
  return by_vector_[code];
}

std::vector<std::uint32_t> AbelianGroupStructure::character_vector(std::size_t index) const {
  require(index < size(), "character index out of range");
  std::vector<std::uint32_t> v(orders_.size());
  for (std::size_t j = orders_.size(); j-- > 0;) {
    v[j] = static_cast<std::uint32_t>(index % orders_[j]);
    index /= orders_[j];
  }
  return v;
}

std::size_t AbelianGroupStructure::character_index(const std::vector<std::uint32_t>& v) const {
  require(v.size() == orders_.size(), "character vector has the wrong length");
  std::size_t code = 0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    require(v[j] < orders_[j], "character vector entry out of range");
    code = code * orders_[j] + v[j];
  }
  return code;
}

Angle AbelianGroupStructure::character_angle(const std::vector<std::uint32_t>& c, std::size_t x) const {
  if (orders_.empty()) return Angle::zero();
  const std::uint64_t top = orders_[0];  // every order divides the first
  const auto& e = dlog_[x];
  unsigned __int128 acc = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    acc += static_cast<unsigned __int128>(c[j]) * e[j] * (top / orders_[j]);
    acc %= top;
  }
  return Angle(static_cast<std::int64_t>(acc), top);
}

}  // namespace ffm
