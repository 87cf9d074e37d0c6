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

#include "common/unit_value.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "common/error.hpp"

namespace ffm {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kMaxDen = std::uint64_t{1} << 62;

}  // namespace

Angle::Angle(std::int64_t num, std::uint64_t den) {
  require(den > 0, "angle denominator must be positive");
  std::int64_t sden = static_cast<std::int64_t>(den);
  std::int64_t r = num % sden;
  if (r < 0) r += sden;
  std::uint64_t n = static_cast<std::uint64_t>(r);
  std::uint64_t g = std::gcd(n, den);
  num_ = n / g;
  den_ = den / g;
}

Angle Angle::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      std::int64_t a = std::stoll(text.substr(0, slash));
      std::int64_t b = std::stoll(text.substr(slash + 1));
      require(b > 0, "angle denominator must be positive: " + text);
      return Angle(a, static_cast<std::uint64_t>(b));
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Angle(std::stoll(text), 1);
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    require(frac.size() <= 15, "too many decimal digits in angle: " + text);
    bool neg = !whole.empty() && whole[0] == '-';
    std::int64_t w = whole.empty() || whole == "-" ? 0 : std::stoll(whole);
    std::int64_t f = frac.empty() ? 0 : std::stoll(frac);
    std::uint64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    std::int64_t num = std::llabs(w) * static_cast<std::int64_t>(den) + f;
    return Angle(neg ? -num : num, den);
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const InvalidArgument*>(&e)) throw;
    throw InvalidArgument("cannot parse angle: '" + text + "'");
  }
}

Angle Angle::operator+(const Angle& o) const {
  std::uint64_t g = std::gcd(den_, o.den_);
  u128 den = static_cast<u128>(den_ / g) * o.den_;
  u128 num = static_cast<u128>(num_) * (o.den_ / g) + static_cast<u128>(o.num_) * (den_ / g);
  num %= den;
  u128 a = num, b = den;
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  u128 g128 = a == 0 ? 1 : a;
  num /= g128;
  den /= g128;
  if (den > kMaxDen) throw InvalidArgument("angle denominator overflow");
  Angle out;
  out.num_ = static_cast<std::uint64_t>(num);
  out.den_ = static_cast<std::uint64_t>(den);
  return out;
}

Angle Angle::operator-() const {
  Angle out;
  out.den_ = den_;
  out.num_ = num_ == 0 ? 0 : den_ - num_;
  return out;
}

Angle Angle::times(std::int64_t k) const {
  std::int64_t kk = k % static_cast<std::int64_t>(den_);
  if (kk < 0) kk += static_cast<std::int64_t>(den_);
  u128 num = static_cast<u128>(num_) * static_cast<std::uint64_t>(kk);
  num %= den_;
  return Angle(static_cast<std::int64_t>(num), den_);
}

std::string Angle::to_string() const {
  if (num_ == 0) return "0";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

UnitValue UnitValue::operator*(const UnitValue& o) const {
  if (zero_ || o.zero_) return zero();
  return UnitValue(angle_ + o.angle_);
}

UnitValue UnitValue::conj() const {
  if (zero_) return *this;
  return UnitValue(-angle_);
}

UnitValue UnitValue::pow(std::int64_t k) const {
  if (zero_) return k == 0 ? one() : zero();
  return UnitValue(angle_.times(k));
}

std::complex<double> unit_circle(std::uint64_t num, std::uint64_t den) {
  if (num == 0) return {1.0, 0.0};
  if (4 % den == 0) {
    switch (num * (4 / den)) {
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
      default: break;
    }
  }
  double t = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
  return {std::cos(t), std::sin(t)};
}

std::complex<double> UnitValue::to_complex() const {
  if (zero_) return {0.0, 0.0};
  return unit_circle(angle_.num(), angle_.den());
}

std::string UnitValue::to_string() const {
  if (zero_) return "0";
  return "e(" + angle_.to_string() + ")";
}

}  // namespace ffm
