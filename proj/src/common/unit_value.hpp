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

// Exact values of multiplicative functions and characters.
//
// Every function this library builds takes values in {0} ∪ {roots of unity}.
// A root of unity is stored as an angle a/b in Q/Z, so products, powers and
// conjugates are exact. Conversion to std::complex happens only when sums are
// formed.

#pragma once

#include <complex>
#include <cstdint>
#include <string>

namespace ffm {

/// A reduced fraction num/den in [0, 1), read as the point e(num/den) on the
/// unit circle.
class Angle {
 public:
  constexpr Angle() = default;
  Angle(std::int64_t num, std::uint64_t den);

  static Angle zero() { return Angle{}; }
  /// Parses "a/b", an integer, or a finite decimal such as "0.25".
  static Angle parse(const std::string& text);

  std::uint64_t num() const { return num_; }
  std::uint64_t den() const { return den_; }

  Angle operator+(const Angle& o) const;
  Angle operator-() const;
  Angle operator-(const Angle& o) const { return *this + (-o); }
  Angle times(std::int64_t k) const;

  double as_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend bool operator==(const Angle&, const Angle&) = default;

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

/// Zero or a root of unity e(angle).
class UnitValue {
 public:
  constexpr UnitValue() = default;  // the value 1
  explicit UnitValue(Angle a) : angle_(a) {}

  static UnitValue one() { return UnitValue{}; }
  static UnitValue zero() {
    UnitValue v;
    v.zero_ = true;
    return v;
  }
  static UnitValue minus_one() { return UnitValue(Angle(1, 2)); }
  static UnitValue root(std::int64_t k, std::uint64_t order) { return UnitValue(Angle(k, order)); }

  bool is_zero() const { return zero_; }
  const Angle& angle() const { return angle_; }

  UnitValue operator*(const UnitValue& o) const;
  UnitValue& operator*=(const UnitValue& o) { return *this = *this * o; }
  UnitValue conj() const;
  UnitValue pow(std::int64_t k) const;

  /// Exact for angles with denominator dividing 4; std::polar otherwise.
  std::complex<double> to_complex() const;
  std::string to_string() const;

  friend bool operator==(const UnitValue& a, const UnitValue& b) {
    if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
    return a.angle_ == b.angle_;
  }

 private:
  bool zero_ = false;
  Angle angle_;
};

/// exp(2*pi*i*x) with exact results at multiples of 1/4.
std::complex<double> unit_circle(std::uint64_t num, std::uint64_t den);

}  // namespace ffm
