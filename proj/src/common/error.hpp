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

#pragma once

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace ffm {

/// Bad input: wrong domain, malformed descriptor, violated precondition.
/// Formats a cost estimate compactly, e.g. "1.67772e+07".
inline std::string format_count(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration or evaluation would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, double cost, double budget)
      : std::runtime_error(what + " (cost " + format_count(cost) +
                           " > budget " + format_count(budget) + ")"),
        cost_(cost),
        budget_(budget) {}

  double cost() const { return cost_; }
  double budget() const { return budget_; }

 private:
  double cost_;
  double budget_;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw InvalidArgument(msg);
}

inline void check_budget(double cost, double budget, const std::string& what) {
  if (cost > budget) throw BudgetExceeded(what, cost, budget);
}

/// q^n as a double, for budget estimates that may overflow integers.
double power_estimate(std::uint64_t q, int n);

/// q^n exactly; throws BudgetExceeded if the result does not fit in 63 bits.
std::uint64_t checked_pow(std::uint64_t q, int n);

}  // namespace ffm
