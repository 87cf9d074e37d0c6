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

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "algebra/context.hpp"
#include "characters/hayes.hpp"
#include "json.hpp"
#include "multfn/multiplicative.hpp"
#include "phases/phase.hpp"

namespace ffm {

enum class Domain { All, Nonzero, Monic };

Domain parse_domain(const std::string& s);
std::string to_string(Domain d);

/// Group arithmetic on G_n through PolyCodec codes. A code written in base p
/// lists the F_p-coordinates of its coefficients, so addition is digit-wise
/// mod p over n*r digits.
class CodeArithmetic {
 public:
  CodeArithmetic(const GaloisField& F, int n);

  std::uint64_t size() const { return size_; }
  int n() const { return n_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t p() const { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  /// k * a for an integer k.
  std::uint64_t times(std::int64_t k, std::uint64_t a) const;
  /// Leading coefficient code of the polynomial with this code; 0 for code 0.
  std::uint32_t leading(std::uint64_t a) const;
  bool in_domain(std::uint64_t a, Domain d) const;

 private:
  std::uint32_t q_, p_;
  int n_;
  int digits_;  // n * r
  std::uint64_t size_;
};

/// A complex-valued function on G_n stored by code.
struct FunctionTable {
  std::uint32_t q = 2;
  int n = 0;
  std::vector<std::complex<double>> values;

  std::size_t size() const { return values.size(); }
  const std::complex<double>& operator[](std::uint64_t c) const { return values[c]; }
};

/// f on G_n with f(0) = 0. Throws BudgetExceeded when q^n exceeds the
/// context's enumeration budget.
FunctionTable tabulate(const MultiplicativeFunction& f, int n);
/// alpha_1(P(g)) on G_n.
FunctionTable tabulate_phase_character(const PolynomialPhase& P, int n);
/// H(g) on G_n with H(0) = 0.
FunctionTable tabulate_character(const FieldContext& ctx, const HayesCharacter& H, int n);
FunctionTable constant_table(std::uint32_t q, int n, std::complex<double> v);
FunctionTable pointwise_product(const FunctionTable& a, const FunctionTable& b);

struct CorrelationResult {
  std::complex<double> mean;
  std::uint64_t count = 0;
  Domain domain = Domain::All;

  nlohmann::json to_json() const;
};

/// E over the domain of nu(g) * t(g).
CorrelationResult correlate(const FunctionTable& nu, const FunctionTable& t, Domain domain = Domain::All);

}  // namespace ffm
