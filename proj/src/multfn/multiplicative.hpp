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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "algebra/context.hpp"
#include "characters/hayes.hpp"
#include "common/unit_value.hpp"
#include "json.hpp"

namespace ffm {

enum class MultKind { Multiplicative, CompletelyMultiplicative };

enum class RandomValues { PlusMinusOne, UnitCircle };

/// The immutable rule behind a multiplicative function. Values are exact:
/// zero or a root of unity with rational angle.
class MultiplicativeRule {
 public:
  virtual ~MultiplicativeRule() = default;

  virtual MultKind kind() const = 0;
  /// f(p^k) for k >= 1.
  virtual UnitValue prime_power(const Irreducible& p, int k) const = 0;
  /// f(c) for a nonzero constant c.
  virtual UnitValue unit(FieldElement c) const;
  /// Evaluation without factoring, when the rule has one.
  virtual std::optional<UnitValue> direct(const Polynomial& g) const;
  /// f(p^k) when it depends only on (deg p, k).
  virtual std::optional<UnitValue> by_degree(int d, int k) const;
  virtual nlohmann::json descriptor() const = 0;
};

/// A multiplicative function on F_q[x] with f(0) = 0, evaluated through
/// the irreducible cache and memoized. Copies share the rule and the memo.
class MultiplicativeFunction {
 public:
  /// moebius (alias mu), liouville (alias lambda), one.
  static MultiplicativeFunction builtin(ContextPtr ctx, const std::string& name);
  static std::vector<std::string> builtin_names();
  static MultiplicativeFunction from_character(ContextPtr ctx, HayesCharacter H);
  /// Independent uniform values on irreducibles derived from (seed, code),
  /// extended completely multiplicatively. Unit-circle values are
  /// e(k / 2^20) with k uniform.
  static MultiplicativeFunction random_on_irreducibles(ContextPtr ctx, std::uint64_t seed, RandomValues values);
  /// f * H, or f * conj(H) when conjugate is set.
  static MultiplicativeFunction twist(const MultiplicativeFunction& f, HayesCharacter H, bool conjugate = false);
  static MultiplicativeFunction custom(ContextPtr ctx, std::shared_ptr<const MultiplicativeRule> rule);
  /// {"type": "builtin" | "random" | "character" | "twist", ...}.
  static MultiplicativeFunction from_json(ContextPtr ctx, const nlohmann::json& j);

  MultKind kind() const { return rule_->kind(); }
  const FieldContext& context() const { return *ctx_; }
  const ContextPtr& context_ptr() const { return ctx_; }
  nlohmann::json descriptor() const { return rule_->descriptor(); }
  const MultiplicativeRule& rule() const { return *rule_; }

  /// Throws InvalidArgument when g has degree beyond the irreducible cache
  /// and the rule has no direct evaluation.
  UnitValue eval(const Polynomial& g) const;
  UnitValue eval_uncached(const Polynomial& g) const;
  std::complex<double> operator()(const Polynomial& g) const { return eval(g).to_complex(); }

  UnitValue at_prime_power(const Irreducible& p, int k) const;
  std::optional<UnitValue> degree_rule(int d, int k) const { return rule_->by_degree(d, k); }
  bool depends_only_on_degree() const { return rule_->by_degree(1, 1).has_value(); }

  std::size_t memo_size() const;
  void set_memo_capacity(std::size_t entries) const;

 private:
  struct Memo;

  MultiplicativeFunction(ContextPtr ctx, std::shared_ptr<const MultiplicativeRule> rule);

  ContextPtr ctx_;
  std::shared_ptr<const MultiplicativeRule> rule_;
  std::shared_ptr<Memo> memo_;
};

}  // namespace ffm
