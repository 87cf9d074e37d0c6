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

#include "multfn/multiplicative.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "common/error.hpp"

namespace ffm {

UnitValue MultiplicativeRule::unit(FieldElement) const { return UnitValue::one(); }
std::optional<UnitValue> MultiplicativeRule::direct(const Polynomial&) const { return std::nullopt; }
std::optional<UnitValue> MultiplicativeRule::by_degree(int, int) const { return std::nullopt; }

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

enum class Builtin { Moebius, Liouville, One };

class BuiltinRule final : public MultiplicativeRule {
 public:
  explicit BuiltinRule(Builtin which) : which_(which) {}

  MultKind kind() const override {
    return which_ == Builtin::Moebius ? MultKind::Multiplicative : MultKind::CompletelyMultiplicative;
  }
  UnitValue prime_power(const Irreducible& p, int k) const override { return *by_degree(p.degree, k); }
  std::optional<UnitValue> by_degree(int, int k) const override {
    switch (which_) {
      case Builtin::Moebius:
        return k == 0 ? UnitValue::one() : (k == 1 ? UnitValue::minus_one() : UnitValue::zero());
      case Builtin::Liouville:
        return k % 2 == 0 ? UnitValue::one() : UnitValue::minus_one();
      case Builtin::One:
        return UnitValue::one();
    }
    return std::nullopt;
  }
  nlohmann::json descriptor() const override {
    static const char* names[] = {"moebius", "liouville", "one"};
    return {{"type", "builtin"}, {"name", names[static_cast<int>(which_)]}};
  }

 private:
  Builtin which_;
};

class RandomRule final : public MultiplicativeRule {
 public:
  RandomRule(std::uint64_t seed, RandomValues values) : seed_(seed), values_(values) {}

  MultKind kind() const override { return MultKind::CompletelyMultiplicative; }
  UnitValue prime_power(const Irreducible& p, int k) const override {
    std::uint64_t h = splitmix64(seed_ ^ splitmix64(p.code));
    UnitValue v = values_ == RandomValues::PlusMinusOne
                      ? (h >> 63 ? UnitValue::minus_one() : UnitValue::one())
                      : UnitValue(Angle(static_cast<std::int64_t>(h >> 44), std::uint64_t{1} << 20));
    return v.pow(k);
  }
  nlohmann::json descriptor() const override {
    return {{"type", "random"},
            {"seed", seed_},
            {"values", values_ == RandomValues::PlusMinusOne ? "pm1" : "circle"}};
  }

 private:
  std::uint64_t seed_;
  RandomValues values_;
};

class CharacterRule final : public MultiplicativeRule {
 public:
  explicit CharacterRule(HayesCharacter H) : H_(std::move(H)) {}

  MultKind kind() const override { return MultKind::CompletelyMultiplicative; }
  UnitValue prime_power(const Irreducible& p, int k) const override { return H_(p.poly).pow(k); }
  UnitValue unit(FieldElement c) const override { return H_(Polynomial::constant(c)); }
  std::optional<UnitValue> direct(const Polynomial& g) const override { return H_(g); }
  std::optional<UnitValue> by_degree(int d, int k) const override {
    if (!H_.depends_only_on_degree()) return std::nullopt;
    return UnitValue(H_.theta().times(static_cast<std::int64_t>(d) * k));
  }
  nlohmann::json descriptor() const override { return {{"type", "character"}, {"character", H_.to_json()}}; }

 private:
  HayesCharacter H_;
};

class TwistRule final : public MultiplicativeRule {
 public:
  TwistRule(MultiplicativeFunction base, HayesCharacter H, bool conjugate)
      : base_(std::move(base)), H_(std::move(H)), conjugate_(conjugate) {}

  MultKind kind() const override { return base_.kind(); }
  UnitValue prime_power(const Irreducible& p, int k) const override {
    return base_.at_prime_power(p, k) * h(p.poly).pow(k);
  }
  UnitValue unit(FieldElement c) const override {
    return base_.rule().unit(c) * h(Polynomial::constant(c));
  }
  std::optional<UnitValue> direct(const Polynomial& g) const override { return base_.eval(g) * h(g); }
  std::optional<UnitValue> by_degree(int d, int k) const override {
    if (!H_.depends_only_on_degree()) return std::nullopt;
    auto b = base_.degree_rule(d, k);
    if (!b) return std::nullopt;
    Angle a = H_.theta().times(static_cast<std::int64_t>(d) * k);
    return *b * UnitValue(conjugate_ ? -a : a);
  }
  nlohmann::json descriptor() const override {
    return {{"type", "twist"}, {"base", base_.descriptor()}, {"character", H_.to_json()}, {"conjugate", conjugate_}};
  }

 private:
  UnitValue h(const Polynomial& g) const {
    UnitValue v = H_(g);
    return conjugate_ ? v.conj() : v;
  }

  MultiplicativeFunction base_;
  HayesCharacter H_;
  bool conjugate_;
};

}  // namespace

struct MultiplicativeFunction::Memo {
  mutable std::shared_mutex mutex;
  std::unordered_map<std::uint64_t, UnitValue> values;
  std::size_t capacity = 0;
};

MultiplicativeFunction::MultiplicativeFunction(ContextPtr ctx, std::shared_ptr<const MultiplicativeRule> rule)
    : ctx_(std::move(ctx)), rule_(std::move(rule)), memo_(std::make_shared<Memo>()) {
  require(ctx_ != nullptr, "missing field context");
  require(rule_ != nullptr, "missing multiplicative rule");
  memo_->capacity = ctx_->budgets().memo_entries;
}

MultiplicativeFunction MultiplicativeFunction::builtin(ContextPtr ctx, const std::string& name) {
  Builtin which;
  if (name == "moebius" || name == "mu" || name == "mobius") {
    which = Builtin::Moebius;
  } else if (name == "liouville" || name == "lambda") {
    which = Builtin::Liouville;
  } else if (name == "one") {
    which = Builtin::One;
  } else {
    throw InvalidArgument("unknown builtin function \"" + name + "\" (expected moebius, liouville or one)");
  }
  return MultiplicativeFunction(std::move(ctx), std::make_shared<BuiltinRule>(which));
}

std::vector<std::string> MultiplicativeFunction::builtin_names() { return {"moebius", "liouville", "one"}; }

MultiplicativeFunction MultiplicativeFunction::from_character(ContextPtr ctx, HayesCharacter H) {
  return MultiplicativeFunction(std::move(ctx), std::make_shared<CharacterRule>(std::move(H)));
}

MultiplicativeFunction MultiplicativeFunction::random_on_irreducibles(ContextPtr ctx, std::uint64_t seed,
                                                                      RandomValues values) {
  return MultiplicativeFunction(std::move(ctx), std::make_shared<RandomRule>(seed, values));
}

MultiplicativeFunction MultiplicativeFunction::twist(const MultiplicativeFunction& f, HayesCharacter H,
                                                     bool conjugate) {
  return MultiplicativeFunction(f.ctx_, std::make_shared<TwistRule>(f, std::move(H), conjugate));
}

MultiplicativeFunction MultiplicativeFunction::custom(ContextPtr ctx, std::shared_ptr<const MultiplicativeRule> rule) {
  return MultiplicativeFunction(std::move(ctx), std::move(rule));
}

MultiplicativeFunction MultiplicativeFunction::from_json(ContextPtr ctx, const nlohmann::json& j) {
  if (j.is_string()) return builtin(std::move(ctx), j.get<std::string>());
  require(j.is_object(), "function descriptor must be an object or a builtin name");
  require(j.contains("type") && j.at("type").is_string(), "function descriptor needs a string \"type\"");
  const std::string type = j.at("type").get<std::string>();
  auto allow = [&](std::initializer_list<const char*> keys) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      bool ok = it.key() == "type";
      for (const char* k : keys) ok |= it.key() == k;
      require(ok, "unknown key \"" + it.key() + "\" in " + type + " function descriptor");
    }
  };
  if (type == "builtin") {
    allow({"name"});
    require(j.contains("name") && j.at("name").is_string(), "builtin function needs a \"name\"");
    return builtin(std::move(ctx), j.at("name").get<std::string>());
  }
  if (type == "random") {
    allow({"seed", "values"});
    require(j.contains("seed") && j.at("seed").is_number_integer(), "random function needs an integer \"seed\"");
    std::string values = j.value("values", std::string("pm1"));
    require(values == "pm1" || values == "circle", "random \"values\" must be \"pm1\" or \"circle\"");
    return random_on_irreducibles(std::move(ctx), j.at("seed").get<std::uint64_t>(),
                                  values == "pm1" ? RandomValues::PlusMinusOne : RandomValues::UnitCircle);
  }
  if (type == "character") {
    allow({"character"});
    return from_character(ctx, HayesCharacter::from_json(ctx, j.value("character", nlohmann::json::object())));
  }
  if (type == "twist") {
    allow({"base", "character", "conjugate"});
    require(j.contains("base"), "twist needs a \"base\" function");
    auto base = from_json(ctx, j.at("base"));
    auto H = HayesCharacter::from_json(ctx, j.value("character", nlohmann::json::object()));
    return twist(base, std::move(H), j.value("conjugate", false));
  }
  throw InvalidArgument("unknown function type \"" + type + "\"");
}

UnitValue MultiplicativeFunction::at_prime_power(const Irreducible& p, int k) const {
  require(k >= 0, "prime power exponent must be >= 0");
  if (k == 0) return UnitValue::one();
  return rule_->prime_power(p, k);
}

UnitValue MultiplicativeFunction::eval_uncached(const Polynomial& g) const {
  if (g.is_zero()) return UnitValue::zero();
  if (auto v = rule_->direct(g)) return *v;
  Factorization f = ctx_->factor(g);
  UnitValue v = rule_->unit(f.unit);
  const auto& table = ctx_->irreducibles();
  for (const PrimePower& pp : f.factors) {
    if (v.is_zero()) break;
    v *= rule_->prime_power(table[pp.index], pp.exponent);
  }
  return v;
}

UnitValue MultiplicativeFunction::eval(const Polynomial& g) const {
  if (g.is_zero()) return UnitValue::zero();
  if (auto v = rule_->direct(g)) return *v;
  const std::uint64_t key = ctx_->codec().encode(g);
  {
    std::shared_lock lock(memo_->mutex);
    auto it = memo_->values.find(key);
    if (it != memo_->values.end()) return it->second;
  }
  UnitValue v = eval_uncached(g);
  std::unique_lock lock(memo_->mutex);
  if (memo_->values.size() < memo_->capacity) memo_->values.emplace(key, v);
  return v;
}

std::size_t MultiplicativeFunction::memo_size() const {
  std::shared_lock lock(memo_->mutex);
  return memo_->values.size();
}

void MultiplicativeFunction::set_memo_capacity(std::size_t entries) const {
  std::unique_lock lock(memo_->mutex);
  memo_->capacity = entries;
  if (memo_->values.size() > entries) memo_->values.clear();
}

}  // namespace ffm
