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
#include <optional>
#include <string>

#include "analytics/tables.hpp"
#include "json.hpp"
#include "multfn/multiplicative.hpp"
#include "phases/phase.hpp"

namespace ffm {

/// Fills "seed" into random function descriptors that lack one, recursing
/// into twist bases. Throws InvalidArgument when a seed is needed and none
/// is available.
nlohmann::json resolve_function_seeds(const nlohmann::json& desc, std::optional<std::uint64_t> seed);

/// A phase descriptor, or {"random": {"degree", "terms", "all_nonzero"}}
/// drawn from the seed. A missing "n" becomes `ambient`.
PolynomialPhase build_phase(const FieldContext& ctx, const nlohmann::json& desc, int ambient,
                            std::optional<std::uint64_t> seed);

/// Test-function descriptor: {"type": "one"}, {"type": "phase", "phase": ...}
/// or {"type": "character", "character": ...}.
FunctionTable tabulate_test(const ContextPtr& ctx, const nlohmann::json& test, int n, int ambient,
                            std::optional<std::uint64_t> seed);
void check_test_descriptor(const ContextPtr& ctx, const nlohmann::json& test, int ambient,
                           std::optional<std::uint64_t> seed);

}  // namespace ffm
