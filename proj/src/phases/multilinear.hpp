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
#include <vector>

#include "phases/phase.hpp"

namespace ffm {

class MultilinearForm;

/// c * L_1(x_1) * ... * L_m(x_m).
struct FormTerm {
  FieldElement coeff;
  std::vector<LaurentTruncation> slots;
};

/// c * A(x_S) * B(x_T) with S, T a partition of the slots into nonempty
/// sets; A and B are multilinear in their own slots.
struct PartitionBlock {
  FieldElement coeff;
  std::vector<int> left_slots;
  std::shared_ptr<const MultilinearForm> left;
  std::vector<int> right_slots;
  std::shared_ptr<const MultilinearForm> right;
};

/// A multilinear map G_{n_1} x ... x G_{n_m} -> F_q stored as rank-one
/// terms plus partition-rank blocks.
class MultilinearForm {
 public:
  MultilinearForm(FieldPtr field, std::vector<int> slot_dims);

  const GaloisField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int arity() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& slot_dims() const { return dims_; }
  const std::vector<FormTerm>& terms() const { return terms_; }
  const std::vector<PartitionBlock>& blocks() const { return blocks_; }
  bool is_zero() const { return terms_.empty() && blocks_.empty(); }

  void add_term(FieldElement c, std::vector<LaurentTruncation> slots);
  void add_block(FieldElement c, std::vector<int> left_slots, std::shared_ptr<const MultilinearForm> left,
                 std::vector<int> right_slots, std::shared_ptr<const MultilinearForm> right);

  FieldElement operator()(const std::vector<Polynomial>& x) const;

  /// Schmidt-rank upper bound of the phase this form was derived from.
  std::optional<int> source_schmidt_upper() const { return source_schmidt_upper_; }
  void set_source_schmidt_upper(int r) { source_schmidt_upper_ = r; }

  nlohmann::json to_json() const;
  static MultilinearForm from_json(FieldPtr field, const nlohmann::json& j);

 private:
  FieldPtr field_;
  std::vector<int> dims_;
  std::vector<FormTerm> terms_;
  std::vector<PartitionBlock> blocks_;
  std::optional<int> source_schmidt_upper_;
};

/// d^m P(h_1, ..., h_m) = Delta_{h_1} ... Delta_{h_m} P. Requires m < p,
/// deg P <= m, and monomials (if any) of degree <= m.
MultilinearForm derivative_form(const PolynomialPhase& P, int m);

/// P_Q(g) = Q(g, ..., g). All slots must share one dimension.
PolynomialPhase diagonal(const MultilinearForm& Q);

struct BiasResult {
  std::complex<double> mean;
  double bias = 0.0;           // Re(mean)
  double analytic_rank = 0.0;  // -log_q(bias); +inf when bias <= 0
  bool exhaustive = true;
  double std_error = 0.0;      // sampled mode only
  std::uint64_t samples = 0;
  std::vector<std::uint64_t> exponent_counts;  // exhaustive: #{x : Tr Q(x) = k}
};

/// E over every tuple of alpha_1(Q(x)), from exact integer counts per trace
/// value. Throws BudgetExceeded when prod q^{n_i} > budget.
BiasResult bias_exhaustive(const MultilinearForm& Q, double budget = 1e8);
BiasResult bias_sampled(const MultilinearForm& Q, std::uint64_t samples, std::uint64_t seed);

struct RankBounds {
  std::optional<int> schmidt_upper;
  std::optional<int> partition_upper;
  std::optional<int> derivative_bound;
};

/// Counts top-degree product terms; 0 below degree 2. derivative_bound is
/// 2^m times that count.
RankBounds rank_upper_bounds(const PolynomialPhase& P);
/// partition_upper counts rank-one terms and blocks (0 below arity 2);
/// derivative_bound is 2^m * source_schmidt_upper when recorded.
RankBounds rank_upper_bounds(const MultilinearForm& Q);

}  // namespace ffm
