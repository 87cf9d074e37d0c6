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
#include <vector>

#include "analytics/tables.hpp"

namespace ffm {

/// ||f||_{U^k} on G_n by iterated multiplicative differencing; costs about
/// q^{nk} evaluations. U^1 = |E f|.
double gowers_norm(const GaloisField& F, const FunctionTable& f, int k, double budget = 1e8);

/// The same norm straight from the 2^k-corner cube average; q^{n(k+1)} 2^k
/// evaluations, for small cross-checks.
double gowers_norm_cube(const GaloisField& F, const FunctionTable& f, int k, double budget = 1e8);

/// fhat(xi) = E_x f(x) conj(alpha_1(<x, xi>)) with <x, xi> = Tr(sum_j x_j xi_j),
/// indexed by the code of xi.
std::vector<std::complex<double>> fourier_transform(const GaloisField& F, const FunctionTable& f,
                                                    double budget = 1e8);

/// (sum_xi |fhat(xi)|^4)^{1/4}.
double u2_fourier(const GaloisField& F, const FunctionTable& f, double budget = 1e8);

struct ApCorrelation {
  std::complex<double> mean;
  double bound = 0.0;  // U^{k-1}(f_k)
  bool holds = false;  // |mean| <= bound + 1e-9

  nlohmann::json to_json() const;
};

/// E_{x,y} prod_j f_j(x + (j-1) y) for k = fs.size() in [2, p).
ApCorrelation ap_correlation(const GaloisField& F, const std::vector<FunctionTable>& fs, double budget = 1e8);

}  // namespace ffm
