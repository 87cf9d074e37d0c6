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

#include "analytics/gowers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "common/error.hpp"
#include "common/reduce.hpp"

namespace ffm {

namespace {

void check_table(const GaloisField& F, const FunctionTable& f) {
  require(f.q == F.q(), "function table and field disagree on q");
  require(f.size() == checked_pow(F.q(), f.n), "function table has the wrong size");
}

std::complex<double> mean_of(const std::vector<std::complex<double>>& v) {
  return deterministic_sum(v.size(), [&](std::uint64_t i) { return v[i]; }) / static_cast<double>(v.size());
}

// E_{h_1..h_depth} |E_x D_{h_1..h_depth} g(x)|^2
double difference_energy(const CodeArithmetic& A, const std::vector<std::complex<double>>& g, int depth) {
  if (depth == 0) return std::norm(mean_of(g));
  const std::uint64_t N = A.size();
  std::vector<double> per_h(N);
  std::vector<std::complex<double>> d(N);
  for (std::uint64_t h = 0; h < N; ++h) {
    for (std::uint64_t x = 0; x < N; ++x) d[x] = g[A.add(x, h)] * std::conj(g[x]);
    per_h[h] = difference_energy(A, d, depth - 1);
  }
  return pairwise_sum(std::span<const double>(per_h)) / static_cast<double>(N);
}

double root(double v, int k) { return std::pow(std::max(0.0, v), 1.0 / std::ldexp(1.0, k)); }

}  // namespace

double gowers_norm(const GaloisField& F, const FunctionTable& f, int k, double budget) {
  check_table(F, f);
  require(k >= 1, "Gowers norm order must be >= 1");
  check_budget(std::pow(power_estimate(F.q(), f.n), k), budget, "U^" + std::to_string(k) + " norm");
  CodeArithmetic A(F, f.n);
  if (k == 1) return std::abs(mean_of(f.values));
  return root(difference_energy(A, f.values, k - 1), k);
}

double gowers_norm_cube(const GaloisField& F, const FunctionTable& f, int k, double budget) {
  check_table(F, f);
  require(k >= 1, "Gowers norm order must be >= 1");
  const double cost = std::pow(power_estimate(F.q(), f.n), k + 1) * std::ldexp(1.0, k);
  check_budget(cost, budget, "cube U^" + std::to_string(k) + " norm");
  CodeArithmetic A(F, f.n);
  const std::uint64_t N = A.size();
  const std::uint64_t tuples = checked_pow(N, k + 1);
  std::vector<std::uint64_t> corner(std::size_t{1} << k);
  ComplexSum acc;
  std::vector<std::uint64_t> h(static_cast<std::size_t>(k));
  for (std::uint64_t t = 0; t < tuples; ++t) {
    std::uint64_t rest = t;
    const std::uint64_t x = rest % N;
    rest /= N;
    for (auto& hi : h) {
      hi = rest % N;
      rest /= N;
    }
    std::complex<double> prod = 1.0;
    for (std::uint64_t w = 0; w < corner.size(); ++w) {
      std::uint64_t pt = x;
      for (int i = 0; i < k; ++i)
        if (w >> i & 1) pt = A.add(pt, h[static_cast<std::size_t>(i)]);
      prod *= std::popcount(w) % 2 ? std::conj(f[pt]) : f[pt];
    }
    acc.add(prod);
  }
  return root(acc.value().real() / static_cast<double>(tuples), k);
}

std::vector<std::complex<double>> fourier_transform(const GaloisField& F, const FunctionTable& f, double budget) {
  check_table(F, f);
  const std::uint32_t p = F.p();
  const int digits = f.n * F.r();
  check_budget(static_cast<double>(f.size()) * p * std::max(1, digits), budget, "Fourier transform");
  // F_p-dual transform: a[eta] = E_x f(x) zeta^{-sum x_i eta_i} over base-p digits
  std::vector<std::complex<double>> a(f.values);
  std::vector<std::complex<double>> zeta(p);
  for (std::uint32_t k = 0; k < p; ++k) zeta[k] = std::conj(F.root_of_unity(k));
  std::vector<std::complex<double>> buf(p);
  std::uint64_t stride = 1;
  for (int d = 0; d < digits; ++d) {
    const std::uint64_t block = stride * p;
    for (std::uint64_t base = 0; base < a.size(); base += block) {
      for (std::uint64_t off = 0; off < stride; ++off) {
        for (std::uint32_t e = 0; e < p; ++e) {
          ComplexSum s;
          for (std::uint32_t x = 0; x < p; ++x) s.add(a[base + off + x * stride] * zeta[(x * e) % p]);
          buf[e] = s.value();
        }
        for (std::uint32_t e = 0; e < p; ++e) a[base + off + e * stride] = buf[e];
      }
    }
    stride = block;
  }
  const double inv = 1.0 / static_cast<double>(a.size());
  // relabel: xi in F_q pairs through Tr(x xi), whose F_p-dual coordinates are
  // eta_i = Tr(b_i xi) for the basis b_i = element with code p^i
  std::vector<std::uint64_t> eta(F.q());
  for (std::uint32_t xi = 0; xi < F.q(); ++xi) {
    std::uint64_t code = 0, b = 1;
    for (int i = 0; i < F.r(); ++i) {
      code += F.trace(F.mul(FieldElement{static_cast<std::uint32_t>(b)}, FieldElement{xi})) * b;
      b *= p;
    }
    eta[xi] = code;
  }
  std::vector<std::complex<double>> out(a.size());
  for (std::uint64_t xi = 0; xi < a.size(); ++xi) {
    std::uint64_t rest = xi, dual = 0, scale = 1;
    for (int j = 0; j < f.n; ++j) {
      dual += eta[rest % F.q()] * scale;
      rest /= F.q();
      scale *= F.q();
    }
    out[xi] = a[dual] * inv;
  }
  return out;
}

double u2_fourier(const GaloisField& F, const FunctionTable& f, double budget) {
  auto hat = fourier_transform(F, f, budget);
  double s = deterministic_sum_real(hat.size(), [&](std::uint64_t i) { return std::norm(hat[i]) * std::norm(hat[i]); });
  return std::pow(std::max(0.0, s), 0.25);
}

nlohmann::json ApCorrelation::to_json() const {
  return {{"re", mean.real()}, {"im", mean.imag()}, {"abs", std::abs(mean)}, {"bound", bound}, {"holds", holds}};
}

ApCorrelation ap_correlation(const GaloisField& F, const std::vector<FunctionTable>& fs, double budget) {
  const int k = static_cast<int>(fs.size());
  require(k >= 2, "AP correlation needs at least two functions");
  require(static_cast<std::uint32_t>(k) < F.p(),
          "AP correlation of length " + std::to_string(k) + " needs k < p = " + std::to_string(F.p()));
  for (const auto& f : fs) {
    check_table(F, f);
    require(f.n == fs[0].n, "AP correlation functions live on different G_n");
  }
  const int n = fs[0].n;
  check_budget(std::pow(power_estimate(F.q(), n), 2) * k, budget, "AP correlation");
  CodeArithmetic A(F, n);
  const std::uint64_t N = A.size();
  std::vector<std::vector<std::uint64_t>> step(static_cast<std::size_t>(k), std::vector<std::uint64_t>(N));
  for (int j = 0; j < k; ++j)
    for (std::uint64_t y = 0; y < N; ++y) step[static_cast<std::size_t>(j)][y] = A.times(j, y);
  ApCorrelation out;
  out.mean = deterministic_sum(N * N, [&](std::uint64_t t) {
    const std::uint64_t x = t / N, y = t % N;
    std::complex<double> prod = 1.0;
    for (int j = 0; j < k; ++j) prod *= fs[static_cast<std::size_t>(j)][A.add(x, step[static_cast<std::size_t>(j)][y])];
    return prod;
  }) / static_cast<double>(N * N);
  out.bound = gowers_norm(F, fs.back(), k - 1, budget);
  out.holds = std::abs(out.mean) <= out.bound + 1e-9;
  return out;
}

}  // namespace ffm
