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

// Deterministic folds over large index ranges.
//
// A range [0, count) is cut into chunks of a fixed size. Each chunk is summed
// with Neumaier compensation, and the per-chunk partials are combined by a
// fixed pairwise tree. Worker threads only decide *who* computes a chunk, so
// the result is bit-identical for any worker count.

#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace ffm {

/// 0 selects std::thread::hardware_concurrency().
void set_worker_count(unsigned n);
unsigned worker_count();

inline constexpr std::uint64_t kDefaultChunk = 4096;

class CompensatedSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class ComplexSum {
 public:
  void add(std::complex<double> z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

/// Pairwise (tree) summation in index order.
std::complex<double> pairwise_sum(std::span<const std::complex<double>> values);
double pairwise_sum(std::span<const double> values);

/// Calls body(begin, end, chunk_index) for each chunk, possibly concurrently.
void for_each_chunk(std::uint64_t count, std::uint64_t chunk,
                    const std::function<void(std::uint64_t, std::uint64_t, std::size_t)>& body);

/// Deterministic sum of term(i) over [0, count).
template <class Term>
std::complex<double> deterministic_sum(std::uint64_t count, Term&& term,
                                       std::uint64_t chunk = kDefaultChunk) {
  if (count == 0) return {0.0, 0.0};
  std::size_t chunks = static_cast<std::size_t>((count + chunk - 1) / chunk);
  std::vector<std::complex<double>> partial(chunks);
  for_each_chunk(count, chunk, [&](std::uint64_t b, std::uint64_t e, std::size_t c) {
    ComplexSum acc;
    for (std::uint64_t i = b; i < e; ++i) acc.add(term(i));
    partial[c] = acc.value();
  });
  return pairwise_sum(partial);
}

template <class Term>
double deterministic_sum_real(std::uint64_t count, Term&& term,
                              std::uint64_t chunk = kDefaultChunk) {
  if (count == 0) return 0.0;
  std::size_t chunks = static_cast<std::size_t>((count + chunk - 1) / chunk);
  std::vector<double> partial(chunks);
  for_each_chunk(count, chunk, [&](std::uint64_t b, std::uint64_t e, std::size_t c) {
    CompensatedSum acc;
    for (std::uint64_t i = b; i < e; ++i) acc.add(term(i));
    partial[c] = acc.value();
  });
  return pairwise_sum(partial);
}

}  // namespace ffm
