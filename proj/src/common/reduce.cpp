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

#include "common/reduce.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "common/error.hpp"

namespace ffm {

namespace {

std::atomic<unsigned> g_workers{1};

template <class T>
T pairwise(std::span<const T> v) {
  if (v.empty()) return T{};
  if (v.size() <= 8) {
    T s{};
    for (const T& x : v) s += x;
    return s;
  }
  std::size_t half = v.size() / 2;
  return pairwise(v.subspan(0, half)) + pairwise(v.subspan(half));
}

}  // namespace

void set_worker_count(unsigned n) {
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  g_workers.store(n);
}

unsigned worker_count() { return g_workers.load(); }

std::complex<double> pairwise_sum(std::span<const std::complex<double>> values) {
  return pairwise(values);
}

double pairwise_sum(std::span<const double> values) { return pairwise(values); }

void for_each_chunk(std::uint64_t count, std::uint64_t chunk,
                    const std::function<void(std::uint64_t, std::uint64_t, std::size_t)>& body) {
  require(chunk > 0, "chunk size must be positive");
  if (count == 0) return;
  std::size_t chunks = static_cast<std::size_t>((count + chunk - 1) / chunk);
  unsigned workers = std::min<std::size_t>(worker_count(), chunks);
  auto run = [&](std::size_t c) {
    std::uint64_t b = static_cast<std::uint64_t>(c) * chunk;
    body(b, std::min(count, b + chunk), c);
  };
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) run(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
        try {
          run(c);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next.store(chunks);
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

double power_estimate(std::uint64_t q, int n) {
  double v = 1.0;
  for (int i = 0; i < n; ++i) v *= static_cast<double>(q);
  return v;
}

std::uint64_t checked_pow(std::uint64_t q, int n) {
  require(n >= 0, "negative exponent");
  std::uint64_t v = 1;
  for (int i = 0; i < n; ++i) {
    if (v > (std::uint64_t{1} << 62) / q) {
      throw BudgetExceeded("q^n does not fit in 63 bits", power_estimate(q, n),
                           static_cast<double>(std::uint64_t{1} << 62));
    }
    v *= q;
  }
  return v;
}

}  // namespace ffm
