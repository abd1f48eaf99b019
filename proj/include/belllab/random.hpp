// Copyright 2026 The BellLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Reproducible random streams and partitioned sampling.
//
// Sample loops are split into fixed-size partitions. Partition k draws from
// a stream seeded by (seed, tags..., k), so results do not depend on how many
// worker threads process the partitions.

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <thread>
#include <vector>

namespace belllab {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kPartitionSize = 1u << 16;

inline Rng make_stream(std::initializer_list<std::uint64_t> path) {
  std::vector<std::uint32_t> words;
  words.reserve(2 * path.size());
  for (std::uint64_t v : path) {
    words.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
    words.push_back(static_cast<std::uint32_t>(v >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  return Rng(seq);
}

// Uniform on [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline double standard_normal(Rng& rng) {
  // Box-Muller; exactly two draws per call.
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  const double u1 = 1.0 - uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

inline std::uint64_t partition_count(std::uint64_t n) { return (n + kPartitionSize - 1) / kPartitionSize; }

// Runs fn(partition, begin, end) for every partition of [0, n) and returns the
// per-partition results in partition order.
template <class Result, class Fn>
std::vector<Result> map_partitions(std::uint64_t n, unsigned threads, Fn fn) {
  const std::uint64_t parts = partition_count(n);
  std::vector<Result> out(parts);
  auto run = [&](std::uint64_t k) {
    const std::uint64_t begin = k * kPartitionSize;
    out[k] = fn(k, begin, std::min(n, begin + kPartitionSize));
  };
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), parts));
  if (workers <= 1) {
    for (std::uint64_t k = 0; k < parts; ++k) run(k);
    return out;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::uint64_t k = next++; k < parts; k = next++) run(k);
    });
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace belllab
