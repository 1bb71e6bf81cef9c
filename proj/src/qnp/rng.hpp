// Copyright 2026 The qnetplan Authors
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

#ifndef QNP_RNG_HPP
#define QNP_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace qnp {

// Deterministic random source. mt19937_64 output is pinned by the standard,
// and all distributions are implemented here rather than with std::
// distribution classes, whose sequences vary across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n), rejection-sampled to avoid modulo bias.
  std::uint64_t uniform_below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  int uniform_int(int lo, int hi) {  // inclusive range
    return lo + static_cast<int>(uniform_below(
                    static_cast<std::uint64_t>(hi - lo + 1)));
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Knuth product method; fine for the small means used here.
  int poisson(double mean) {
    const double limit = std::exp(-mean);
    int k = 0;
    double prod = uniform01();
    while (prod > limit) {
      ++k;
      prod *= uniform01();
    }
    return k;
  }

  // Partial Fisher-Yates: k distinct indices out of [0, n).
  std::vector<int> sample_without_replacement(int n, int k) {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    for (int i = 0; i < k; ++i) {
      const int j = i + static_cast<int>(uniform_below(n - i));
      std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
  }

  // k distinct indices, drawn sequentially with probability proportional to
  // the remaining weights.
  std::vector<int> weighted_sample_without_replacement(
      const std::vector<double>& weights, int k) {
    std::vector<int> chosen;
    std::vector<int> pool(weights.size());
    std::vector<double> w(weights);
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<int>(i);
    for (int round = 0; round < k && !pool.empty(); ++round) {
      double total = 0;
      for (std::size_t i = 0; i < pool.size(); ++i) total += w[pool[i]];
      double r = uniform01() * total;
      std::size_t pick = pool.size() - 1;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        r -= w[pool[i]];
        if (r <= 0) {
          pick = i;
          break;
        }
      }
      chosen.push_back(pool[pick]);
      pool.erase(pool.begin() + pick);
    }
    return chosen;
  }

 private:
  std::mt19937_64 engine_;
};

// Stream splitting for per-slot reproducibility: hash (seed, index) into a
// fresh seed so serial and parallel evaluation agree.
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace qnp

#endif  // QNP_RNG_HPP
