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

#ifndef QNP_EXACT_RATE_HPP
#define QNP_EXACT_RATE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qnp/physics.hpp"

namespace qnp {

// Exact expected throughput of a width-W multiplexed path. Per attempt, link
// k delivers Binomial(W, p_k) ebits; swapping passes along the running
// minimum, so the deliverable count is min_k of independent binomials and
// the rate is swap^(h-1) * E[min_k X_k].

// C(W,w) p^w (1-p)^(W-w), via log-gamma for large W.
double binomial_pmf(int trials, double p, int successes);

// Distribution of the running minimum over the first k links, advanced one
// link at a time; O(h*W) overall using suffix sums.
double exact_e2e_rate(const std::vector<double>& link_probs, int width,
                      const HardwareProfile& hw);

// Independent formulation through the tail-sum identity
// E[min] = sum_w P(min >= w) = sum_w prod_k P(X_k >= w).
double exact_e2e_rate_tailsum(const std::vector<double>& link_probs,
                              int width, const HardwareProfile& hw);

// Known-divergent reference: sums w * P(X_k = w) * prod_{j!=k} P(X_j >= w)
// over the links, which double-counts outcomes where the minimum is attained
// on several links at once (e.g. W=1 with equal links gives h*prod p instead
// of prod p). Kept only as a documented point of comparison.
double product_form_rate_reference(const std::vector<double>& link_probs,
                                   int width, const HardwareProfile& hw);

struct MonteCarloRate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t trials = 0;
};

MonteCarloRate monte_carlo_rate(const std::vector<double>& link_probs,
                                int width, const HardwareProfile& hw,
                                std::int64_t trials, std::uint64_t seed);

// e2e_rate_approx / exact rate; nullopt when the exact rate underflows.
std::optional<double> approximation_ratio(const std::vector<double>& link_probs,
                                          int width,
                                          const HardwareProfile& hw);

// Convenience: equal-length chain expressed through link success probability.
std::vector<double> uniform_chain(int hop_count, double link_prob);

// Per-link success probabilities of a routed path.
std::vector<double> link_probs_of(const PathDescriptor& p,
                                  const HardwareProfile& hw);

inline double exact_e2e_rate(const PathDescriptor& p, int width,
                             const HardwareProfile& hw) {
  return exact_e2e_rate(link_probs_of(p, hw), width, hw);
}
inline double exact_e2e_rate_tailsum(const PathDescriptor& p, int width,
                                     const HardwareProfile& hw) {
  return exact_e2e_rate_tailsum(link_probs_of(p, hw), width, hw);
}

}  // namespace qnp

#endif  // QNP_EXACT_RATE_HPP
