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

#include "qnp/exact_rate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qnp/rng.hpp"
#include "qnp/util.hpp"

namespace qnp {

namespace {

std::vector<double> pmf_table(int trials, double p) {
  std::vector<double> pmf(trials + 1);
  for (int w = 0; w <= trials; ++w) pmf[w] = binomial_pmf(trials, p, w);
  return pmf;
}

// P(X >= w) for w = 0..W+1 from a pmf, accumulated from the top.
std::vector<double> survival_table(const std::vector<double>& pmf) {
  std::vector<double> surv(pmf.size() + 1, 0.0);
  for (int w = static_cast<int>(pmf.size()) - 1; w >= 0; --w) {
    surv[w] = surv[w + 1] + pmf[w];
  }
  return surv;
}

double swap_factor(std::size_t hop_count, const HardwareProfile& hw) {
  return std::pow(hw.swap_success, static_cast<double>(hop_count) - 1.0);
}

}  // namespace

double binomial_pmf(int trials, double p, int successes) {
  if (successes < 0 || successes > trials) return 0.0;
  if (p <= 0.0) return successes == 0 ? 1.0 : 0.0;
  if (p >= 1.0) return successes == trials ? 1.0 : 0.0;
  const double log_choose = std::lgamma(trials + 1.0) -
                            std::lgamma(successes + 1.0) -
                            std::lgamma(trials - successes + 1.0);
  return std::exp(log_choose + successes * std::log(p) +
                  (trials - successes) * std::log1p(-p));
}

double exact_e2e_rate(const std::vector<double>& link_probs, int width,
                      const HardwareProfile& hw) {
  if (width < 1) throw std::invalid_argument("width must be >= 1");
  if (link_probs.empty()) throw std::invalid_argument("path has no links");
  std::vector<double> min_dist = pmf_table(width, link_probs[0]);
  for (std::size_t k = 1; k < link_probs.size(); ++k) {
    const std::vector<double> pmf = pmf_table(width, link_probs[k]);
    const std::vector<double> surv = survival_table(pmf);
    // Suffix sums of the running-minimum distribution.
    std::vector<double> tail(width + 2, 0.0);
    for (int i = width; i >= 0; --i) tail[i] = tail[i + 1] + min_dist[i];
    std::vector<double> next(width + 1);
    for (int i = 0; i <= width; ++i) {
      next[i] = min_dist[i] * surv[i] + pmf[i] * tail[i + 1];
    }
    min_dist.swap(next);
  }
  KahanSum mean;
  for (int w = 1; w <= width; ++w) mean.add(w * min_dist[w]);
  return swap_factor(link_probs.size(), hw) * mean.value();
}

double exact_e2e_rate_tailsum(const std::vector<double>& link_probs,
                              int width, const HardwareProfile& hw) {
  if (width < 1) throw std::invalid_argument("width must be >= 1");
  if (link_probs.empty()) throw std::invalid_argument("path has no links");
  std::vector<std::vector<double>> survivals;
  survivals.reserve(link_probs.size());
  for (double p : link_probs) survivals.push_back(survival_table(pmf_table(width, p)));
  KahanSum mean;
  for (int w = 1; w <= width; ++w) {
    double prod = 1.0;
    for (const auto& surv : survivals) prod *= surv[w];
    mean.add(prod);
  }
  return swap_factor(link_probs.size(), hw) * mean.value();
}

double product_form_rate_reference(const std::vector<double>& link_probs,
                                   int width, const HardwareProfile& hw) {
  const std::size_t h = link_probs.size();
  std::vector<std::vector<double>> pmfs, survivals;
  for (double p : link_probs) {
    pmfs.push_back(pmf_table(width, p));
    survivals.push_back(survival_table(pmfs.back()));
  }
  KahanSum mean;
  for (int w = 1; w <= width; ++w) {
    for (std::size_t k = 0; k < h; ++k) {
      double term = pmfs[k][w];
      for (std::size_t j = 0; j < h; ++j) {
        if (j != k) term *= survivals[j][w];
      }
      mean.add(w * term);
    }
  }
  return swap_factor(h, hw) * mean.value();
}

MonteCarloRate monte_carlo_rate(const std::vector<double>& link_probs,
                                int width, const HardwareProfile& hw,
                                std::int64_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  // Per-link CDF tables; each draw is a binary search over W+1 entries.
  std::vector<std::vector<double>> cdfs;
  for (double p : link_probs) {
    std::vector<double> cdf = pmf_table(width, p);
    for (std::size_t i = 1; i < cdf.size(); ++i) cdf[i] += cdf[i - 1];
    cdf.back() = 1.0;
    cdfs.push_back(std::move(cdf));
  }
  Rng rng(seed);
  const double factor = swap_factor(link_probs.size(), hw);
  KahanSum sum, sum_sq;
  for (std::int64_t t = 0; t < trials; ++t) {
    int minimum = width;
    for (const auto& cdf : cdfs) {
      const double u = rng.uniform01();
      const int draw = static_cast<int>(
          std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
      minimum = std::min(minimum, draw);
      if (minimum == 0) break;
    }
    const double value = factor * minimum;
    sum.add(value);
    sum_sq.add(value * value);
  }
  MonteCarloRate out;
  out.trials = trials;
  out.mean = sum.value() / trials;
  const double variance =
      std::max(0.0, sum_sq.value() / trials - out.mean * out.mean);
  out.std_error = std::sqrt(variance / trials);
  return out;
}

std::optional<double> approximation_ratio(const std::vector<double>& link_probs,
                                          int width,
                                          const HardwareProfile& hw) {
  const double exact = exact_e2e_rate(link_probs, width, hw);
  if (!(exact > 0.0)) return std::nullopt;
  double p_min = 1.0;
  for (double p : link_probs) p_min = std::min(p_min, p);
  const double approx = swap_factor(link_probs.size(), hw) * width * p_min;
  return approx / exact;
}

std::vector<double> uniform_chain(int hop_count, double link_prob) {
  return std::vector<double>(hop_count, link_prob);
}

std::vector<double> link_probs_of(const PathDescriptor& p,
                                  const HardwareProfile& hw) {
  std::vector<double> probs;
  probs.reserve(p.lengths_km.size());
  for (double l : p.lengths_km) probs.push_back(link_success_prob(l, hw));
  return probs;
}

}  // namespace qnp
