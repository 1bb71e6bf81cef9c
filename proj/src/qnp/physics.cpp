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

#include "qnp/physics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qnp {

void HardwareProfile::validate() const {
  if (attenuation_per_km < 0) throw std::invalid_argument("alpha must be >= 0");
  if (!(swap_success > 0) || swap_success > 1) {
    throw std::invalid_argument("swap success must be in (0,1]");
  }
  if (!(link_fidelity > 0.25) || link_fidelity > 1) {
    throw std::invalid_argument("link fidelity must be in (0.25,1]");
  }
  if (!(signal_speed_km_s > 0)) {
    throw std::invalid_argument("signal speed must be positive");
  }
  if (multiplexing_factor < 1) {
    throw std::invalid_argument("multiplexing factor must be >= 1");
  }
}

void CapacityProfile::validate() const {
  if (repeater_memories < 1) {
    throw std::invalid_argument("repeater memory capacity must be positive");
  }
  for (const auto& [id, d] : per_site) {
    if (d < 1) {
      throw std::invalid_argument("site capacity must be positive: " + id);
    }
  }
  if (end_node_memories < 1) {
    throw std::invalid_argument("end-node memory capacity must be positive");
  }
  if (max_paths_per_pair < 1) {
    throw std::invalid_argument("max paths per pair must be >= 1");
  }
}

double PathDescriptor::total_length_km() const {
  double total = 0;
  for (double l : lengths_km) total += l;
  return total;
}

double PathDescriptor::max_link_km() const {
  double m = 0;
  for (double l : lengths_km) m = std::max(m, l);
  return m;
}

double link_success_prob(double length_km, const HardwareProfile& hw) {
  return std::pow(10.0, -hw.attenuation_per_km * length_km);
}

double e2e_rate_approx(const PathDescriptor& p, int width,
                       const HardwareProfile& hw) {
  double p_min = 1.0;
  for (double l : p.lengths_km) {
    p_min = std::min(p_min, link_success_prob(l, hw));
  }
  return std::pow(hw.swap_success, p.hop_count() - 1) * width * p_min;
}

double e2e_rate_tf_multiplex(const PathDescriptor& p,
                             const HardwareProfile& hw) {
  double prod = 1.0;
  for (double l : p.lengths_km) {
    const double pi = link_success_prob(l, hw);
    prod *= 1.0 - std::pow(1.0 - pi, hw.multiplexing_factor);
  }
  return std::pow(hw.swap_success, p.hop_count() - 1) * prod;
}

double e2e_fidelity(int hop_count, const HardwareProfile& hw) {
  const double swap_term =
      hw.gate_fidelity *
      (4.0 * hw.measurement_fidelity * hw.measurement_fidelity - 1.0) / 3.0;
  const double link_term = (4.0 * hw.link_fidelity - 1.0) / 3.0;
  return 0.25 + 0.75 * std::pow(swap_term, hop_count - 1) *
                    std::pow(link_term, hop_count);
}

double negativity(double fidelity) { return fidelity - 0.5; }

std::optional<double> utility(double rate, double fidelity) {
  const double f = negativity(fidelity);
  if (!(rate > 0) || !(f > 0)) return std::nullopt;
  return std::log2(rate * f);
}

double link_delay_s(double length_km, const HardwareProfile& hw) {
  return length_km / hw.signal_speed_km_s;
}

double e2e_delay_s(const PathDescriptor& p, const HardwareProfile& hw) {
  double sum = 0;
  for (double l : p.lengths_km) sum += link_delay_s(l, hw);
  return 3.0 * sum;
}

CoherenceStatus coherence_feasible(const PathDescriptor& p,
                                   const HardwareProfile& hw) {
  for (double l : p.lengths_km) {
    if (2.0 * link_delay_s(l, hw) > hw.repeater_coherence_s) {
      return CoherenceStatus::kViolatedRepeater;
    }
  }
  if (e2e_delay_s(p, hw) > hw.end_node_coherence_s) {
    return CoherenceStatus::kViolatedEndNode;
  }
  return CoherenceStatus::kFeasible;
}

}  // namespace qnp
