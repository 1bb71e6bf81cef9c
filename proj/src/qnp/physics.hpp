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

#ifndef QNP_PHYSICS_HPP
#define QNP_PHYSICS_HPP

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qnp {

// Physical scalars of the entanglement-distribution model. Coherence limits
// default to "unbounded".
struct HardwareProfile {
  double attenuation_per_km = 0.02;   // base-10 fiber loss exponent per km
  double swap_success = 0.5;          // Bell-state measurement success, (0,1]
  double link_fidelity = 0.95;        // elementary ebit fidelity, (0.25,1]
  double gate_fidelity = 1.0;         // two-qubit gate fidelity
  double measurement_fidelity = 1.0;
  double signal_speed_km_s = 2.0e5;   // light in fiber, refractive index 1.5
  double repeater_coherence_s = std::numeric_limits<double>::infinity();
  double end_node_coherence_s = std::numeric_limits<double>::infinity();
  int multiplexing_factor = 1;        // temporal/frequency modes per memory

  void validate() const;
};

// Resource budgets for planning.
struct CapacityProfile {
  int repeater_memories = 100;            // uniform cap D
  std::map<std::string, int> per_site;    // optional per-site override of D
  int end_node_memories = 100;            // W_E
  int repeater_budget = -1;               // N_max; -1 means |R|
  int max_paths_per_pair = 1;             // K

  int site_capacity(const std::string& site_id) const {
    auto it = per_site.find(site_id);
    return it == per_site.end() ? repeater_memories : it->second;
  }
  void validate() const;
};

// A concrete routed path: node sequence plus the metric-link lengths.
struct PathDescriptor {
  std::vector<std::string> nodes;   // sender, interior sites..., receiver
  std::vector<double> lengths_km;   // one entry per metric link

  int hop_count() const { return static_cast<int>(lengths_km.size()); }
  double total_length_km() const;
  double max_link_km() const;
};

enum class CoherenceStatus { kFeasible, kViolatedRepeater, kViolatedEndNode };

// Probability that a photon survives l km of fiber: 10^(-alpha*l).
double link_success_prob(double length_km, const HardwareProfile& hw);

// Bottleneck throughput approximation for a width-w multiplexed path:
// swap^(h-1) * w * min_i p_i.
double e2e_rate_approx(const PathDescriptor& p, int width,
                       const HardwareProfile& hw);

// Temporal/frequency multiplexed variant: swap^(h-1) * prod(1-(1-p_i)^M).
double e2e_rate_tf_multiplex(const PathDescriptor& p,
                             const HardwareProfile& hw);

// Werner-chain fidelity after h-1 swaps.
double e2e_fidelity(int hop_count, const HardwareProfile& hw);

// Entanglement negativity proxy; nonpositive values mean unusable ebits.
double negativity(double fidelity);

// log2(rate * (F - 1/2)); nullopt when the path is inadmissible.
std::optional<double> utility(double rate, double fidelity);

double link_delay_s(double length_km, const HardwareProfile& hw);

// One photon transit plus acknowledgment per link and the forward relay of
// measurement outcomes: 3 * sum_i tau(l_i).
double e2e_delay_s(const PathDescriptor& p, const HardwareProfile& hw);

CoherenceStatus coherence_feasible(const PathDescriptor& p,
                                   const HardwareProfile& hw);

}  // namespace qnp

#endif  // QNP_PHYSICS_HPP
