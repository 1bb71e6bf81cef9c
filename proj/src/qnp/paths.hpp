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

#ifndef QNP_PATHS_HPP
#define QNP_PATHS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qnp/physics.hpp"
#include "qnp/topology.hpp"

namespace qnp {

// A path through the metric graph as vertex indices; vertex 0 is the sender
// and vertex 1 the receiver.
struct MetricPath {
  std::vector<int> vertices;
  double length_km = 0.0;
};

// Yen's k-shortest loopless paths over the metric graph, nondecreasing in
// total length; ties broken by lexicographic node-id sequence. Returns fewer
// than k paths when the graph holds fewer.
std::vector<MetricPath> yen_k_shortest(const MetricGraph& g, int k);

// Every simple sender-receiver path, in the same ordering. Intended for
// small graphs; throws beyond the safety cap.
std::vector<MetricPath> enumerate_all_paths(const MetricGraph& g,
                                            std::size_t cap = 4'000'000);

// One scored (path, width) version for the path-based planner.
struct CandidatePath {
  std::string pair_id;
  PathDescriptor descriptor;
  int width = 1;
  double rate = 0.0;
  double fidelity = 0.0;
  double utility_value = 0.0;
  std::vector<std::string> repeater_ids;  // interior nodes of the path
  CoherenceStatus feasibility = CoherenceStatus::kFeasible;
};

// Cross product of the k shortest metric paths with admissible widths,
// scored and filtered (coherence violations and unusable fidelity dropped),
// sorted by utility descending. k < 0 enumerates every simple path.
std::vector<CandidatePath> enumerate_candidates(const Topology& t,
                                                const UserPair& pair, int k,
                                                const HardwareProfile& hw,
                                                const CapacityProfile& cap);

PathDescriptor descriptor_of(const MetricGraph& g, const MetricPath& path);

// Debug helper: one CSV row per candidate.
std::string candidates_csv(const std::vector<CandidatePath>& candidates);

}  // namespace qnp

#endif  // QNP_PATHS_HPP
