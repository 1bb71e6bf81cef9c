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

#ifndef QNP_TOPOLOGY_HPP
#define QNP_TOPOLOGY_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qnp {

// Raised on malformed or inconsistent topology documents.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what)
      : std::runtime_error(what) {}
};

enum class NodeKind { kEndNode, kRepeaterCandidate };

struct LatLon {
  double lat_deg = 0.0;
  double lon_deg = 0.0;
};

struct Node {
  std::string id;
  NodeKind kind = NodeKind::kEndNode;
  std::optional<LatLon> position;
  std::string label;
};

struct Link {
  std::string a;  // endpoints stored in the orientation given by the source
  std::string b;
  double length_km = 0.0;
};

struct UserPair {
  std::string id;
  std::string sender;
  std::string receiver;
  double weight = 1.0;  // in (0, 1]
};

// Great-circle distance on a sphere of radius 6371 km.
double geodesic_length_km(const LatLon& a, const LatLon& b);

// Immutable after construction; safe for concurrent reads.
class Topology {
 public:
  Topology(std::vector<Node> nodes, std::vector<Link> links,
           std::vector<UserPair> pairs);

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Link>& links() const { return links_; }
  const std::vector<UserPair>& pairs() const { return pairs_; }

  bool has_node(const std::string& id) const;
  const Node& node(const std::string& id) const;
  int node_index(const std::string& id) const;

  std::vector<std::string> candidate_ids() const;

  // Minimal total fiber length between u and v; nullopt when unreachable.
  std::optional<double> shortest_path_length(const std::string& u,
                                             const std::string& v) const;

  // Single-source Dijkstra over all nodes, by node index.
  std::vector<double> shortest_path_lengths_from(int source_index) const;

 private:
  std::vector<Node> nodes_;
  std::vector<Link> links_;
  std::vector<UserPair> pairs_;
  std::map<std::string, int> index_;
  std::vector<std::vector<std::pair<int, double>>> adjacency_;
};

// Complete weighted graph over {sender, receiver} and all repeater
// candidates; edge weights are shortest fiber distances, unreachable edges
// omitted. Vertex 0 is the sender and vertex 1 the receiver.
struct MetricGraph {
  std::vector<std::string> vertex_ids;
  std::vector<std::vector<std::optional<double>>> weight;
  int sender = 0;
  int receiver = 1;
};

MetricGraph metric_graph(const Topology& t, const UserPair& pair);

// Replaces every link longer than 2*l0 with a chain of equally spaced
// repeater-candidate nodes (floor(len/l0) - 1 of them).
Topology augment(const Topology& t, double l0_km);

// Synthetic benchmark: two fans of end nodes joined by a backbone of
// equally spaced candidate sites. Terminal splice points carry no quantum
// hardware, so the stub length is folded into the first and last backbone
// segments; all node-to-node fiber distances match the drawn geometry.
Topology make_dumbbell(int n_pairs, int n_sites, double backbone_km,
                       double stub_km);

// JSON document schema:
//   {"nodes":[{"id","kind":"end"|"candidate","lat"?,"lon"?,"label"?}],
//    "links":[{"a","b","length_km"?}],
//    "pairs":[{"id","s","t","weight"?}]}
// Explicit lengths override coordinates when both are present.
Topology load_topology(const std::string& json_text);
std::string dump_topology(const Topology& t);

}  // namespace qnp

#endif  // QNP_TOPOLOGY_HPP
