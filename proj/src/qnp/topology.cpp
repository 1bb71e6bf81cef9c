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

#include "qnp/topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qnp {

namespace {

constexpr double kEarthRadiusKm = 6371.0;
constexpr double kPi = 3.14159265358979323846;

double deg2rad(double deg) { return deg * kPi / 180.0; }

std::pair<std::string, std::string> canonical_endpoints(const Link& link) {
  return link.a < link.b ? std::make_pair(link.a, link.b)
                         : std::make_pair(link.b, link.a);
}

}  // namespace

double geodesic_length_km(const LatLon& a, const LatLon& b) {
  const double lat1 = deg2rad(a.lat_deg);
  const double lat2 = deg2rad(b.lat_deg);
  const double dlat = lat2 - lat1;
  const double dlon = deg2rad(b.lon_deg - a.lon_deg);
  const double s1 = std::sin(dlat / 2);
  const double s2 = std::sin(dlon / 2);
  const double h = s1 * s1 + std::cos(lat1) * std::cos(lat2) * s2 * s2;
  return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(h)));
}

Topology::Topology(std::vector<Node> nodes, std::vector<Link> links,
                   std::vector<UserPair> pairs)
    : nodes_(std::move(nodes)),
      links_(std::move(links)),
      pairs_(std::move(pairs)) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!index_.emplace(nodes_[i].id, static_cast<int>(i)).second) {
      throw ValidationError("duplicate node id: " + nodes_[i].id);
    }
  }
  adjacency_.resize(nodes_.size());
  std::set<std::pair<std::string, std::string>> seen;
  for (const Link& link : links_) {
    if (link.a == link.b) {
      throw ValidationError("self-loop link at node: " + link.a);
    }
    if (!(link.length_km > 0)) {
      throw ValidationError("nonpositive length on link " + link.a + "-" +
                            link.b);
    }
    auto it_a = index_.find(link.a);
    auto it_b = index_.find(link.b);
    if (it_a == index_.end() || it_b == index_.end()) {
      throw ValidationError("unknown endpoint on link " + link.a + "-" +
                            link.b);
    }
    if (!seen.insert(canonical_endpoints(link)).second) {
      throw ValidationError("duplicate link " + link.a + "-" + link.b);
    }
    adjacency_[it_a->second].emplace_back(it_b->second, link.length_km);
    adjacency_[it_b->second].emplace_back(it_a->second, link.length_km);
  }
  std::set<std::string> pair_endpoints;
  for (const UserPair& pair : pairs_) {
    if (pair.sender == pair.receiver) {
      throw ValidationError("pair " + pair.id + " connects a node to itself");
    }
    for (const std::string* end : {&pair.sender, &pair.receiver}) {
      auto it = index_.find(*end);
      if (it == index_.end()) {
        throw ValidationError("unknown endpoint " + *end + " in pair " +
                              pair.id);
      }
      if (nodes_[it->second].kind != NodeKind::kEndNode) {
        throw ValidationError("pair " + pair.id + " endpoint " + *end +
                              " is not an end node");
      }
      if (!pair_endpoints.insert(*end).second) {
        throw ValidationError("end node " + *end +
                              " is used by more than one pair");
      }
      if (adjacency_[it->second].empty()) {
        throw ValidationError("end node " + *end + " has no incident link");
      }
    }
    if (!(pair.weight > 0.0) || pair.weight > 1.0) {
      throw ValidationError("pair " + pair.id + " weight out of (0,1]");
    }
  }
}

bool Topology::has_node(const std::string& id) const {
  return index_.count(id) > 0;
}

const Node& Topology::node(const std::string& id) const {
  return nodes_[node_index(id)];
}

int Topology::node_index(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw ValidationError("unknown node id: " + id);
  return it->second;
}

std::vector<std::string> Topology::candidate_ids() const {
  std::vector<std::string> out;
  for (const Node& n : nodes_) {
    if (n.kind == NodeKind::kRepeaterCandidate) out.push_back(n.id);
  }
  return out;
}

std::vector<double> Topology::shortest_path_lengths_from(
    int source_index) const {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(nodes_.size(), inf);
  dist[source_index] = 0.0;
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
  queue.emplace(0.0, source_index);
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (d > dist[v]) continue;
    for (auto [w, len] : adjacency_[v]) {
      if (dist[v] + len < dist[w]) {
        dist[w] = dist[v] + len;
        queue.emplace(dist[w], w);
      }
    }
  }
  return dist;
}

std::optional<double> Topology::shortest_path_length(
    const std::string& u, const std::string& v) const {
  const auto dist = shortest_path_lengths_from(node_index(u));
  const double d = dist[node_index(v)];
  if (std::isinf(d)) return std::nullopt;
  return d;
}

MetricGraph metric_graph(const Topology& t, const UserPair& pair) {
  MetricGraph g;
  g.vertex_ids.push_back(pair.sender);
  g.vertex_ids.push_back(pair.receiver);
  for (const std::string& id : t.candidate_ids()) g.vertex_ids.push_back(id);
  const int n = static_cast<int>(g.vertex_ids.size());
  g.weight.assign(n, std::vector<std::optional<double>>(n));
  for (int i = 0; i < n; ++i) {
    const auto dist = t.shortest_path_lengths_from(
        t.node_index(g.vertex_ids[i]));
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double d = dist[t.node_index(g.vertex_ids[j])];
      if (!std::isinf(d)) g.weight[i][j] = d;
    }
  }
  return g;
}

Topology augment(const Topology& t, double l0_km) {
  if (!(l0_km > 0)) throw ValidationError("augment requires l0 > 0");
  std::vector<Node> nodes = t.nodes();
  std::vector<Link> links;
  for (const Link& link : t.links()) {
    if (link.length_km <= 2.0 * l0_km) {
      links.push_back(link);
      continue;
    }
    const int n_new = static_cast<int>(std::floor(link.length_km / l0_km)) - 1;
    const double segment = link.length_km / (n_new + 1);
    // Deterministic ids from the lexicographically oriented parent link.
    auto [lo, hi] = link.a < link.b ? std::make_pair(link.a, link.b)
                                    : std::make_pair(link.b, link.a);
    const Node& from = t.node(lo);
    const Node& to = t.node(hi);
    std::string prev = lo;
    for (int i = 1; i <= n_new; ++i) {
      Node aux;
      aux.id = lo + "-" + hi + "-aux" + std::to_string(i);
      aux.kind = NodeKind::kRepeaterCandidate;
      if (from.position && to.position) {
        const double f = static_cast<double>(i) / (n_new + 1);
        aux.position = LatLon{
            from.position->lat_deg +
                f * (to.position->lat_deg - from.position->lat_deg),
            from.position->lon_deg +
                f * (to.position->lon_deg - from.position->lon_deg)};
      }
      nodes.push_back(aux);
      links.push_back(Link{prev, aux.id, segment});
      prev = aux.id;
    }
    links.push_back(Link{prev, hi, segment});
  }
  return Topology(std::move(nodes), std::move(links), t.pairs());
}

Topology make_dumbbell(int n_pairs, int n_sites, double backbone_km,
                       double stub_km) {
  if (n_pairs < 1 || n_sites < 1 || !(backbone_km > 0) || !(stub_km > 0)) {
    throw ValidationError("dumbbell arguments must be positive");
  }
  const double spacing = backbone_km / (n_sites + 1);
  std::vector<Node> nodes;
  std::vector<Link> links;
  std::vector<UserPair> pairs;
  for (int k = 1; k <= n_sites; ++k) {
    nodes.push_back(Node{"r" + std::to_string(k),
                         NodeKind::kRepeaterCandidate, std::nullopt, ""});
    if (k > 1) {
      links.push_back(Link{"r" + std::to_string(k - 1),
                           "r" + std::to_string(k), spacing});
    }
  }
  for (int i = 1; i <= n_pairs; ++i) {
    const std::string left = "n" + std::to_string(2 * i - 1);
    const std::string right = "n" + std::to_string(2 * i);
    nodes.push_back(Node{left, NodeKind::kEndNode, std::nullopt, ""});
    nodes.push_back(Node{right, NodeKind::kEndNode, std::nullopt, ""});
    links.push_back(Link{left, "r1", stub_km + spacing});
    links.push_back(Link{right, "r" + std::to_string(n_sites),
                         stub_km + spacing});
    pairs.push_back(UserPair{"q" + std::to_string(i), left, right, 1.0});
  }
  return Topology(std::move(nodes), std::move(links), std::move(pairs));
}

Topology load_topology(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed topology document: ") +
                          e.what());
  }
  if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("links")) {
    throw ValidationError("topology document needs 'nodes' and 'links'");
  }
  std::vector<Node> nodes;
  for (const auto& jn : doc.at("nodes")) {
    Node n;
    n.id = jn.at("id").get<std::string>();
    const std::string kind = jn.value("kind", "candidate");
    if (kind == "end") {
      n.kind = NodeKind::kEndNode;
    } else if (kind == "candidate") {
      n.kind = NodeKind::kRepeaterCandidate;
    } else {
      throw ValidationError("node " + n.id + " has unknown kind '" + kind +
                            "'");
    }
    if (jn.contains("lat") || jn.contains("lon")) {
      if (!jn.contains("lat") || !jn.contains("lon")) {
        throw ValidationError("node " + n.id + " needs both lat and lon");
      }
      n.position = LatLon{jn.at("lat").get<double>(),
                          jn.at("lon").get<double>()};
    }
    n.label = jn.value("label", "");
    nodes.push_back(std::move(n));
  }
  std::map<std::string, const Node*> by_id;
  for (const Node& n : nodes) by_id[n.id] = &n;
  std::vector<Link> links;
  for (const auto& jl : doc.at("links")) {
    Link l;
    l.a = jl.at("a").get<std::string>();
    l.b = jl.at("b").get<std::string>();
    if (jl.contains("length_km")) {
      l.length_km = jl.at("length_km").get<double>();
    } else {
      auto it_a = by_id.find(l.a);
      auto it_b = by_id.find(l.b);
      if (it_a == by_id.end() || it_b == by_id.end()) {
        throw ValidationError("unknown endpoint on link " + l.a + "-" + l.b);
      }
      if (!it_a->second->position || !it_b->second->position) {
        throw ValidationError("link " + l.a + "-" + l.b +
                              " has neither length_km nor node coordinates");
      }
      l.length_km = geodesic_length_km(*it_a->second->position,
                                       *it_b->second->position);
    }
    links.push_back(std::move(l));
  }
  std::vector<UserPair> pairs;
  if (doc.contains("pairs")) {
    for (const auto& jp : doc.at("pairs")) {
      UserPair p;
      p.id = jp.at("id").get<std::string>();
      p.sender = jp.at("s").get<std::string>();
      p.receiver = jp.at("t").get<std::string>();
      p.weight = jp.value("weight", 1.0);
      pairs.push_back(std::move(p));
    }
  }
  return Topology(std::move(nodes), std::move(links), std::move(pairs));
}

std::string dump_topology(const Topology& t) {
  nlohmann::json doc;
  doc["nodes"] = nlohmann::json::array();
  for (const Node& n : t.nodes()) {
    nlohmann::json jn;
    jn["id"] = n.id;
    jn["kind"] = n.kind == NodeKind::kEndNode ? "end" : "candidate";
    if (n.position) {
      jn["lat"] = n.position->lat_deg;
      jn["lon"] = n.position->lon_deg;
    }
    if (!n.label.empty()) jn["label"] = n.label;
    doc["nodes"].push_back(jn);
  }
  doc["links"] = nlohmann::json::array();
  for (const Link& l : t.links()) {
    doc["links"].push_back({{"a", l.a}, {"b", l.b}, {"length_km", l.length_km}});
  }
  doc["pairs"] = nlohmann::json::array();
  for (const UserPair& p : t.pairs()) {
    doc["pairs"].push_back(
        {{"id", p.id}, {"s", p.sender}, {"t", p.receiver}, {"weight", p.weight}});
  }
  return doc.dump(2);
}

}  // namespace qnp
