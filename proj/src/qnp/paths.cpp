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

#include "qnp/paths.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qnp/util.hpp"

namespace qnp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool lex_less(const MetricGraph& g, const std::vector<int>& a,
              const std::vector<int>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return g.vertex_ids[a[i]] < g.vertex_ids[b[i]];
  }
  return a.size() < b.size();
}

struct PathOrder {
  const MetricGraph* g;
  bool operator()(const MetricPath& a, const MetricPath& b) const {
    if (a.length_km != b.length_km) return a.length_km < b.length_km;
    return lex_less(*g, a.vertices, b.vertices);
  }
};

// Dense Dijkstra distances toward `target` over the masked graph.
std::vector<double> distances_to(const MetricGraph& g, int target,
                                 const std::vector<bool>& banned_vertex) {
  const int n = static_cast<int>(g.vertex_ids.size());
  std::vector<double> dist(n, kInf);
  std::vector<bool> done(n, false);
  dist[target] = 0.0;
  for (int round = 0; round < n; ++round) {
    int v = -1;
    double best = kInf;
    for (int i = 0; i < n; ++i) {
      if (!done[i] && dist[i] < best) {
        best = dist[i];
        v = i;
      }
    }
    if (v < 0) break;
    done[v] = true;
    for (int u = 0; u < n; ++u) {
      if (done[u] || banned_vertex[u] || !g.weight[u][v]) continue;
      const double d = dist[v] + *g.weight[u][v];
      if (d < dist[u]) dist[u] = d;
    }
  }
  return dist;
}

struct MaskedShortest {
  std::vector<int> vertices;
  double length = 0.0;
  bool found = false;
};

// Shortest simple path source->receiver under vertex bans and first-edge
// bans, lexicographically smallest among equal-length shortest paths. With
// positive weights a shortest walk never repeats a vertex, so banning the
// source as transit and walking the distance field yields a simple path.
MaskedShortest lex_shortest(const MetricGraph& g, int source, int target,
                            const std::vector<bool>& banned_vertex,
                            const std::set<std::pair<int, int>>& banned_edge) {
  const int n = static_cast<int>(g.vertex_ids.size());
  MaskedShortest out;
  std::vector<bool> banned_transit = banned_vertex;
  banned_transit[source] = true;
  const std::vector<double> dist = distances_to(g, target, banned_transit);

  std::vector<int> by_id(n);
  for (int i = 0; i < n; ++i) by_id[i] = i;
  std::sort(by_id.begin(), by_id.end(), [&](int a, int b) {
    return g.vertex_ids[a] < g.vertex_ids[b];
  });

  double best = kInf;
  int first_hop = -1;
  for (int v : by_id) {
    if (v == source || banned_vertex[v] || !g.weight[source][v]) continue;
    if (banned_edge.count({source, v})) continue;
    const double d = *g.weight[source][v] + dist[v];
    if (d < best - 1e-12) {
      best = d;
      first_hop = v;
    }
  }
  if (first_hop < 0 || !std::isfinite(best)) return out;
  out.found = true;
  out.length = best;
  out.vertices.push_back(source);
  out.vertices.push_back(first_hop);
  int at = first_hop;
  while (at != target) {
    const double remaining = dist[at];
    const double eps = 1e-9 * std::max(1.0, remaining);
    int next = -1;
    double fallback_best = kInf;
    int fallback = -1;
    for (int v : by_id) {
      if (v == at || banned_transit[v] || !g.weight[at][v]) continue;
      if (v != target && dist[v] == kInf) continue;
      const double through = *g.weight[at][v] + dist[v];
      if (std::fabs(through - remaining) <= eps) {
        next = v;
        break;
      }
      if (through < fallback_best) {
        fallback_best = through;
        fallback = v;
      }
    }
    if (next < 0) next = fallback;
    if (next < 0) {
      out.found = false;
      return out;
    }
    out.vertices.push_back(next);
    at = next;
  }
  return out;
}

}  // namespace

std::vector<MetricPath> yen_k_shortest(const MetricGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const int n = static_cast<int>(g.vertex_ids.size());
  std::vector<MetricPath> accepted;
  std::vector<bool> no_ban(n, false);
  MaskedShortest first = lex_shortest(g, g.sender, g.receiver, no_ban, {});
  if (!first.found) return accepted;

  PathOrder order{&g};
  std::set<MetricPath, PathOrder> pool(order);
  std::set<std::vector<int>> seen;
  // Next hop taken by each accepted path after a given prefix, so spur
  // computations do not rescan the whole accepted list.
  std::map<std::vector<int>, std::vector<int>> next_by_prefix;

  auto accept = [&](MetricPath path) {
    std::vector<int> prefix;
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
      prefix.push_back(path.vertices[i]);
      next_by_prefix[prefix].push_back(path.vertices[i + 1]);
    }
    seen.insert(path.vertices);
    accepted.push_back(std::move(path));
  };
  accept(MetricPath{first.vertices, first.length});

  while (static_cast<int>(accepted.size()) < k) {
    const MetricPath prev = accepted.back();
    double root_len = 0.0;
    std::vector<int> root;
    for (std::size_t spur = 0; spur + 1 < prev.vertices.size(); ++spur) {
      const int spur_node = prev.vertices[spur];
      root.push_back(spur_node);
      std::set<std::pair<int, int>> banned_edges;
      auto it = next_by_prefix.find(root);
      if (it != next_by_prefix.end()) {
        for (int nxt : it->second) banned_edges.insert({spur_node, nxt});
      }
      std::vector<bool> banned_vertex(n, false);
      for (std::size_t i = 0; i < spur; ++i) {
        banned_vertex[prev.vertices[i]] = true;
      }
      MaskedShortest spur_path =
          lex_shortest(g, spur_node, g.receiver, banned_vertex, banned_edges);
      if (spur_path.found) {
        MetricPath candidate;
        candidate.vertices.assign(prev.vertices.begin(),
                                  prev.vertices.begin() + spur);
        candidate.vertices.insert(candidate.vertices.end(),
                                  spur_path.vertices.begin(),
                                  spur_path.vertices.end());
        candidate.length_km = root_len + spur_path.length;
        if (!seen.count(candidate.vertices)) {
          pool.insert(std::move(candidate));
        }
      }
      root_len += *g.weight[prev.vertices[spur]][prev.vertices[spur + 1]];
    }
    if (pool.empty()) break;
    MetricPath next = *pool.begin();
    pool.erase(pool.begin());
    accept(std::move(next));
  }
  return accepted;
}

std::vector<MetricPath> enumerate_all_paths(const MetricGraph& g,
                                            std::size_t cap) {
  const int n = static_cast<int>(g.vertex_ids.size());
  std::vector<MetricPath> out;
  std::vector<int> current{g.sender};
  std::vector<bool> visited(n, false);
  visited[g.sender] = true;
  std::function<void(int, double)> dfs = [&](int at, double len) {
    if (at == g.receiver) {
      out.push_back(MetricPath{current, len});
      if (out.size() > cap) {
        throw std::runtime_error("path enumeration exceeded cap");
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (visited[v] || !g.weight[at][v]) continue;
      visited[v] = true;
      current.push_back(v);
      dfs(v, len + *g.weight[at][v]);
      current.pop_back();
      visited[v] = false;
    }
  };
  dfs(g.sender, 0.0);
  PathOrder order{&g};
  std::sort(out.begin(), out.end(), order);
  return out;
}

PathDescriptor descriptor_of(const MetricGraph& g, const MetricPath& path) {
  PathDescriptor d;
  for (int v : path.vertices) d.nodes.push_back(g.vertex_ids[v]);
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    d.lengths_km.push_back(*g.weight[path.vertices[i]][path.vertices[i + 1]]);
  }
  return d;
}

std::vector<CandidatePath> enumerate_candidates(const Topology& t,
                                                const UserPair& pair, int k,
                                                const HardwareProfile& hw,
                                                const CapacityProfile& cap) {
  const MetricGraph g = metric_graph(t, pair);
  const std::vector<MetricPath> paths =
      k < 0 ? enumerate_all_paths(g) : yen_k_shortest(g, k);
  int d_upper = cap.repeater_memories;
  for (const auto& [id, d] : cap.per_site) d_upper = std::max(d_upper, d);
  const int width_range = std::min(cap.end_node_memories, d_upper);

  std::vector<CandidatePath> out;
  for (const MetricPath& mp : paths) {
    PathDescriptor desc = descriptor_of(g, mp);
    const CoherenceStatus coh = coherence_feasible(desc, hw);
    if (coh != CoherenceStatus::kFeasible) continue;
    const double fid = e2e_fidelity(desc.hop_count(), hw);
    if (!(negativity(fid) > 0)) continue;
    std::vector<std::string> interior(desc.nodes.begin() + 1,
                                      desc.nodes.end() - 1);
    // Widths beyond the tightest site capacity on the path can never be
    // selected, so they are not emitted.
    int cap_on_path = cap.end_node_memories;
    for (const std::string& site : interior) {
      cap_on_path = std::min(cap_on_path, cap.site_capacity(site));
    }
    const int w_max = std::min(width_range, cap_on_path);
    for (int w = 1; w <= w_max; ++w) {
      const double rate = e2e_rate_approx(desc, w, hw);
      const auto u = utility(rate, fid);
      if (!u) continue;
      CandidatePath c;
      c.pair_id = pair.id;
      c.descriptor = desc;
      c.width = w;
      c.rate = rate;
      c.fidelity = fid;
      c.utility_value = *u;
      c.repeater_ids = interior;
      c.feasibility = coh;
      out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const CandidatePath& a, const CandidatePath& b) {
              if (a.utility_value != b.utility_value) {
                return a.utility_value > b.utility_value;
              }
              if (a.width != b.width) return a.width < b.width;
              return a.descriptor.nodes < b.descriptor.nodes;
            });
  return out;
}

std::string candidates_csv(const std::vector<CandidatePath>& candidates) {
  std::ostringstream out;
  out << "pair,nodes,width,rate,fidelity,utility\n";
  for (const CandidatePath& c : candidates) {
    out << c.pair_id << "," << join(c.descriptor.nodes, ";") << "," << c.width
        << "," << c.rate << "," << c.fidelity << "," << c.utility_value
        << "\n";
  }
  return out.str();
}

}  // namespace qnp
