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

#include <cmath>

#include "doctest.h"
#include "qnp/rng.hpp"

using namespace qnp;

namespace {

Topology chain5(double seg = 10.0) {
  // Linear chain n1 - r2 - r3 - r4 - n5 with equal segments.
  std::vector<Node> nodes{
      {"1", NodeKind::kEndNode, std::nullopt, ""},
      {"2", NodeKind::kRepeaterCandidate, std::nullopt, ""},
      {"3", NodeKind::kRepeaterCandidate, std::nullopt, ""},
      {"4", NodeKind::kRepeaterCandidate, std::nullopt, ""},
      {"5", NodeKind::kEndNode, std::nullopt, ""},
  };
  std::vector<Link> links{
      {"1", "2", seg}, {"2", "3", seg}, {"3", "4", seg}, {"4", "5", seg}};
  std::vector<UserPair> pairs{{"q1", "1", "5", 1.0}};
  return Topology(nodes, links, pairs);
}

}  // namespace

TEST_CASE("load echoes a two node document") {
  const std::string doc = R"({
    "nodes": [{"id":"A","kind":"end"},{"id":"B","kind":"end"}],
    "links": [{"a":"A","b":"B","length_km":50}],
    "pairs": [{"id":"q","s":"A","t":"B"}]
  })";
  Topology t = load_topology(doc);
  CHECK(t.nodes().size() == 2);
  CHECK(t.links().size() == 1);
  CHECK(t.links()[0].length_km == doctest::Approx(50.0));
}

TEST_CASE("load rejects unknown endpoints") {
  const std::string doc = R"({
    "nodes": [{"id":"A","kind":"end"}],
    "links": [{"a":"A","b":"missing","length_km":10}]
  })";
  CHECK_THROWS_WITH_AS(load_topology(doc),
                       doctest::Contains("unknown endpoint"), ValidationError);
}

TEST_CASE("load rejects duplicates and bad lengths") {
  CHECK_THROWS_AS(load_topology(R"({
    "nodes":[{"id":"A","kind":"end"},{"id":"A","kind":"end"}],
    "links":[]})"),
                  ValidationError);
  CHECK_THROWS_AS(load_topology(R"({
    "nodes":[{"id":"A","kind":"end"},{"id":"B","kind":"end"}],
    "links":[{"a":"A","b":"B","length_km":-3}]})"),
                  ValidationError);
  CHECK_THROWS_AS(load_topology("not json"), ValidationError);
}

TEST_CASE("link length computed from coordinates when absent") {
  const std::string doc = R"({
    "nodes": [{"id":"A","kind":"end","lat":0,"lon":0},
              {"id":"B","kind":"end","lat":0,"lon":90}],
    "links": [{"a":"A","b":"B"}]
  })";
  Topology t = load_topology(doc);
  // Quarter of the great circle.
  CHECK(t.links()[0].length_km == doctest::Approx(6371.0 * M_PI / 2).epsilon(1e-9));
}

TEST_CASE("geodesic distances") {
  CHECK(geodesic_length_km({12.5, 40.0}, {12.5, 40.0}) == doctest::Approx(0.0));
  CHECK(geodesic_length_km({0, 0}, {0, 90}) ==
        doctest::Approx(10007.543398).epsilon(1e-6));
  CHECK(geodesic_length_km({0, 0}, {0, 180}) ==
        doctest::Approx(20015.086796).epsilon(1e-6));
  CHECK(geodesic_length_km({90, 0}, {-90, 0}) ==
        doctest::Approx(20015.086796).epsilon(1e-6));
}

TEST_CASE("shortest path lengths") {
  Topology t = chain5(10.0);
  CHECK(*t.shortest_path_length("1", "2") == doctest::Approx(10));
  CHECK(*t.shortest_path_length("1", "5") == doctest::Approx(40));
  CHECK(*t.shortest_path_length("3", "3") == doctest::Approx(0));

  // Triangle with a long side: the detour wins.
  std::vector<Node> nodes{{"a", NodeKind::kEndNode, std::nullopt, ""},
                          {"b", NodeKind::kEndNode, std::nullopt, ""},
                          {"c", NodeKind::kEndNode, std::nullopt, ""}};
  std::vector<Link> links{{"a", "b", 1}, {"b", "c", 1}, {"a", "c", 3}};
  Topology tri(nodes, links, {});
  CHECK(*tri.shortest_path_length("a", "c") == doctest::Approx(2));

  std::vector<Node> disc{{"a", NodeKind::kEndNode, std::nullopt, ""},
                         {"b", NodeKind::kEndNode, std::nullopt, ""},
                         {"c", NodeKind::kEndNode, std::nullopt, ""},
                         {"d", NodeKind::kEndNode, std::nullopt, ""}};
  Topology t2(disc, {Link{"a", "b", 1}, Link{"c", "d", 1}}, {});
  CHECK(!t2.shortest_path_length("a", "c").has_value());
  CHECK(t2.shortest_path_length("a", "b").has_value());
}

TEST_CASE("shortest path is symmetric with zero diagonal") {
  Rng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.uniform_int(2, 8);
    std::vector<Node> nodes;
    for (int i = 0; i < n; ++i) {
      nodes.push_back(Node{"v" + std::to_string(i), NodeKind::kEndNode,
                           std::nullopt, ""});
    }
    std::vector<Link> links;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng.uniform01() < 0.5) {
          links.push_back(Link{nodes[i].id, nodes[j].id,
                               rng.uniform(1.0, 100.0)});
        }
      }
    }
    Topology t(nodes, links, {});
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        auto dij = t.shortest_path_length(nodes[i].id, nodes[j].id);
        auto dji = t.shortest_path_length(nodes[j].id, nodes[i].id);
        CHECK(dij.has_value() == dji.has_value());
        if (dij) CHECK(*dij == doctest::Approx(*dji).epsilon(1e-12));
        if (i == j) CHECK(*dij == doctest::Approx(0.0));
      }
    }
  }
}

TEST_CASE("metric graph over a chain sums link lengths") {
  Topology t = chain5(10.0);
  MetricGraph g = metric_graph(t, t.pairs()[0]);
  // Vertices: sender 1, receiver 5, candidates 2,3,4.
  REQUIRE(g.vertex_ids.size() == 5);
  const int v1 = 0, v5 = 1;
  int v3 = -1;
  for (std::size_t i = 0; i < g.vertex_ids.size(); ++i) {
    if (g.vertex_ids[i] == "3") v3 = static_cast<int>(i);
  }
  REQUIRE(v3 >= 0);
  CHECK(*g.weight[v1][v3] == doctest::Approx(20.0));  // through node 2
  CHECK(*g.weight[v1][v5] == doctest::Approx(40.0));
}

TEST_CASE("metric graph of a single direct link") {
  std::vector<Node> nodes{{"s", NodeKind::kEndNode, std::nullopt, ""},
                          {"t", NodeKind::kEndNode, std::nullopt, ""}};
  Topology t(nodes, {Link{"s", "t", 25}}, {UserPair{"q", "s", "t", 1.0}});
  MetricGraph g = metric_graph(t, t.pairs()[0]);
  CHECK(g.vertex_ids.size() == 2);
  CHECK(*g.weight[0][1] == doctest::Approx(25));
}

TEST_CASE("metric graph of a star") {
  std::vector<Node> nodes{{"s", NodeKind::kEndNode, std::nullopt, ""},
                          {"t", NodeKind::kEndNode, std::nullopt, ""},
                          {"hub", NodeKind::kRepeaterCandidate, std::nullopt, ""},
                          {"x", NodeKind::kEndNode, std::nullopt, ""}};
  std::vector<Link> links{{"s", "hub", 10}, {"t", "hub", 10}, {"x", "hub", 10}};
  Topology t(nodes, links, {UserPair{"q", "s", "t", 1.0}});
  MetricGraph g = metric_graph(t, t.pairs()[0]);
  REQUIRE(g.vertex_ids.size() == 3);  // s, t, hub
  CHECK(*g.weight[0][1] == doctest::Approx(20));
  CHECK(*g.weight[0][2] == doctest::Approx(10));
  CHECK(*g.weight[1][2] == doctest::Approx(10));
}

TEST_CASE("metric graph satisfies the triangle inequality") {
  Topology t = chain5(12.5);
  MetricGraph g = metric_graph(t, t.pairs()[0]);
  const int n = static_cast<int>(g.vertex_ids.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int m = 0; m < n; ++m) {
        if (i == j || j == m || i == m) continue;
        if (g.weight[i][j] && g.weight[j][m] && g.weight[i][m]) {
          CHECK(*g.weight[i][m] <= *g.weight[i][j] + *g.weight[j][m] + 1e-9);
        }
      }
    }
  }
}

TEST_CASE("augment splits long links with equal spacing") {
  std::vector<Node> nodes{{"a", NodeKind::kEndNode, std::nullopt, ""},
                          {"b", NodeKind::kEndNode, std::nullopt, ""}};
  SUBCASE("below threshold unchanged") {
    Topology t(nodes, {Link{"a", "b", 150}}, {});
    Topology out = augment(t, 100);
    CHECK(out.links().size() == 1);
    CHECK(out.nodes().size() == 2);
  }
  SUBCASE("one auxiliary node") {
    Topology t(nodes, {Link{"a", "b", 210}}, {});
    Topology out = augment(t, 100);
    REQUIRE(out.nodes().size() == 3);
    REQUIRE(out.links().size() == 2);
    CHECK(out.links()[0].length_km == doctest::Approx(105));
    CHECK(out.links()[1].length_km == doctest::Approx(105));
    CHECK(out.nodes()[2].kind == NodeKind::kRepeaterCandidate);
    CHECK(out.nodes()[2].id == "a-b-aux1");
  }
  SUBCASE("four auxiliary nodes") {
    Topology t(nodes, {Link{"a", "b", 350}}, {});
    Topology out = augment(t, 70);
    CHECK(out.nodes().size() == 6);
    REQUIRE(out.links().size() == 5);
    for (const Link& l : out.links()) {
      CHECK(l.length_km == doctest::Approx(70));
    }
  }
}

TEST_CASE("augment is idempotent and length preserving") {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Node> nodes;
    std::vector<Link> links;
    const int n = rng.uniform_int(2, 6);
    for (int i = 0; i < n; ++i) {
      nodes.push_back(Node{"v" + std::to_string(i), NodeKind::kEndNode,
                           std::nullopt, ""});
    }
    for (int i = 1; i < n; ++i) {
      links.push_back(Link{"v" + std::to_string(i - 1), "v" + std::to_string(i),
                           rng.uniform(20.0, 600.0)});
    }
    Topology t(nodes, links, {});
    const double l0 = rng.uniform(40.0, 120.0);
    Topology once = augment(t, l0);
    Topology twice = augment(once, l0);
    CHECK(once.nodes().size() == twice.nodes().size());
    CHECK(once.links().size() == twice.links().size());
    double max_len = 0, total_once = 0, total_orig = 0;
    for (const Link& l : once.links()) {
      max_len = std::max(max_len, l.length_km);
      total_once += l.length_km;
    }
    for (const Link& l : t.links()) total_orig += l.length_km;
    CHECK(max_len <= 2 * l0 + 1e-9);
    CHECK(total_once == doctest::Approx(total_orig).epsilon(1e-9));
  }
}

TEST_CASE("dumbbell generator geometry") {
  SUBCASE("site spacing") {
    Topology t = make_dumbbell(1, 10, 110, 1);
    // Backbone r1..r10 with 10 km spacing between consecutive sites.
    int backbone_links = 0;
    for (const Link& l : t.links()) {
      if (l.a[0] == 'r' && l.b[0] == 'r') {
        CHECK(l.length_km == doctest::Approx(10.0));
        ++backbone_links;
      }
    }
    CHECK(backbone_links == 9);
  }
  SUBCASE("single pair has exactly two end nodes") {
    Topology t = make_dumbbell(1, 4, 100, 1);
    int ends = 0;
    for (const Node& n : t.nodes()) {
      if (n.kind == NodeKind::kEndNode) ++ends;
    }
    CHECK(ends == 2);
    CHECK(t.pairs().size() == 1);
  }
  SUBCASE("sender to receiver distance is stub+backbone+stub") {
    Topology t = make_dumbbell(1, 4, 100, 1);
    CHECK(*t.shortest_path_length("n1", "n2") == doctest::Approx(102.0));
  }
  SUBCASE("pairs connect opposite sides") {
    Topology t = make_dumbbell(3, 10, 110, 1);
    for (const UserPair& p : t.pairs()) {
      CHECK(*t.shortest_path_length(p.sender, p.receiver) ==
            doctest::Approx(112.0));
    }
  }
}

TEST_CASE("topology json round trip") {
  Topology t = make_dumbbell(2, 4, 80, 1);
  Topology back = load_topology(dump_topology(t));
  CHECK(back.nodes().size() == t.nodes().size());
  CHECK(back.links().size() == t.links().size());
  CHECK(back.pairs().size() == t.pairs().size());
  CHECK(*back.shortest_path_length("n1", "n2") ==
        doctest::Approx(*t.shortest_path_length("n1", "n2")));
}

TEST_CASE("pairs must not share end nodes") {
  std::vector<Node> nodes{{"a", NodeKind::kEndNode, std::nullopt, ""},
                          {"b", NodeKind::kEndNode, std::nullopt, ""},
                          {"c", NodeKind::kEndNode, std::nullopt, ""}};
  std::vector<Link> links{{"a", "b", 1}, {"b", "c", 1}};
  CHECK_THROWS_AS(Topology(nodes, links,
                           {UserPair{"q1", "a", "b", 1.0},
                            UserPair{"q2", "b", "c", 1.0}}),
                  ValidationError);
}
