// Copyright 2026 The fldrank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <algorithm>
#include <random>

#include "fldrank/graph.hpp"
#include "oracles.hpp"

using namespace fldrank;

TEST_CASE("parse_edge_list builds a path graph") {
  auto parsed = parse_edge_list("1 2\n2 3\n");
  CHECK(parsed.graph.node_count() == 3);
  CHECK(parsed.graph.edge_count() == 2);
  CHECK(parsed.graph.label(0) == "1");
  CHECK(parsed.self_loops_dropped == 0);
}

TEST_CASE("parse_edge_list collapses duplicates and drops self-loops") {
  auto parsed = parse_edge_list("a b\nb a\na a\n");
  CHECK(parsed.graph.node_count() == 2);
  CHECK(parsed.graph.edge_count() == 1);
  CHECK(parsed.self_loops_dropped == 1);
  CHECK(parsed.duplicate_edges == 1);
}

TEST_CASE("parse_edge_list handles comments, blank lines and CRLF") {
  auto parsed = parse_edge_list("# header\r\n% konect\r\n\r\n  \t\nx\ty\r\ny z\n");
  CHECK(parsed.graph.node_count() == 3);
  CHECK(parsed.graph.edge_count() == 2);
  CHECK(parsed.graph.find("y").has_value());
  CHECK_FALSE(parsed.graph.find("x\r").has_value());
}

TEST_CASE("parse_edge_list reports the offending line") {
  try {
    parse_edge_list("1 2\n\n3 4 5\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_edge_list("lonely\n"), ParseError);
}

TEST_CASE("empty input is an empty graph") {
  auto parsed = parse_edge_list("");
  CHECK(parsed.graph.node_count() == 0);
  CHECK(connected_components(parsed.graph).component_sizes.empty());
  CHECK(parse_edge_list("# only a comment\n").graph.node_count() == 0);
}

TEST_CASE("kite fixture has 10 nodes and 18 edges") {
  auto g = oracle::load_fixture("kite.edges");
  CHECK(g.node_count() == 10);
  CHECK(g.edge_count() == 18);
  auto karate = oracle::load_fixture("karate.edges");
  CHECK(karate.node_count() == 34);
  CHECK(karate.edge_count() == 78);
}

TEST_CASE("load_edge_list names a missing file") {
  CHECK_THROWS_WITH_AS(load_edge_list("/nonexistent/graph.txt"),
                       doctest::Contains("/nonexistent/graph.txt"), std::runtime_error);
}

TEST_CASE("Graph adjacency is symmetric, sorted and simple") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = oracle::random_graph(15, 0.3, rng);
    for (NodeId u = 0; u < g.node_count(); ++u) {
      auto row = g.neighbors(u);
      CHECK(std::is_sorted(row.begin(), row.end()));
      CHECK(std::adjacent_find(row.begin(), row.end()) == row.end());
      for (NodeId v : row) {
        CHECK(v != u);
        CHECK(g.has_edge(v, u));
      }
    }
    for (NodeId u = 0; u < g.node_count(); ++u) CHECK(*g.find(g.label(u)) == u);
  }
}

TEST_CASE("bfs_distances on the kite from node 7") {
  auto g = oracle::load_fixture("kite.edges");
  auto f = bfs_distances(g, *g.find("7"));
  for (const char* l : {"1", "2", "3", "4", "5", "6"}) CHECK(f.dist[*g.find(l)] == 1);
  CHECK(f.dist[*g.find("8")] == 2);
  CHECK(f.dist[*g.find("9")] == 3);
  CHECK(f.dist[*g.find("10")] == 4);
  CHECK(f.d_max == 4);
  CHECK(f.shell_counts == std::vector<std::size_t>{1, 6, 1, 1, 1});
}

TEST_CASE("bfs_distances small cases") {
  auto single = parse_edge_list("a a\n").graph;
  auto f = bfs_distances(single, 0);
  CHECK(f.d_max == 0);
  CHECK(f.shell_counts == std::vector<std::size_t>{1});

  auto c5 = oracle::cycle(5);
  for (NodeId s = 0; s < 5; ++s) {
    auto fc = bfs_distances(c5, s);
    CHECK(fc.d_max == 2);
    CHECK(fc.shell_counts == std::vector<std::size_t>{1, 2, 2});
  }
  CHECK_THROWS_AS(bfs_distances(c5, 5), std::out_of_range);
}

TEST_CASE("bfs_distances marks other components unreachable") {
  auto g = parse_edge_list("1 2\n3 4\n4 5\n").graph;
  auto f = bfs_distances(g, *g.find("1"));
  CHECK(f.dist[*g.find("3")] == kUnreachable);
  CHECK(f.d_max == 1);
  CHECK(f.component_size() == 2);
}

TEST_CASE("connected_components") {
  auto kite = oracle::load_fixture("kite.edges");
  CHECK(connected_components(kite).component_sizes == std::vector<std::size_t>{10});
  auto two = parse_edge_list("a b\nc d\n").graph;
  auto cm = connected_components(two);
  CHECK(cm.component_sizes == std::vector<std::size_t>{2, 2});
  CHECK(cm.component_id[*two.find("a")] == cm.component_id[*two.find("b")]);
  CHECK(cm.component_id[*two.find("a")] != cm.component_id[*two.find("c")]);
}

TEST_CASE("distance field properties on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = oracle::random_graph(20, 0.12, rng);
    auto fields = all_distance_fields(g, 3);
    auto fw = oracle::floyd_warshall(g);
    auto comps = connected_components(g);
    for (NodeId s = 0; s < g.node_count(); ++s) {
      const auto& f = fields[s];
      CHECK(f.dist[s] == 0);
      CHECK(f.component_size() == comps.component_sizes[comps.component_id[s]]);
      for (NodeId t = 0; t < g.node_count(); ++t) {
        if (fw[s][t] >= oracle::kInf) {
          CHECK(f.dist[t] == kUnreachable);
          continue;
        }
        CHECK(f.dist[t] == fw[s][t]);
        CHECK(f.dist[t] == fields[t].dist[s]);
      }
      for (NodeId u = 0; u < g.node_count(); ++u) {
        for (NodeId v : g.neighbors(u)) {
          if (f.reachable(u)) CHECK(std::abs(f.dist[u] - f.dist[v]) <= 1);
        }
      }
    }
  }
}

TEST_CASE("parse_edge_list is invariant under line reordering") {
  std::mt19937_64 rng(3);
  auto g = oracle::load_fixture("karate.edges");
  std::vector<std::string> labels;
  auto h = oracle::relabel(g, rng, &labels);
  CHECK(h.node_count() == g.node_count());
  CHECK(h.edge_count() == g.edge_count());
  for (NodeId u = 0; u < g.node_count(); ++u) {
    NodeId hu = *h.find(labels[u]);
    CHECK(h.degree(hu) == g.degree(u));
    for (NodeId v : g.neighbors(u)) CHECK(h.has_edge(hu, *h.find(labels[v])));
  }
}
