#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "helpers.hpp"
#include "oracles.hpp"
#include "p4spec/constructions.hpp"
#include "p4spec/graph.hpp"

using namespace p4spec;

TEST_CASE("vertex set basics") {
  VertexSet s(70);
  CHECK(s.empty());
  s.insert(3);
  s.insert(65);
  s.insert(3);
  CHECK(s.size() == 2);
  CHECK(s.contains(65));
  CHECK_FALSE(s.contains(64));
  CHECK(s.min() == 3);
  CHECK(s.members() == std::vector<Vertex>{3, 65});
  s.erase(3);
  CHECK(s.min() == 65);
  CHECK(VertexSet::of(70, {65}) == s);
  CHECK(s.is_subset_of(VertexSet::all(70)));
  CHECK_FALSE(VertexSet::all(70).is_subset_of(s));
  CHECK(VertexSet::from_mask(5, 0b10110).members() == std::vector<Vertex>{1, 2, 4});
  CHECK(VertexSet::from_mask(5, 0b10110).mask() == 0b10110);
}

TEST_CASE("from_edge_list") {
  const Graph p4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(p4.order() == 4);
  CHECK(p4.size() == 3);
  CHECK(p4.degrees() == std::vector<int>{1, 2, 2, 1});
  CHECK(p4.adjacent(2, 1));
  CHECK_FALSE(p4.adjacent(0, 3));

  const Graph k1 = Graph::from_edge_list(1, {});
  CHECK(k1.order() == 1);
  CHECK(k1.size() == 0);

  const Graph c5 = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(c5.degrees() == std::vector<int>(5, 2));

  // duplicates collapse, order of endpoints is irrelevant
  CHECK(Graph::from_edge_list(3, {{0, 1}, {1, 0}}).size() == 1);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{-1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("vertex cap") {
  if (max_vertices() == 64) {
    CHECK_NOTHROW(Graph(64));
    CHECK_THROWS_AS(Graph(65), std::length_error);
  }
  CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
}

TEST_CASE("complement") {
  CHECK(complement(complete_graph(3)) == Graph(3));
  CHECK(are_isomorphic(complement(path_graph(4)), path_graph(4)));
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const Graph g = testutil::random_graph(1, 12, rng);
    const Graph c = complement(g);
    CHECK(complement(c) == g);
    CHECK(g.size() + c.size() == g.order() * (g.order() - 1) / 2);
    for (int u = 0; u < g.order(); ++u) {
      CHECK_FALSE(c.adjacent(u, u));
    }
  }
}

TEST_CASE("disjoint union and join") {
  CHECK(disjoint_union(Graph(1), Graph(1)) == Graph(2));
  const Graph k2k2 = disjoint_union(complete_graph(2), complete_graph(2));
  // complement(C4) hand-enumerated: C4 = 0-1-2-3-0, non-edges {0,2} and {1,3}
  CHECK(are_isomorphic(k2k2, Graph::from_edge_list(4, {{0, 2}, {1, 3}})));
  CHECK(are_isomorphic(k2k2, complement(cycle_graph(4))));
  const Graph c6 = cycle_graph(6);
  CHECK(disjoint_union(c6, Graph{}) == c6);

  CHECK(join(Graph(1), Graph(1)) == complete_graph(2));
  CHECK(are_isomorphic(join(Graph(2), Graph(2)), cycle_graph(4)));
  const Graph wheel = join(Graph(1), cycle_graph(4));
  CHECK(wheel.degrees() == std::vector<int>{4, 3, 3, 3, 3});
  CHECK(join(complete_graph(2), complete_graph(3)) == complete_graph(5));
  // join is the complement of the union of complements
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const Graph g = testutil::random_graph(1, 6, rng);
    const Graph h = testutil::random_graph(1, 6, rng);
    CHECK(join(g, h) == complement(disjoint_union(complement(g), complement(h))));
  }
}

TEST_CASE("induced subgraph") {
  const Graph c5 = cycle_graph(5);
  CHECK(induced_subgraph(c5, VertexSet::of(5, {0, 1, 2, 3})) == path_graph(4));
  CHECK(induced_subgraph(c5, VertexSet(5)).order() == 0);
  CHECK(induced_subgraph(c5, VertexSet::all(5)) == c5);
  const std::vector<Vertex> unsorted{2, 1};
  CHECK_THROWS_AS(induced_subgraph(c5, unsorted), std::invalid_argument);
  const std::vector<Vertex> outside{1, 5};
  CHECK_THROWS_AS(induced_subgraph(c5, outside), std::invalid_argument);

  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    const Graph g = testutil::random_graph(1, 12, rng);
    std::vector<Vertex> pick;
    for (int v = 0; v < g.order(); ++v) {
      if (rng() & 1U) {
        pick.push_back(v);
      }
    }
    CHECK(induced_subgraph(g, pick) == oracle::induced_by_matrix(g, pick));
  }
}

TEST_CASE("connected components") {
  const auto k2k2 = connected_components(disjoint_union(complete_graph(2), complete_graph(2)));
  REQUIRE(k2k2.size() == 2);
  CHECK(k2k2[0].members() == std::vector<Vertex>{0, 1});
  CHECK(k2k2[1].members() == std::vector<Vertex>{2, 3});
  CHECK(connected_components(Graph(3)).size() == 3);
  CHECK(connected_components(thin_spider(3, Graph(2))).size() == 1);
  CHECK(connected_components(thick_spider(4)).size() == 1);
  CHECK(is_connected(Graph{}));
  CHECK_FALSE(is_connected(Graph(2)));

  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const Graph g = testutil::random_graph(1, 10, rng);
    CHECK(is_connected(g) == oracle::is_connected(g));
    int covered = 0;
    for (const auto& c : connected_components(g)) {
      covered += c.size();
      CHECK(oracle::is_connected(induced_subgraph(g, c)));
    }
    CHECK(covered == g.order());
  }
}

TEST_CASE("isomorphism") {
  CHECK(are_isomorphic(path_graph(4), complement(path_graph(4))));
  CHECK_FALSE(are_isomorphic(complete_graph(3), path_graph(3)));
  CHECK(are_isomorphic(cycle_graph(5), complement(cycle_graph(5))));
  // same degree sequence, different structure
  CHECK_FALSE(are_isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
  CHECK_THROWS_AS(are_isomorphic(Graph(11), Graph(11)), std::length_error);

  // a relabelled copy is always isomorphic
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    const Graph g = testutil::random_graph(1, 8, rng);
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    GraphBuilder b(g.order());
    for (const auto& [u, v] : g.edges()) {
      b.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    }
    CHECK(are_isomorphic(g, std::move(b).build()));
  }
}

TEST_CASE("wide graphs span several words" * doctest::skip(max_vertices() <= 64)) {
  const int n = 130;
  const Graph p = path_graph(n);
  CHECK(p.size() == n - 1);
  CHECK(p.adjacent(64, 65));
  CHECK(p.adjacent(127, 128));
  CHECK_FALSE(p.adjacent(0, 128));
  const Graph c = complement(p);
  CHECK(c.size() == n * (n - 1) / 2 - (n - 1));
  CHECK(complement(c) == p);
  CHECK(is_connected(p));
  CHECK(connected_components(disjoint_union(p, p)).size() == 2);
  CHECK(induced_subgraph(p, VertexSet::of(n, {63, 64, 65})) == path_graph(3));
}
