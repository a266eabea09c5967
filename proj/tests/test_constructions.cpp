#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "p4spec/constructions.hpp"
#include "p4spec/p4_structure.hpp"
#include "p4spec/spectral.hpp"

using namespace p4spec;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) {
      m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    }
  }
  return m;
}

// The case-(iv) Laplacian for D = F3 (or F5 with extra_edge) and an
// arbitrary head H: the D block, head rows coupled to vertices 0 and 1 only,
// and L(H) + 2I on the head.
IntMatrix case_iv_reference(const Graph& head, bool extra_edge) {
  const int j = head.order();
  const int n = 5 + j;
  std::vector<std::vector<long>> rows(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
  const std::vector<std::vector<long>> d = extra_edge
                                               ? std::vector<std::vector<long>>{{3, -1, -1, -1, 0},
                                                                                {-1, 2, 0, 0, -1},
                                                                                {-1, 0, 2, -1, 0},
                                                                                {-1, 0, -1, 2, 0},
                                                                                {0, -1, 0, 0, 1}}
                                               : std::vector<std::vector<long>>{{3, -1, -1, -1, 0},
                                                                                {-1, 2, 0, 0, -1},
                                                                                {-1, 0, 1, 0, 0},
                                                                                {-1, 0, 0, 1, 0},
                                                                                {0, -1, 0, 0, 1}};
  for (std::size_t a = 0; a < 5; ++a) {
    for (std::size_t b = 0; b < 5; ++b) {
      rows[a][b] = d[a][b];
    }
  }
  rows[0][0] += j;
  rows[1][1] += j;
  for (int r = 0; r < j; ++r) {
    const auto hr = static_cast<std::size_t>(5 + r);
    for (std::size_t a : {0U, 1U}) {
      rows[a][hr] = -1;
      rows[hr][a] = -1;
    }
    rows[hr][hr] = 2;
    for (int s = 0; s < j; ++s) {
      if (head.adjacent(r, s)) {
        rows[hr][static_cast<std::size_t>(5 + s)] = -1;
        rows[hr][hr] += 1;
      }
    }
  }
  return from_rows(rows);
}

std::vector<Vertex> span_of(int first, int last) {
  std::vector<Vertex> out;
  for (int v = first; v < last; ++v) {
    out.push_back(v);
  }
  return out;
}

std::vector<int> sorted_degrees(const Graph& g) {
  auto d = g.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("spider layout") {
  const Graph p4 = thin_spider(2);
  CHECK(are_isomorphic(p4, path_graph(4)));
  CHECK(are_isomorphic(thick_spider(2), path_graph(4)));

  const Graph net = thin_spider(3);
  CHECK(net.order() == 6);
  CHECK(net.degrees() == std::vector<int>{3, 3, 3, 1, 1, 1});
  CHECK(complement(net) == thick_spider(3));

  const Graph fig = thin_spider(4, path_graph(3));
  CHECK(fig.order() == 11);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(fig.adjacent(i, 4 + j) == (i == j));
      CHECK_FALSE(fig.adjacent(4 + i, 4 + j));
      if (i != j) {
        CHECK(fig.adjacent(i, j));
      }
    }
    for (int h = 8; h < 11; ++h) {
      CHECK(fig.adjacent(i, h));
      CHECK_FALSE(fig.adjacent(4 + i, h));
    }
  }
  CHECK(fig.adjacent(8, 9));
  CHECK(fig.adjacent(9, 10));
  CHECK_FALSE(fig.adjacent(8, 10));

  // thick: legs first, leg i misses body i only
  const Graph thick = thick_spider(4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(thick.adjacent(i, 4 + j) == (i != j));
    }
  }
  CHECK_THROWS_AS(thin_spider(1), std::invalid_argument);
  CHECK_THROWS_AS(thick_spider(0), std::invalid_argument);
}

TEST_CASE("spider complement relation is exact") {
  for (int k = 2; k <= 6; ++k) {
    CHECK(complement(thin_spider(k)) == thick_spider(k));
    for (const auto& h : head_catalog()) {
      CHECK(complement(thin_spider(k, h.graph)) == thick_spider(k, complement(h.graph)));
      const int j = h.graph.order();
      CHECK(oracle::is_spider_partition(thin_spider(k, h.graph), span_of(k, 2 * k), span_of(0, k),
                                        span_of(2 * k, 2 * k + j), false));
      CHECK(oracle::is_spider_partition(thick_spider(k, h.graph), span_of(0, k), span_of(k, 2 * k),
                                        span_of(2 * k, 2 * k + j), true));
    }
  }
}

TEST_CASE("head catalog") {
  const auto catalog = head_catalog();
  std::vector<std::string> names;
  for (const auto& h : catalog) {
    names.push_back(h.name);
  }
  CHECK(names == std::vector<std::string>{"K1", "K2", "E2", "E3", "P3", "K3", "P4", "C5"});
  CHECK(catalog[3].graph == Graph(3));
  CHECK(catalog[7].graph == cycle_graph(5));
}

TEST_CASE("exceptional family") {
  CHECK(sorted_degrees(family(FamilyId::F3)) == std::vector<int>{1, 1, 1, 2, 3});
  CHECK(family(FamilyId::F3).degrees() == std::vector<int>{3, 2, 1, 1, 1});
  CHECK(family(FamilyId::F5).degrees() == std::vector<int>{3, 2, 2, 2, 1});
  CHECK(family(FamilyId::P4).order() == 4);
  for (FamilyId id : kAllFamilies) {
    const Graph g = family(id);
    CHECK(g.order() == (id == FamilyId::P4 ? 4 : 5));
    CHECK(is_p4_extendible(g));
    CHECK(oracle::is_p4_extendible(g));
    CHECK_FALSE(is_cograph(g));
    CHECK(is_connected(g));
    CHECK(is_connected(complement(g)));
    CHECK(is_p4_connected(g));
    CHECK_FALSE(is_l_integral(g));
    CHECK(parse_family_id(to_string(id)) == id);
  }
  CHECK(are_isomorphic(family(FamilyId::F0), complement(family(FamilyId::F0))));
  CHECK(are_isomorphic(family(FamilyId::P4), complement(family(FamilyId::P4))));
  CHECK(are_isomorphic(complement(family(FamilyId::F1)), family(FamilyId::F2)));
  CHECK(are_isomorphic(complement(family(FamilyId::F3)), family(FamilyId::F6)));
  CHECK(are_isomorphic(complement(family(FamilyId::F5)), family(FamilyId::F4)));
  // the house: a 4-cycle with a roof
  CHECK(are_isomorphic(family(FamilyId::F2),
                       Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}})));
  CHECK_FALSE(parse_family_id("F7").has_value());
}

TEST_CASE("case (iv) midpoints") {
  CHECK(case_iv_midpoints(CaseIvKind::P4) == std::vector<Vertex>{1, 2});
  CHECK(case_iv_midpoints(CaseIvKind::F3) == std::vector<Vertex>{0, 1});
  CHECK(case_iv_midpoints(CaseIvKind::F5) == std::vector<Vertex>{0, 1});
  CHECK(case_iv_midpoints(CaseIvKind::F4) == std::vector<Vertex>{2, 3, 4});
  CHECK(case_iv_midpoints(CaseIvKind::F6) == std::vector<Vertex>{2, 3, 4});
}

TEST_CASE("case (iv) Laplacians match the hand-built block matrices") {
  // (F3, K1) written out in full
  const IntMatrix f3k1 = from_rows({{4, -1, -1, -1, 0, -1},
                                    {-1, 3, 0, 0, -1, -1},
                                    {-1, 0, 1, 0, 0, 0},
                                    {-1, 0, 0, 1, 0, 0},
                                    {0, -1, 0, 0, 1, 0},
                                    {-1, -1, 0, 0, 0, 2}});
  CHECK(laplacian(case_iv_graph(CaseIvKind::F3, Graph(1))) == f3k1);
  CHECK(case_iv_reference(Graph(1), false) == f3k1);
  CHECK(laplacian(case_iv_graph(CaseIvKind::F5, Graph(2))) == case_iv_reference(Graph(2), true));
  for (const auto& h : head_catalog()) {
    CHECK(laplacian(case_iv_graph(CaseIvKind::F3, h.graph)) == case_iv_reference(h.graph, false));
    CHECK(laplacian(case_iv_graph(CaseIvKind::F5, h.graph)) == case_iv_reference(h.graph, true));
  }
}

TEST_CASE("case (iv) graphs") {
  for (CaseIvKind kind : kAllCaseIvKinds) {
    CHECK(parse_case_iv_kind(to_string(kind)) == kind);
    for (const auto& h : head_catalog()) {
      const Graph g = case_iv_graph(kind, h.graph);
      CHECK(g.order() == family(family_of(kind)).order() + h.graph.order());
      CHECK_FALSE(is_l_integral(g));
      if (h.graph.order() <= 3) {
        CHECK(is_p4_extendible(g));
        CHECK(oracle::is_p4_extendible(g));
      }
    }
    CHECK_THROWS_AS(case_iv_graph(kind, Graph{}), std::invalid_argument);
  }
  // complementing swaps F5 with F4 and F3 with F6
  for (const auto& h : head_catalog()) {
    CHECK(complement(case_iv_graph(CaseIvKind::F5, h.graph)) == case_iv_graph(CaseIvKind::F4, complement(h.graph)));
    CHECK(complement(case_iv_graph(CaseIvKind::F3, h.graph)) == case_iv_graph(CaseIvKind::F6, complement(h.graph)));
  }
}

TEST_CASE("case (iv) over P4 is the two-legged thin spider") {
  for (const auto& h : head_catalog()) {
    if (h.graph.order() > 4) {
      continue;
    }
    CHECK(are_isomorphic(case_iv_graph(CaseIvKind::P4, h.graph), thin_spider(2, h.graph)));
  }
}

TEST_CASE("case (iv) polynomials") {
  const auto j1 = case_iv_polynomials(1);
  CHECK(j1.quartic == IntPolynomial{-2, 0, 12, 7, 1});
  CHECK(j1.quintic == IntPolynomial{2, -2, -12, 5, 6, 1});
  CHECK(j1.quartic.evaluate(BigInt(0)) == -2);
  CHECK(j1.quartic.evaluate(BigInt(1)) == 18);
  const auto j2 = case_iv_polynomials(2);
  CHECK(j2.quartic == IntPolynomial{-2, 0, 20, 9, 1});
  CHECK(j2.quartic.evaluate(BigInt(1)) == 28);
  for (int j = 1; j <= 10; ++j) {
    const auto p = case_iv_polynomials(j);
    CHECK(IntPolynomial::linear_factor(1) * p.quartic == p.quintic);
    CHECK(p.quartic.evaluate(BigInt(1)) == j * j + 7 * j + 10);
    const double root = oracle::bisect([&](double x) { return p.quartic.evaluate(x); }, 0.0, 1.0);
    CHECK(root > 0.0);
    CHECK(root < 1.0);
    CHECK(std::abs(p.quartic.evaluate(root)) < 1e-10);
    for (bool f5 : {false, true}) {
      const auto ev = numeric_spectrum(case_iv_graph(f5 ? CaseIvKind::F5 : CaseIvKind::F3, Graph(j)));
      const double target = 1.0 - root;
      const double nearest = *std::min_element(ev.begin(), ev.end(), [&](double a, double b) {
        return std::abs(a - target) < std::abs(b - target);
      });
      CHECK(std::abs(nearest - target) < 1e-8);
    }
  }
}

TEST_CASE("standard families") {
  CHECK(standard(StandardFamily::cycle, 6) == cycle_graph(6));
  CHECK(standard(StandardFamily::path, 4) == path_graph(4));
  CHECK(standard(StandardFamily::complete, 1) == Graph(1));
  CHECK(standard(StandardFamily::empty, 3) == Graph(3));
  CHECK(cycle_graph(6).degrees() == std::vector<int>(6, 2));
  CHECK(complete_graph(5).size() == 10);
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
  CHECK_THROWS_AS(path_graph(0), std::invalid_argument);
}

TEST_CASE("cotrees") {
  using E = CotreeExpr;
  CHECK(build_cotree(E::join({E::leaf(), E::leaf()})) == complete_graph(2));
  CHECK(build_cotree(E::unite({E::join({E::leaf(), E::leaf()}), E::join({E::leaf(), E::leaf()})})) ==
        disjoint_union(complete_graph(2), complete_graph(2)));
  CHECK(are_isomorphic(build_cotree(E::join({E::unite({E::leaf(), E::leaf()}), E::unite({E::leaf(), E::leaf()})})),
                       cycle_graph(4)));
  CHECK(build_cotree(E::leaf()) == Graph(1));
  CHECK_THROWS_AS(build_cotree(E::join({E::leaf()})), std::invalid_argument);
  const Graph big = build_cotree(
      E::join({E::unite({E::leaf(), E::join({E::leaf(), E::leaf(), E::leaf()})}), E::unite({E::leaf(), E::leaf()})}));
  CHECK(big.order() == 6);
  CHECK(is_cograph(big));
  CHECK(is_l_integral(big));
}

TEST_CASE("labeled enumeration") {
  CHECK(enumerate_graphs(2).size() == 2);
  CHECK(enumerate_graphs(3).size() == 8);
  CHECK(labeled_graph_count(7) == 2097152);
  int cographs = 0;
  int oracle_cographs = 0;
  for (const Graph& g : enumerate_graphs(4)) {
    cographs += is_cograph(g) ? 1 : 0;
    oracle_cographs += oracle::is_cograph(g) ? 1 : 0;
  }
  CHECK(cographs == 52);
  CHECK(oracle_cographs == 52);

  // masks round-trip and every graph appears once
  std::vector<std::uint64_t> seen;
  for (auto it = enumerate_graphs(5).begin(); it != enumerate_graphs(5).end(); ++it) {
    CHECK(edge_mask_of(*it) == it.mask());
    seen.push_back(it.mask());
  }
  CHECK(seen.size() == 1024);
  // bit j(j-1)/2 + i is the pair (i, j)
  CHECK(graph_from_edge_mask(4, 1ULL << 0).adjacent(0, 1));
  CHECK(graph_from_edge_mask(4, 1ULL << 2).adjacent(1, 2));
  CHECK(graph_from_edge_mask(4, 1ULL << 3).adjacent(0, 3));
  CHECK_THROWS_AS(enumerate_graphs(9), std::invalid_argument);
  CHECK(enumerate_graphs(5, 10, 20).size() == 10);
}
