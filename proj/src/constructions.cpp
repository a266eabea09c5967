#include "p4spec/constructions.hpp"

#include <array>
#include <bit>
#include <stdexcept>

#include "p4spec/p4_structure.hpp"

namespace p4spec {

namespace {

void copy_edges(GraphBuilder& b, const Graph& g, int offset) {
  for (const auto& [u, v] : g.edges()) {
    b.add_edge(u + offset, v + offset);
  }
}

void require_legs(int k, const char* who) {
  if (k < 2) {
    throw std::invalid_argument(std::string(who) + ": a spider needs k >= 2, got " + std::to_string(k));
  }
}

}  // namespace

// ---------------------------------------------------------------------------

Graph thin_spider(int k, const Graph& head) {
  require_legs(k, "thin_spider");
  const int j = head.order();
  GraphBuilder b(2 * k + j);
  for (int i = 0; i < k; ++i) {
    for (int i2 = i + 1; i2 < k; ++i2) {
      b.add_edge(i, i2);
    }
    b.add_edge(i, k + i);
    for (int r = 0; r < j; ++r) {
      b.add_edge(i, 2 * k + r);
    }
  }
  copy_edges(b, head, 2 * k);
  return std::move(b).build();
}

Graph thick_spider(int k, const Graph& head) {
  require_legs(k, "thick_spider");
  const int j = head.order();
  GraphBuilder b(2 * k + j);
  for (int i = 0; i < k; ++i) {
    const int body_i = k + i;
    for (int i2 = i + 1; i2 < k; ++i2) {
      b.add_edge(body_i, k + i2);
    }
    for (int leg = 0; leg < k; ++leg) {
      if (leg != i) {
        b.add_edge(leg, body_i);
      }
    }
    for (int r = 0; r < j; ++r) {
      b.add_edge(body_i, 2 * k + r);
    }
  }
  copy_edges(b, head, 2 * k);
  return std::move(b).build();
}

// ---------------------------------------------------------------------------

std::string_view to_string(FamilyId id) {
  switch (id) {
    case FamilyId::P4: return "P4";
    case FamilyId::F0: return "F0";
    case FamilyId::F1: return "F1";
    case FamilyId::F2: return "F2";
    case FamilyId::F3: return "F3";
    case FamilyId::F4: return "F4";
    case FamilyId::F5: return "F5";
    case FamilyId::F6: return "F6";
  }
  return "?";
}

std::optional<FamilyId> parse_family_id(std::string_view name) {
  for (FamilyId id : kAllFamilies) {
    if (to_string(id) == name) {
      return id;
    }
  }
  return std::nullopt;
}

Graph family(FamilyId id) {
  switch (id) {
    case FamilyId::P4: return path_graph(4);
    case FamilyId::F0: return cycle_graph(5);
    case FamilyId::F1: return path_graph(5);
    case FamilyId::F2: return complement(path_graph(5));
    case FamilyId::F3: return Graph::from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}});
    case FamilyId::F5: return Graph::from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 3}});
    case FamilyId::F4: return complement(family(FamilyId::F5));
    case FamilyId::F6: return complement(family(FamilyId::F3));
  }
  throw std::invalid_argument("family: unknown id");
}

std::string_view to_string(CaseIvKind kind) { return to_string(family_of(kind)); }

std::optional<CaseIvKind> parse_case_iv_kind(std::string_view name) {
  for (CaseIvKind kind : kAllCaseIvKinds) {
    if (to_string(kind) == name) {
      return kind;
    }
  }
  return std::nullopt;
}

FamilyId family_of(CaseIvKind kind) {
  switch (kind) {
    case CaseIvKind::P4: return FamilyId::P4;
    case CaseIvKind::F3: return FamilyId::F3;
    case CaseIvKind::F4: return FamilyId::F4;
    case CaseIvKind::F5: return FamilyId::F5;
    case CaseIvKind::F6: return FamilyId::F6;
  }
  throw std::invalid_argument("family_of: unknown case-(iv) kind");
}

std::vector<Vertex> case_iv_midpoints(CaseIvKind kind) {
  const Graph d = family(family_of(kind));
  const P4Roles roles = p4_roles(enumerate_p4(d));
  if ((roles.midpoints & roles.endpoints) != 0) {
    throw std::logic_error("case_iv_midpoints: a vertex is both midpoint and endpoint");
  }
  std::vector<Vertex> out;
  for (std::uint64_t m = roles.midpoints; m != 0; m &= m - 1) {
    out.push_back(static_cast<Vertex>(std::countr_zero(m)));
  }
  return out;
}

Graph case_iv_graph(CaseIvKind kind, const Graph& head) {
  if (head.order() < 1) {
    throw std::invalid_argument("case_iv_graph: the head must have at least one vertex");
  }
  const Graph d = family(family_of(kind));
  const int base = d.order();
  GraphBuilder b(base + head.order());
  copy_edges(b, d, 0);
  copy_edges(b, head, base);
  for (Vertex mid : case_iv_midpoints(kind)) {
    for (int r = 0; r < head.order(); ++r) {
      b.add_edge(mid, base + r);
    }
  }
  return std::move(b).build();
}

CaseIvPolynomials case_iv_polynomials(int j) {
  if (j < 1) {
    throw std::invalid_argument("case_iv_polynomials: requires j >= 1");
  }
  const long jj = j;
  IntPolynomial quintic{2, -2, -(jj * jj + 5 * jj + 6), jj * jj + 3 * jj + 1, 2 * jj + 4, 1};
  IntPolynomial quartic{-2, 0, jj * jj + 5 * jj + 6, 2 * jj + 5, 1};
  auto [cofactor, remainder] = synthetic_division(quintic, BigInt(1));
  if (remainder != 0 || cofactor != quartic) {
    throw std::logic_error("case_iv_polynomials: quintic is not (x - 1) * q(x)");
  }
  return {std::move(quintic), std::move(quartic)};
}

// ---------------------------------------------------------------------------

Graph standard(StandardFamily family, int n) {
  switch (family) {
    case StandardFamily::path: return path_graph(n);
    case StandardFamily::cycle: return cycle_graph(n);
    case StandardFamily::complete: return complete_graph(n);
    case StandardFamily::empty: return empty_graph(n);
  }
  throw std::invalid_argument("standard: unknown family");
}

Graph path_graph(int n) {
  if (n < 1) {
    throw std::invalid_argument("path_graph: requires n >= 1");
  }
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) {
    b.add_edge(i, i + 1);
  }
  return std::move(b).build();
}

Graph cycle_graph(int n) {
  if (n < 3) {
    throw std::invalid_argument("cycle_graph: requires n >= 3");
  }
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) {
    b.add_edge(i, (i + 1) % n);
  }
  return std::move(b).build();
}

Graph complete_graph(int n) {
  if (n < 1) {
    throw std::invalid_argument("complete_graph: requires n >= 1");
  }
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

Graph empty_graph(int n) {
  if (n < 1) {
    throw std::invalid_argument("empty_graph: requires n >= 1");
  }
  return Graph(n);
}

std::vector<NamedGraph> head_catalog() {
  return {
      {"K1", complete_graph(1)}, {"K2", complete_graph(2)}, {"E2", empty_graph(2)}, {"E3", empty_graph(3)},
      {"P3", path_graph(3)},     {"K3", complete_graph(3)}, {"P4", path_graph(4)},  {"C5", cycle_graph(5)},
  };
}

// ---------------------------------------------------------------------------

namespace {

Graph evaluate_cotree(const CotreeExpr& expr) {
  if (expr.op == CotreeExpr::Op::leaf) {
    if (!expr.children.empty()) {
      throw std::invalid_argument("build_cotree: leaf with children");
    }
    return Graph(1);
  }
  if (expr.children.size() < 2) {
    throw std::invalid_argument("build_cotree: internal node needs at least two children");
  }
  Graph acc = evaluate_cotree(expr.children.front());
  for (std::size_t i = 1; i < expr.children.size(); ++i) {
    const Graph next = evaluate_cotree(expr.children[i]);
    acc = expr.op == CotreeExpr::Op::unite ? disjoint_union(acc, next) : join(acc, next);
  }
  return acc;
}

}  // namespace

Graph build_cotree(const CotreeExpr& expr) {
  Graph g = evaluate_cotree(expr);
  if (g.order() <= kP4StructureMaxOrder && !enumerate_p4(g).empty()) {
    throw std::logic_error("build_cotree: result contains an induced P4");
  }
  return g;
}

// ---------------------------------------------------------------------------

int pair_count(int n) { return n * (n - 1) / 2; }

std::uint64_t labeled_graph_count(int n) {
  if (n < 0 || n > kMaxEdgeMaskOrder) {
    throw std::invalid_argument("labeled_graph_count: n out of range");
  }
  const int pairs = pair_count(n);
  return pairs >= 64 ? 0 : std::uint64_t{1} << pairs;
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  if (n < 0 || n > kMaxEdgeMaskOrder) {
    throw std::invalid_argument("graph_from_edge_mask: n must be in 0.." + std::to_string(kMaxEdgeMaskOrder));
  }
  GraphBuilder b(n);
  int bit_index = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit_index) {
      if ((mask >> bit_index) & 1U) {
        b.add_edge(i, j);
      }
    }
  }
  return std::move(b).build();
}

std::uint64_t edge_mask_of(const Graph& g) {
  const int n = g.order();
  if (n > kMaxEdgeMaskOrder) {
    throw std::invalid_argument("edge_mask_of: graph too large for a 64-bit edge mask");
  }
  std::uint64_t mask = 0;
  int bit_index = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit_index) {
      if (g.adjacent(i, j)) {
        mask |= std::uint64_t{1} << bit_index;
      }
    }
  }
  return mask;
}

LabeledGraphRange enumerate_graphs(int n) { return enumerate_graphs(n, 0, labeled_graph_count(n)); }

LabeledGraphRange enumerate_graphs(int n, std::uint64_t first, std::uint64_t last) {
  if (n < 0 || n > kMaxEnumerationOrder) {
    throw std::invalid_argument("enumerate_graphs: n must be in 0.." + std::to_string(kMaxEnumerationOrder));
  }
  const std::uint64_t total = labeled_graph_count(n);
  if (first > last || last > total) {
    throw std::invalid_argument("enumerate_graphs: mask range outside [0, 2^C(n,2))");
  }
  return {n, first, last};
}

}  // namespace p4spec
