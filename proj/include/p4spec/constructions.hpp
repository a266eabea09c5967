#pragma once

#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "p4spec/graph.hpp"
#include "p4spec/polynomial.hpp"

namespace p4spec {

// ---------------------------------------------------------------------------
// Spiders
//
// Vertex layout. Thin spiders put the body first: body 0..k-1, legs k..2k-1,
// head 2k..2k+j-1, with leg k+i attached to body vertex i. Thick spiders put
// the legs first (legs 0..k-1, body k..2k-1, head after), so that
// complement(thin_spider(k, H)) == thick_spider(k, complement(H)) vertex by vertex.

/// Throws std::invalid_argument for k < 2. An empty head gives the headless spider.
Graph thin_spider(int k, const Graph& head = Graph{});
Graph thick_spider(int k, const Graph& head = Graph{});

// ---------------------------------------------------------------------------
// The exceptional P4-extendible family

enum class FamilyId { P4, F0, F1, F2, F3, F4, F5, F6 };

inline constexpr FamilyId kAllFamilies[] = {FamilyId::P4, FamilyId::F0, FamilyId::F1, FamilyId::F2,
                                            FamilyId::F3, FamilyId::F4, FamilyId::F5, FamilyId::F6};

std::string_view to_string(FamilyId id);
std::optional<FamilyId> parse_family_id(std::string_view name);

/// P4 is the path 0-1-2-3. F3 has edges {01, 02, 03, 14} and F5 additionally
/// {23}; F4 and F6 are the complements of F5 and F3. F0 = C5, F1 = P5 and
/// F2 = complement(P5).
Graph family(FamilyId id);

/// The graphs D may induce in a case-(iv) P4-extendible graph.
enum class CaseIvKind { P4, F3, F4, F5, F6 };

inline constexpr CaseIvKind kAllCaseIvKinds[] = {CaseIvKind::P4, CaseIvKind::F3, CaseIvKind::F4, CaseIvKind::F5,
                                                 CaseIvKind::F6};

std::string_view to_string(CaseIvKind kind);
std::optional<CaseIvKind> parse_case_iv_kind(std::string_view name);
FamilyId family_of(CaseIvKind kind);

/// Vertices of family(family_of(kind)) that every outside vertex must see:
/// the union of the midpoints of its induced P4s.
std::vector<Vertex> case_iv_midpoints(CaseIvKind kind);

/// D = family(kind) on vertices 0..|D|-1, followed by the head. Every head
/// vertex is adjacent to exactly the midpoints of D. Throws
/// std::invalid_argument for an empty head.
Graph case_iv_graph(CaseIvKind kind, const Graph& head);

struct CaseIvPolynomials {
  IntPolynomial quintic;
  IntPolynomial quartic;
};

/// x^5 + (2j+4)x^4 + (j^2+3j+1)x^3 - (j^2+5j+6)x^2 - 2x + 2 and its cofactor
/// q(x) = x^4 + (2j+5)x^3 + (j^2+5j+6)x^2 - 2 after removing the root x = 1.
/// Throws std::logic_error if the factorisation were ever inexact.
CaseIvPolynomials case_iv_polynomials(int j);

// ---------------------------------------------------------------------------
// Standard families

enum class StandardFamily { path, cycle, complete, empty };

Graph standard(StandardFamily family, int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);

/// The heads used by the property tests: K1, K2, E2, E3, P3, K3, P4, C5.
struct NamedGraph {
  std::string name;
  Graph graph;
};
std::vector<NamedGraph> head_catalog();

// ---------------------------------------------------------------------------
// Cotrees

/// Leaf = single vertex; internal nodes combine two or more children by
/// disjoint union or join.
struct CotreeExpr {
  enum class Op { leaf, unite, join };

  Op op = Op::leaf;
  std::vector<CotreeExpr> children;

  static CotreeExpr leaf() { return {}; }
  static CotreeExpr unite(std::vector<CotreeExpr> children) { return {Op::unite, std::move(children)}; }
  static CotreeExpr join(std::vector<CotreeExpr> children) { return {Op::join, std::move(children)}; }
};

/// Throws std::invalid_argument for internal nodes with fewer than two
/// children and std::logic_error if the result contains an induced P4.
Graph build_cotree(const CotreeExpr& expr);

// ---------------------------------------------------------------------------
// Labeled enumeration
//
// Bit b of an edge mask stands for the pair (i, j), i < j, with
// b = j*(j-1)/2 + i: the column-major upper-triangle order used by graph6.

inline constexpr int kMaxEnumerationOrder = 8;
/// Largest order whose edge set fits one 64-bit mask.
inline constexpr int kMaxEdgeMaskOrder = 11;

int pair_count(int n);
std::uint64_t labeled_graph_count(int n);
Graph graph_from_edge_mask(int n, std::uint64_t mask);
std::uint64_t edge_mask_of(const Graph& g);

/// Input range over graph_from_edge_mask(n, m) for m in [first, last).
class LabeledGraphRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(int n, std::uint64_t mask) : n_(n), mask_(mask) {}

    Graph operator*() const { return graph_from_edge_mask(n_, mask_); }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++mask_;
      return old;
    }
    std::uint64_t mask() const { return mask_; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.mask_ == b.mask_; }

   private:
    int n_ = 0;
    std::uint64_t mask_ = 0;
  };

  LabeledGraphRange(int n, std::uint64_t first, std::uint64_t last) : n_(n), first_(first), last_(last) {}

  iterator begin() const { return {n_, first_}; }
  iterator end() const { return {n_, last_}; }
  std::uint64_t size() const { return last_ - first_; }

 private:
  int n_;
  std::uint64_t first_;
  std::uint64_t last_;
};

/// Every labeled graph on n vertices exactly once, in edge-mask order.
/// Throws std::invalid_argument for n > kMaxEnumerationOrder.
LabeledGraphRange enumerate_graphs(int n);
/// The sub-range [first, last) of the edge masks, for sharding.
LabeledGraphRange enumerate_graphs(int n, std::uint64_t first, std::uint64_t last);

}  // namespace p4spec
