#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace p4spec {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Largest vertex count a Graph may have. Defaults to 64 (one machine word per
/// adjacency row); the P4SPEC_MAX_N environment variable raises it, in which
/// case rows span several words.
int max_vertices();

/// Subset of {0, ..., universe-1}.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);

  static VertexSet from_mask(int universe, std::uint64_t mask);
  static VertexSet of(int universe, std::initializer_list<Vertex> members);
  static VertexSet all(int universe);

  int universe() const { return universe_; }
  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);
  int size() const;
  bool empty() const { return size() == 0; }
  Vertex min() const;
  std::vector<Vertex> members() const;

  /// Only valid for universe <= 64.
  std::uint64_t mask() const;
  std::span<const std::uint64_t> words() const { return words_; }

  bool is_subset_of(const VertexSet& other) const;
  bool operator==(const VertexSet& other) const = default;

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

class GraphBuilder;

/// Immutable simple undirected graph on vertices 0..n-1, stored as bitset rows.
class Graph {
 public:
  /// The null graph K0.
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Throws std::invalid_argument on out-of-range endpoints or self-loops.
  /// Duplicate edges collapse.
  static Graph from_edge_list(int n, std::span<const Edge> edges);
  static Graph from_edge_list(int n, std::initializer_list<Edge> edges);

  int order() const { return n_; }
  int size() const;
  bool adjacent(Vertex u, Vertex v) const;
  int degree(Vertex v) const;
  std::vector<int> degrees() const;

  /// Neighborhood of v as a single word; requires order() <= 64.
  std::uint64_t neighbor_mask(Vertex v) const { return words_[static_cast<std::size_t>(v) * stride_]; }
  std::span<const std::uint64_t> row(Vertex v) const;
  VertexSet neighbors(Vertex v) const;

  /// Edges (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  friend class GraphBuilder;

  int n_ = 0;
  int stride_ = 1;
  std::vector<std::uint64_t> words_;
};

/// Mutable staging area for a Graph. Used by every construction routine.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  int order() const { return g_.n_; }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const { return g_.adjacent(u, v); }
  Graph build() &&;

 private:
  void check_pair(Vertex u, Vertex v) const;
  void set_bit(Vertex u, Vertex v, bool on);

  Graph g_;
};

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

/// Vertices of w are relabelled 0..|w|-1 in ascending order.
Graph induced_subgraph(const Graph& g, const VertexSet& w);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Components ordered by their minimum vertex.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Default size limit for the brute-force isomorphism search.
inline constexpr int kIsomorphismLimit = 10;

/// Backtracking search over vertex bijections. Throws std::length_error when
/// the graphs are larger than `limit` vertices.
bool are_isomorphic(const Graph& g, const Graph& h, int limit = kIsomorphismLimit);

std::string describe(const Graph& g);

}  // namespace p4spec
