#include "p4spec/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace p4spec {

namespace {

constexpr int kDefaultMaxVertices = 64;

int words_for(int n) { return (n + 63) / 64; }

}  // namespace

int max_vertices() {
  static const int cap = [] {
    const char* env = std::getenv("P4SPEC_MAX_N");
    if (env == nullptr || *env == '\0') {
      return kDefaultMaxVertices;
    }
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value < 1 || value > (1L << 20)) {
      return kDefaultMaxVertices;
    }
    return static_cast<int>(value);
  }();
  return cap;
}

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(int universe)
    : universe_(universe), words_(static_cast<std::size_t>(words_for(universe)), 0) {
  if (universe < 0) {
    throw std::invalid_argument("VertexSet: negative universe");
  }
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
  if (universe > 64) {
    throw std::invalid_argument("VertexSet::from_mask: universe exceeds 64");
  }
  VertexSet s(universe);
  if (universe < 64) {
    mask &= (std::uint64_t{1} << universe) - 1;
  }
  if (!s.words_.empty()) {
    s.words_[0] = mask;
  }
  return s;
}

VertexSet VertexSet::of(int universe, std::initializer_list<Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) {
    s.insert(v);
  }
  return s;
}

VertexSet VertexSet::all(int universe) {
  VertexSet s(universe);
  for (Vertex v = 0; v < universe; ++v) {
    s.insert(v);
  }
  return s;
}

bool VertexSet::contains(Vertex v) const {
  if (v < 0 || v >= universe_) {
    return false;
  }
  return (words_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
}

void VertexSet::insert(Vertex v) {
  if (v < 0 || v >= universe_) {
    throw std::out_of_range("VertexSet::insert: vertex outside universe");
  }
  words_[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(Vertex v) {
  if (v < 0 || v >= universe_) {
    return;
  }
  words_[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
}

int VertexSet::size() const {
  int total = 0;
  for (std::uint64_t w : words_) {
    total += std::popcount(w);
  }
  return total;
}

Vertex VertexSet::min() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) {
      return static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
    }
  }
  return -1;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (std::uint64_t w = words_[i]; w != 0; w &= w - 1) {
      out.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
    }
  }
  return out;
}

std::uint64_t VertexSet::mask() const {
  if (universe_ > 64) {
    throw std::logic_error("VertexSet::mask: universe exceeds 64");
  }
  return words_.empty() ? 0 : words_[0];
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t theirs = i < other.words_.size() ? other.words_[i] : 0;
    if ((words_[i] & ~theirs) != 0) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(int n) {
  if (n < 0) {
    throw std::invalid_argument("Graph: negative vertex count");
  }
  if (n > max_vertices()) {
    throw std::length_error("Graph: " + std::to_string(n) + " vertices exceeds the configured maximum of " +
                            std::to_string(max_vertices()) + " (set P4SPEC_MAX_N to raise it)");
  }
  n_ = n;
  stride_ = std::max(1, words_for(n));
  words_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(stride_), 0);
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const auto& [u, v] : edges) {
    b.add_edge(u, v);
  }
  return std::move(b).build();
}

Graph Graph::from_edge_list(int n, std::initializer_list<Edge> edges) {
  return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

int Graph::size() const {
  int total = 0;
  for (std::uint64_t w : words_) {
    total += std::popcount(w);
  }
  return total / 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    return false;
  }
  return (words_[static_cast<std::size_t>(u) * stride_ + static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
}

int Graph::degree(Vertex v) const {
  int d = 0;
  for (std::uint64_t w : row(v)) {
    d += std::popcount(w);
  }
  return d;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (Vertex v = 0; v < n_; ++v) {
    out[static_cast<std::size_t>(v)] = degree(v);
  }
  return out;
}

std::span<const std::uint64_t> Graph::row(Vertex v) const {
  return std::span<const std::uint64_t>(words_).subspan(static_cast<std::size_t>(v) * stride_,
                                                          static_cast<std::size_t>(stride_));
}

VertexSet Graph::neighbors(Vertex v) const {
  VertexSet s(n_);
  for (Vertex u = 0; u < n_; ++u) {
    if (adjacent(v, u)) {
      s.insert(u);
    }
  }
  return s;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// GraphBuilder

GraphBuilder::GraphBuilder(int n) : g_(n) {}

void GraphBuilder::check_pair(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_) {
    throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                ") has a vertex outside 0.." + std::to_string(g_.n_ - 1));
  }
  if (u == v) {
    throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }
}

void GraphBuilder::set_bit(Vertex u, Vertex v, bool on) {
  auto& word = g_.words_[static_cast<std::size_t>(u) * g_.stride_ + static_cast<std::size_t>(v) / 64];
  const std::uint64_t bit = std::uint64_t{1} << (v % 64);
  word = on ? (word | bit) : (word & ~bit);
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  set_bit(u, v, true);
  set_bit(v, u, true);
}

void GraphBuilder::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  set_bit(u, v, false);
  set_bit(v, u, false);
}

Graph GraphBuilder::build() && { return std::move(g_); }

// ---------------------------------------------------------------------------
// Operations

Graph complement(const Graph& g) {
  const int n = g.order();
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) {
        b.add_edge(u, v);
      }
    }
  }
  return std::move(b).build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int offset = g.order();
  GraphBuilder b(g.order() + h.order());
  for (const auto& [u, v] : g.edges()) {
    b.add_edge(u, v);
  }
  for (const auto& [u, v] : h.edges()) {
    b.add_edge(u + offset, v + offset);
  }
  return std::move(b).build();
}

Graph join(const Graph& g, const Graph& h) {
  const int offset = g.order();
  GraphBuilder b(g.order() + h.order());
  for (const auto& [u, v] : g.edges()) {
    b.add_edge(u, v);
  }
  for (const auto& [u, v] : h.edges()) {
    b.add_edge(u + offset, v + offset);
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < h.order(); ++v) {
      b.add_edge(u, v + offset);
    }
  }
  return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, const VertexSet& w) {
  const auto members = w.members();
  return induced_subgraph(g, members);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0 || vertices[i] >= g.order()) {
      throw std::invalid_argument("induced_subgraph: vertex set is not a subset of V(G)");
    }
    if (i > 0 && vertices[i] <= vertices[i - 1]) {
      throw std::invalid_argument("induced_subgraph: vertices must be strictly ascending");
    }
  }
  const int k = static_cast<int>(vertices.size());
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (g.adjacent(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)])) {
        b.add_edge(i, j);
      }
    }
  }
  return std::move(b).build();
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) {
      continue;
    }
    const int id = static_cast<int>(out.size());
    out.emplace_back(n);
    label[static_cast<std::size_t>(s)] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      out.back().insert(v);
      const auto r = g.row(v);
      for (std::size_t wi = 0; wi < r.size(); ++wi) {
        for (std::uint64_t w = r[wi]; w != 0; w &= w - 1) {
          const auto u = static_cast<Vertex>(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
          if (label[static_cast<std::size_t>(u)] < 0) {
            label[static_cast<std::size_t>(u)] = id;
            stack.push_back(u);
          }
        }
      }
    }
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

namespace {

struct IsoSearch {
  const Graph& g;
  const Graph& h;
  std::vector<int> deg_g;
  std::vector<int> deg_h;
  std::vector<Vertex> map;  // g-vertex -> h-vertex
  std::vector<bool> used;

  bool extend(Vertex v) {
    const int n = g.order();
    if (v == n) {
      return true;
    }
    for (Vertex cand = 0; cand < n; ++cand) {
      if (used[static_cast<std::size_t>(cand)] || deg_g[static_cast<std::size_t>(v)] != deg_h[static_cast<std::size_t>(cand)]) {
        continue;
      }
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) {
        ok = g.adjacent(u, v) == h.adjacent(map[static_cast<std::size_t>(u)], cand);
      }
      if (!ok) {
        continue;
      }
      map[static_cast<std::size_t>(v)] = cand;
      used[static_cast<std::size_t>(cand)] = true;
      if (extend(v + 1)) {
        return true;
      }
      used[static_cast<std::size_t>(cand)] = false;
    }
    return false;
  }
};

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h, int limit) {
  if (g.order() != h.order() || g.size() != h.size()) {
    return false;
  }
  if (g.order() > limit) {
    throw std::length_error("are_isomorphic: " + std::to_string(g.order()) +
                            " vertices exceeds the brute-force limit of " + std::to_string(limit));
  }
  IsoSearch search{g, h, g.degrees(), h.degrees(), {}, {}};
  auto sorted_g = search.deg_g;
  auto sorted_h = search.deg_h;
  std::sort(sorted_g.begin(), sorted_g.end());
  std::sort(sorted_h.begin(), sorted_h.end());
  if (sorted_g != sorted_h) {
    return false;
  }
  search.map.assign(static_cast<std::size_t>(g.order()), -1);
  search.used.assign(static_cast<std::size_t>(g.order()), false);
  return search.extend(0);
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "Graph(n=" << g.order() << ", edges=[";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    os << (first ? "" : ", ") << u << "-" << v;
    first = false;
  }
  os << "])";
  return os.str();
}

}  // namespace p4spec
