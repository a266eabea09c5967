#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "p4spec/graph.hpp"
#include "p4spec/spectral.hpp"

namespace p4spec {

/// Every recognizer in this header works on 64-bit vertex masks and throws
/// std::length_error for graphs with more than 64 vertices.
inline constexpr int kP4StructureMaxOrder = 64;

/// An induced P4 a-b-c-d, oriented so that a < d.
struct InducedP4 {
  std::array<Vertex, 4> path;
  std::uint64_t mask;

  std::uint64_t midpoints() const { return (std::uint64_t{1} << path[1]) | (std::uint64_t{1} << path[2]); }
  std::uint64_t endpoints() const { return (std::uint64_t{1} << path[0]) | (std::uint64_t{1} << path[3]); }
  friend bool operator==(const InducedP4&, const InducedP4&) = default;
};

/// One entry per 4-subset inducing a P4, in lexicographic order of the subset.
using P4List = std::vector<InducedP4>;

P4List enumerate_p4(const Graph& g);

/// Returns the path order a-b-c-d if the four vertices of `mask` induce a P4.
std::optional<InducedP4> induced_p4_on(const Graph& g, std::uint64_t mask);

/// Recursive decomposition: g or its complement is disconnected at every level
/// down to single vertices.
bool is_cograph(const Graph& g);

bool is_p4_sparse(const Graph& g);
bool is_p4_sparse(const Graph& g, const P4List& p4s);

/// For every P4 vertex set W, at most one vertex outside W lies on an induced
/// P4 that shares a vertex with W.
bool is_p4_extendible(const Graph& g);
bool is_p4_extendible(const Graph& g, const P4List& p4s);

/// Vertices outside w on some induced P4 other than w that meets w.
std::uint64_t extension_set(std::uint64_t w, const P4List& p4s);

/// Every q-subset of vertices contains at most t induced P4s. Vacuously true
/// when q exceeds the vertex count.
bool satisfies_q_t(const Graph& g, int q, int t);
bool satisfies_q_t(const Graph& g, const P4List& p4s, int q, int t);

/// Union-find over the vertex sets of the induced P4s: true iff one class
/// covers every vertex. False for graphs with fewer than two vertices.
bool is_p4_connected(const Graph& g);
bool is_p4_connected(const Graph& g, const P4List& p4s);

enum class SpiderKind { thin, thick };

std::string_view to_string(SpiderKind kind);

/// A spider witness. legs[i] is paired with body[i]: for a thin spider
/// legs[i] ~ body[j] iff i == j, for a thick spider iff i != j.
struct SpiderSpec {
  SpiderKind kind;
  std::vector<Vertex> legs;
  std::vector<Vertex> body;
  std::vector<Vertex> head;

  int k() const { return static_cast<int>(legs.size()); }
  bool headless() const { return head.empty(); }
  VertexSet leg_set(int n) const;
  VertexSet body_set(int n) const;
  VertexSet head_set(int n) const;
  friend bool operator==(const SpiderSpec&, const SpiderSpec&) = default;
};

/// Checks every clause of the spider definition for the given witness.
bool is_valid_spider_witness(const Graph& g, const SpiderSpec& spec);

/// Finds a thin or thick spider partition. When both exist (k = 2, where the
/// two kinds coincide) the thin witness is returned.
std::optional<SpiderSpec> recognize_spider(const Graph& g);

/// Midpoint and endpoint masks of g: union over all induced P4s.
struct P4Roles {
  std::uint64_t midpoints = 0;
  std::uint64_t endpoints = 0;
};
P4Roles p4_roles(const P4List& p4s);

struct ClassificationReport {
  int n = 0;
  int m = 0;
  bool is_cograph = false;
  bool is_p4_sparse = false;
  bool is_p4_extendible = false;
  bool is_p4_reducible = false;
  bool is_p4_connected = false;
  std::optional<SpiderSpec> spider;
  bool l_integral = false;
  ExactSpectrum spectrum;
  std::size_t p4_count = 0;
};

ClassificationReport classify(const Graph& g);

}  // namespace p4spec
