#include "p4spec/p4_structure.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace p4spec {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(Vertex v) { return Mask{1} << v; }

Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

void require_small(const Graph& g, const char* who) {
  if (g.order() > kP4StructureMaxOrder) {
    throw std::length_error(std::string(who) + ": P4 structure analysis supports at most 64 vertices, got " +
                            std::to_string(g.order()));
  }
}

// Connected components of g[set] (complemented when `in_complement`).
std::vector<Mask> components_within(const Graph& g, Mask set, bool in_complement) {
  std::vector<Mask> out;
  Mask remaining = set;
  while (remaining != 0) {
    Mask comp = remaining & (~remaining + 1);
    Mask frontier = comp;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) {
        const auto v = static_cast<Vertex>(std::countr_zero(f));
        Mask nb = g.neighbor_mask(v);
        if (in_complement) {
          nb = ~nb & ~bit(v);
        }
        next |= nb & set;
      }
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    remaining &= ~comp;
  }
  return out;
}

bool cograph_within(const Graph& g, Mask set) {
  if (std::popcount(set) <= 1) {
    return true;
  }
  auto parts = components_within(g, set, false);
  if (parts.size() == 1) {
    parts = components_within(g, set, true);
    if (parts.size() == 1) {
      return false;
    }
  }
  return std::all_of(parts.begin(), parts.end(), [&](Mask part) { return cograph_within(g, part); });
}

struct DisjointSets {
  std::vector<int> parent;

  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

std::optional<SpiderSpec> thin_witness(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> legs;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 1) {
      legs.push_back(v);
    }
  }
  if (legs.size() < 2) {
    return std::nullopt;
  }
  Mask leg_mask = 0;
  for (Vertex s : legs) {
    leg_mask |= bit(s);
  }
  std::vector<Vertex> body;
  Mask body_mask = 0;
  for (Vertex s : legs) {
    const auto c = static_cast<Vertex>(std::countr_zero(g.neighbor_mask(s)));
    if ((body_mask | leg_mask) & bit(c)) {
      return std::nullopt;
    }
    body.push_back(c);
    body_mask |= bit(c);
  }
  for (Vertex c : body) {
    if ((g.neighbor_mask(c) & body_mask) != (body_mask & ~bit(c))) {
      return std::nullopt;
    }
  }
  std::vector<Vertex> head;
  const Mask head_mask = full_mask(n) & ~leg_mask & ~body_mask;
  for (Mask h = head_mask; h != 0; h &= h - 1) {
    const auto r = static_cast<Vertex>(std::countr_zero(h));
    if ((g.neighbor_mask(r) & body_mask) != body_mask) {
      return std::nullopt;
    }
    head.push_back(r);
  }
  return SpiderSpec{SpiderKind::thin, std::move(legs), std::move(body), std::move(head)};
}

}  // namespace

// ---------------------------------------------------------------------------

std::optional<InducedP4> induced_p4_on(const Graph& g, std::uint64_t mask) {
  if (std::popcount(mask) != 4) {
    return std::nullopt;
  }
  std::array<Vertex, 4> v{};
  std::array<int, 4> deg{};
  int idx = 0;
  int degree_sum = 0;
  for (Mask m = mask; m != 0; m &= m - 1, ++idx) {
    v[static_cast<std::size_t>(idx)] = static_cast<Vertex>(std::countr_zero(m));
    deg[static_cast<std::size_t>(idx)] = std::popcount(g.neighbor_mask(v[static_cast<std::size_t>(idx)]) & mask);
    degree_sum += deg[static_cast<std::size_t>(idx)];
  }
  if (degree_sum != 6) {
    return std::nullopt;
  }
  Vertex ends[2] = {-1, -1};
  int n_ends = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (deg[i] == 1) {
      if (n_ends == 2) {
        return std::nullopt;
      }
      ends[n_ends++] = v[i];
    } else if (deg[i] != 2) {
      return std::nullopt;
    }
  }
  if (n_ends != 2) {
    return std::nullopt;
  }
  // On four vertices the degree sequence (1,1,2,2) forces the path a-b-c-d.
  const Vertex a = ends[0];
  const Vertex d = ends[1];
  const auto b = static_cast<Vertex>(std::countr_zero(g.neighbor_mask(a) & mask));
  const auto c = static_cast<Vertex>(std::countr_zero(g.neighbor_mask(d) & mask));
  if (b == c || b == d) {
    return std::nullopt;
  }
  return InducedP4{{a, b, c, d}, mask};
}

P4List enumerate_p4(const Graph& g) {
  require_small(g, "enumerate_p4");
  const int n = g.order();
  P4List out;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        for (Vertex d = c + 1; d < n; ++d) {
          if (auto p = induced_p4_on(g, bit(a) | bit(b) | bit(c) | bit(d))) {
            out.push_back(*p);
          }
        }
      }
    }
  }
  return out;
}

bool is_cograph(const Graph& g) {
  require_small(g, "is_cograph");
  return cograph_within(g, full_mask(g.order()));
}

bool is_p4_sparse(const Graph& g) { return is_p4_sparse(g, enumerate_p4(g)); }

bool is_p4_sparse(const Graph& g, const P4List& p4s) {
  require_small(g, "is_p4_sparse");
  // Two distinct P4 vertex sets lie in a common 5-set iff they share 3 vertices.
  for (std::size_t i = 0; i < p4s.size(); ++i) {
    for (std::size_t j = i + 1; j < p4s.size(); ++j) {
      if (std::popcount(p4s[i].mask | p4s[j].mask) <= 5) {
        return false;
      }
    }
  }
  return true;
}

std::uint64_t extension_set(std::uint64_t w, const P4List& p4s) {
  Mask x = 0;
  for (const auto& p : p4s) {
    if (p.mask != w && (p.mask & w) != 0) {
      x |= p.mask & ~w;
    }
  }
  return x;
}

bool is_p4_extendible(const Graph& g) { return is_p4_extendible(g, enumerate_p4(g)); }

bool is_p4_extendible(const Graph& g, const P4List& p4s) {
  require_small(g, "is_p4_extendible");
  return std::all_of(p4s.begin(), p4s.end(),
                     [&](const InducedP4& w) { return std::popcount(extension_set(w.mask, p4s)) <= 1; });
}

bool satisfies_q_t(const Graph& g, int q, int t) { return satisfies_q_t(g, enumerate_p4(g), q, t); }

bool satisfies_q_t(const Graph& g, const P4List& p4s, int q, int t) {
  require_small(g, "satisfies_q_t");
  const int n = g.order();
  if (q > n || q < 0 || static_cast<long long>(p4s.size()) <= t) {
    return true;
  }
  if (t < 0) {
    return false;
  }
  std::vector<int> idx(static_cast<std::size_t>(q));
  std::iota(idx.begin(), idx.end(), 0);
  const auto uq = static_cast<std::size_t>(q);
  while (true) {
    Mask subset = 0;
    for (int i : idx) {
      subset |= bit(i);
    }
    int inside = 0;
    for (const auto& p : p4s) {
      if ((p.mask & ~subset) == 0 && ++inside > t) {
        return false;
      }
    }
    // Next q-combination of 0..n-1 in lexicographic order.
    std::size_t i = uq;
    while (i > 0 && idx[i - 1] == n - q + static_cast<int>(i - 1)) {
      --i;
    }
    if (i == 0) {
      break;
    }
    ++idx[i - 1];
    for (std::size_t j = i; j < uq; ++j) {
      idx[j] = idx[j - 1] + 1;
    }
  }
  return true;
}

bool is_p4_connected(const Graph& g) { return is_p4_connected(g, enumerate_p4(g)); }

bool is_p4_connected(const Graph& g, const P4List& p4s) {
  require_small(g, "is_p4_connected");
  const int n = g.order();
  if (n < 2 || p4s.empty()) {
    return false;
  }
  DisjointSets sets(n);
  Mask covered = 0;
  for (const auto& p : p4s) {
    covered |= p.mask;
    for (std::size_t i = 1; i < 4; ++i) {
      sets.unite(p.path[0], p.path[i]);
    }
  }
  if (covered != full_mask(n)) {
    return false;
  }
  const int root = sets.find(0);
  for (Vertex v = 1; v < n; ++v) {
    if (sets.find(v) != root) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Spiders

std::string_view to_string(SpiderKind kind) { return kind == SpiderKind::thin ? "thin" : "thick"; }

namespace {

VertexSet to_set(int n, const std::vector<Vertex>& vs) {
  VertexSet s(n);
  for (Vertex v : vs) {
    s.insert(v);
  }
  return s;
}

}  // namespace

VertexSet SpiderSpec::leg_set(int n) const { return to_set(n, legs); }
VertexSet SpiderSpec::body_set(int n) const { return to_set(n, body); }
VertexSet SpiderSpec::head_set(int n) const { return to_set(n, head); }

bool is_valid_spider_witness(const Graph& g, const SpiderSpec& spec) {
  const int n = g.order();
  const std::size_t k = spec.legs.size();
  if (k < 2 || spec.body.size() != k || 2 * k + spec.head.size() != static_cast<std::size_t>(n)) {
    return false;
  }
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (const auto* part : {&spec.legs, &spec.body, &spec.head}) {
    for (Vertex v : *part) {
      if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]++ != 0) {
        return false;
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j && g.adjacent(spec.legs[i], spec.legs[j])) {
        return false;
      }
      if (i != j && !g.adjacent(spec.body[i], spec.body[j])) {
        return false;
      }
      const bool want = spec.kind == SpiderKind::thin ? i == j : i != j;
      if (g.adjacent(spec.legs[i], spec.body[j]) != want) {
        return false;
      }
    }
  }
  for (Vertex r : spec.head) {
    for (std::size_t i = 0; i < k; ++i) {
      if (!g.adjacent(r, spec.body[i]) || g.adjacent(r, spec.legs[i])) {
        return false;
      }
    }
  }
  return true;
}

std::optional<SpiderSpec> recognize_spider(const Graph& g) {
  require_small(g, "recognize_spider");
  if (auto thin = thin_witness(g)) {
    return thin;
  }
  // A thick spider's complement is a thin spider with legs and body swapped.
  if (auto flipped = thin_witness(complement(g))) {
    return SpiderSpec{SpiderKind::thick, std::move(flipped->body), std::move(flipped->legs), std::move(flipped->head)};
  }
  return std::nullopt;
}

P4Roles p4_roles(const P4List& p4s) {
  P4Roles roles;
  for (const auto& p : p4s) {
    roles.midpoints |= p.midpoints();
    roles.endpoints |= p.endpoints();
  }
  return roles;
}

ClassificationReport classify(const Graph& g) {
  require_small(g, "classify");
  ClassificationReport r;
  const P4List p4s = enumerate_p4(g);
  r.n = g.order();
  r.m = g.size();
  r.p4_count = p4s.size();
  r.is_cograph = is_cograph(g);
  if (r.is_cograph != p4s.empty()) {
    throw std::logic_error("classify: recursive cograph test disagrees with P4 enumeration");
  }
  r.is_p4_sparse = is_p4_sparse(g, p4s);
  r.is_p4_extendible = is_p4_extendible(g, p4s);
  r.is_p4_reducible = r.is_p4_sparse && r.is_p4_extendible;
  r.is_p4_connected = is_p4_connected(g, p4s);
  r.spider = recognize_spider(g);
  r.spectrum = exact_spectrum(g);
  r.l_integral = r.spectrum.is_integral();
  return r;
}

}  // namespace p4spec
