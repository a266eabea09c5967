#include "p4spec/theorems.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "p4spec/constructions.hpp"
#include "p4spec/formats.hpp"
#include "p4spec/p4_structure.hpp"
#include "p4spec/spectral.hpp"

namespace p4spec {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t low_bits(int count) { return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1; }

// ---------------------------------------------------------------------------
// Five-vertex lookup: which of F0..F6 a 10-bit edge mask is isomorphic to,
// and the midpoint mask of its induced P4s.

struct FiveVertexEntry {
  std::optional<FamilyId> family;
  std::uint8_t midpoints = 0;
};

const std::array<FiveVertexEntry, 1024>& five_vertex_table() {
  static const std::array<FiveVertexEntry, 1024> table = [] {
    std::array<FiveVertexEntry, 1024> t{};
    std::vector<std::pair<FamilyId, Graph>> fams;
    for (FamilyId id : kAllFamilies) {
      if (id != FamilyId::P4) {
        fams.emplace_back(id, family(id));
      }
    }
    for (std::uint64_t mask = 0; mask < 1024; ++mask) {
      const Graph g = graph_from_edge_mask(5, mask);
      for (const auto& [id, f] : fams) {
        if (g.size() == f.size() && are_isomorphic(g, f)) {
          t[mask].family = id;
          t[mask].midpoints = static_cast<std::uint8_t>(p4_roles(enumerate_p4(g)).midpoints);
          break;
        }
      }
    }
    return t;
  }();
  return table;
}

std::uint64_t induced_edge_mask(const Graph& g, const std::array<Vertex, 5>& verts) {
  std::uint64_t mask = 0;
  int b = 0;
  for (int j = 1; j < 5; ++j) {
    for (int i = 0; i < j; ++i, ++b) {
      if (g.adjacent(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(j)])) {
        mask |= std::uint64_t{1} << b;
      }
    }
  }
  return mask;
}

bool is_case_iv_kind(FamilyId id) {
  return id == FamilyId::F3 || id == FamilyId::F4 || id == FamilyId::F5 || id == FamilyId::F6;
}

// ---------------------------------------------------------------------------
// Per-graph properties, computed on first use.

class Facts {
 public:
  Facts(int n, std::uint64_t mask, std::uint64_t rank) : g_(graph_from_edge_mask(n, mask)), rank_(rank) {}

  const Graph& graph() const { return g_; }
  int n() const { return g_.order(); }
  std::uint64_t rank() const { return rank_; }

  const P4List& p4s() {
    if (!p4s_) {
      p4s_ = enumerate_p4(g_);
    }
    return *p4s_;
  }
  bool cograph() { return p4s().empty(); }
  bool sparse() { return is_p4_sparse(g_, p4s()); }
  bool extendible() {
    if (!extendible_) {
      extendible_ = is_p4_extendible(g_, p4s());
    }
    return *extendible_;
  }
  bool p4_connected() { return is_p4_connected(g_, p4s()); }
  bool l_integral() {
    if (!lint_) {
      lint_ = is_l_integral(g_);
    }
    return *lint_;
  }
  const std::optional<SpiderSpec>& spider() {
    if (!spider_checked_) {
      spider_ = recognize_spider(g_);
      spider_checked_ = true;
    }
    return spider_;
  }

 private:
  Graph g_;
  std::uint64_t rank_;
  std::optional<P4List> p4s_;
  std::optional<bool> extendible_;
  std::optional<bool> lint_;
  std::optional<SpiderSpec> spider_;
  bool spider_checked_ = false;
};

bool in_exceptional_family(Facts& f) {
  if (f.n() == 4) {
    return f.p4s().size() == 1 && f.graph().size() == 3;
  }
  if (f.n() == 5) {
    return five_vertex_table()[edge_mask_of(f.graph())].family.has_value();
  }
  return false;
}

// Every vertex outside d sees exactly `mids` inside d.
bool outside_sees_midpoints(const Graph& g, std::uint64_t d, std::uint64_t mids) {
  for (Vertex x = 0; x < g.order(); ++x) {
    if (!((d >> x) & 1U) && (g.neighbor_mask(x) & d) != mids) {
      return false;
    }
  }
  return true;
}

bool has_case_iv_witness(Facts& f) {
  const Graph& g = f.graph();
  const int n = f.n();
  if (n > 4) {
    for (const auto& p : f.p4s()) {
      if (outside_sees_midpoints(g, p.mask, p.midpoints())) {
        return true;
      }
    }
  }
  if (n > 5) {
    const auto& table = five_vertex_table();
    std::array<Vertex, 5> v{0, 1, 2, 3, 4};
    while (true) {
      const auto& entry = table[induced_edge_mask(g, v)];
      if (entry.family && is_case_iv_kind(*entry.family)) {
        std::uint64_t d = 0;
        std::uint64_t mids = 0;
        for (std::size_t i = 0; i < 5; ++i) {
          d |= std::uint64_t{1} << v[i];
          if ((entry.midpoints >> i) & 1U) {
            mids |= std::uint64_t{1} << v[i];
          }
        }
        if (outside_sees_midpoints(g, d, mids)) {
          return true;
        }
      }
      int i = 4;
      while (i >= 0 && v[static_cast<std::size_t>(i)] == n - 5 + i) {
        --i;
      }
      if (i < 0) {
        break;
      }
      ++v[static_cast<std::size_t>(i)];
      for (int r = i + 1; r < 5; ++r) {
        v[static_cast<std::size_t>(r)] = v[static_cast<std::size_t>(r - 1)] + 1;
      }
    }
  }
  return false;
}

int trichotomy_cases(Facts& f) {
  const Graph& g = f.graph();
  return static_cast<int>(!is_connected(g)) + static_cast<int>(!is_connected(complement(g))) +
         static_cast<int>(in_exceptional_family(f)) + static_cast<int>(has_case_iv_witness(f));
}

// nullopt: premise false. Otherwise whether the conclusion holds.
using Check = std::optional<bool> (*)(Facts&);

std::optional<bool> check_a(Facts& f) {
  if (!f.cograph()) {
    return std::nullopt;
  }
  return f.l_integral();
}

std::optional<bool> check_b(Facts& f) {
  if (f.cograph() || !f.sparse()) {
    return std::nullopt;
  }
  return !f.l_integral();
}

std::optional<bool> check_c(Facts& f) {
  if (f.cograph() || !f.extendible()) {
    return std::nullopt;
  }
  return !f.l_integral();
}

std::optional<bool> check_d(Facts& f) {
  if (!f.spider()) {
    return std::nullopt;
  }
  return !f.l_integral();
}

std::optional<bool> check_e(Facts& f) {
  if (f.n() < 2 || !f.extendible()) {
    return std::nullopt;
  }
  return trichotomy_cases(f) == 1;
}

std::optional<bool> check_f(Facts& f) {
  if (f.n() < 7 || !f.p4_connected() || !satisfies_q_t(f.graph(), f.p4s(), 7, 3)) {
    return std::nullopt;
  }
  const auto& spider = f.spider();
  return spider && spider->headless() && !f.l_integral();
}

std::optional<bool> check_g(Facts& f) { return f.l_integral() == is_l_integral(complement(f.graph())); }

// One graph in sixteen, chosen by hashing its enumeration rank, is paired with
// a partner of order 1..4 whose edge mask comes from the same hash.
std::optional<bool> check_h(Facts& f) {
  const std::uint64_t h = splitmix64(f.rank() ^ 0x5bd1e9955bd1e995ULL);
  if ((h & 15U) != 0) {
    return std::nullopt;
  }
  const int order = 1 + static_cast<int>((h >> 4) & 3U);
  const Graph partner = graph_from_edge_mask(order, (h >> 8) & low_bits(pair_count(order)));
  return check_union_relation(f.graph(), partner);
}

Check check_for(char id) {
  switch (id) {
    case 'a': return check_a;
    case 'b': return check_b;
    case 'c': return check_c;
    case 'd': return check_d;
    case 'e': return check_e;
    case 'f': return check_f;
    case 'g': return check_g;
    case 'h': return check_h;
  }
  throw std::invalid_argument(std::string("unknown theorem id '") + id + "'");
}

// ---------------------------------------------------------------------------
// Work units: a mask (or sample index) interval at one order.

struct Unit {
  int n;
  std::uint64_t first;
  std::uint64_t last;
};

std::uint64_t split_point(std::uint64_t total, int part, int parts) {
  // floor(total * part / parts) without overflowing the product.
  const auto p = static_cast<std::uint64_t>(part);
  const auto q = static_cast<std::uint64_t>(parts);
  return total / q * p + total % q * p / q;
}

std::vector<Unit> shard_units(const VerifyOptions& o) {
  std::vector<Unit> units;
  auto add = [&](int n, std::uint64_t total) {
    units.push_back({n, split_point(total, o.shard_id, o.shards), split_point(total, o.shard_id + 1, o.shards)});
  };
  if (o.sample) {
    add(o.n_max, *o.sample);
  } else {
    for (int n = 1; n <= o.n_max; ++n) {
      add(n, labeled_graph_count(n));
    }
  }
  return units;
}

void run_unit(const Unit& u, bool sampled, std::uint64_t seed, Check check, TheoremResult& r) {
  const std::uint64_t keep = low_bits(pair_count(u.n));
  const std::uint64_t base = splitmix64(seed);
  for (std::uint64_t i = u.first; i < u.last; ++i) {
    const std::uint64_t mask = sampled ? splitmix64(base + i) & keep : i;
    const std::uint64_t rank = sampled ? i : (static_cast<std::uint64_t>(u.n) << 56) | i;
    Facts facts(u.n, mask, rank);
    ++r.checked;
    const auto outcome = check(facts);
    if (!outcome) {
      continue;
    }
    ++r.applicable;
    if (!*outcome) {
      if (r.violations++ == 0) {
        r.counterexample = to_graph6(facts.graph());
        r.counterexample_rank = rank;
      }
    }
  }
}

std::string population_of(const VerifyOptions& o, char id) {
  std::string base = o.sample ? std::to_string(*o.sample) + " uniform labeled graphs with n = " +
                                    std::to_string(o.n_max) + " (seed " + std::to_string(o.seed) + ")"
                              : "all labeled graphs with 1 <= n <= " + std::to_string(o.n_max);
  if (id == 'h') {
    return "hashed 1/16 subsample of " + base + ", each paired with a labeled graph of order 1..4";
  }
  return base;
}

TheoremResult run_theorem(const VerifyOptions& o, char id, const std::vector<Unit>& units) {
  const Check check = check_for(id);
  const int jobs = o.jobs > 0 ? o.jobs : std::max(1U, std::thread::hardware_concurrency());
  const auto start = Clock::now();

  std::vector<std::vector<TheoremResult>> parts(static_cast<std::size_t>(jobs));
  auto work = [&](int t) {
    TheoremResult r;
    r.id = id;
    for (const Unit& u : units) {
      const std::uint64_t len = u.last - u.first;
      const Unit piece{u.n, u.first + split_point(len, t, jobs), u.first + split_point(len, t + 1, jobs)};
      run_unit(piece, o.sample.has_value(), o.seed, check, r);
    }
    parts[static_cast<std::size_t>(t)] = {std::move(r)};
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) {
      threads.emplace_back(work, t);
    }
    for (auto& th : threads) {
      th.join();
    }
  }
  TheoremResult merged = merge_results(parts).front();
  merged.statement = std::string(theorem_statement(id));
  merged.population = population_of(o, id);
  merged.wall_time_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return merged;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string_view theorem_statement(char id) {
  switch (id) {
    case 'a': return "cograph => L-integral";
    case 'b': return "P4-sparse and not a cograph => not L-integral";
    case 'c': return "P4-extendible and not a cograph => not L-integral";
    case 'd': return "spider => not L-integral";
    case 'e':
      return "P4-extendible with n >= 2 => exactly one of: G disconnected; complement disconnected; "
             "G isomorphic to P4 or F0..F6; a proper D inducing P4, F3, F4, F5 or F6 whose outside "
             "vertices are adjacent to exactly the midpoints of D";
    case 'f': return "n >= 7, (7,3) and p4-connected => headless spider and not L-integral";
    case 'g': return "L-integral(G) <=> L-integral(complement(G))";
    case 'h': return "charpoly L(G u H) = charpoly L(G) * charpoly L(H)";
  }
  throw std::invalid_argument(std::string("unknown theorem id '") + id + "'");
}

bool VerifyReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const TheoremResult& r) { return r.passed(); });
}

void validate(const VerifyOptions& o) {
  if (o.theorems.empty()) {
    throw std::invalid_argument("no theorems selected");
  }
  for (std::size_t i = 0; i < o.theorems.size(); ++i) {
    const char id = o.theorems[i];
    if (kTheoremIds.find(id) == std::string_view::npos) {
      throw std::invalid_argument(std::string("unknown theorem id '") + id + "' (expected a..h)");
    }
    if (o.theorems.find(id, i + 1) != std::string::npos) {
      throw std::invalid_argument(std::string("theorem '") + id + "' selected twice");
    }
  }
  if (o.shards < 1 || o.shard_id < 0 || o.shard_id >= o.shards) {
    throw std::invalid_argument("shard id " + std::to_string(o.shard_id) + " outside [0, " +
                                std::to_string(o.shards) + ")");
  }
  if (o.jobs < 0) {
    throw std::invalid_argument("jobs must be non-negative");
  }
  if (o.n_max < 1) {
    throw std::invalid_argument("n_max must be at least 1");
  }
  if (o.sample) {
    if (o.n_max > kSampleMaxOrder) {
      throw std::invalid_argument("sampling supports n_max <= " + std::to_string(kSampleMaxOrder));
    }
  } else if (o.n_max > kExhaustiveMaxOrder) {
    throw std::invalid_argument("exhaustive enumeration supports n_max <= " + std::to_string(kExhaustiveMaxOrder) +
                                "; use sampling above that");
  }
}

VerifyReport verify_theorems(const VerifyOptions& options) {
  validate(options);
  const auto start = Clock::now();
  VerifyReport report;
  report.options = options;
  const auto units = shard_units(options);
  for (char id : kTheoremIds) {
    if (options.theorems.find(id) != std::string::npos) {
      report.results.push_back(run_theorem(options, id, units));
    }
  }
  report.wall_time_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

std::vector<TheoremResult> merge_results(const std::vector<std::vector<TheoremResult>>& parts) {
  if (parts.empty()) {
    return {};
  }
  std::vector<TheoremResult> out = parts.front();
  for (std::size_t p = 1; p < parts.size(); ++p) {
    if (parts[p].size() != out.size()) {
      throw std::invalid_argument("merge_results: parts list different theorems");
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      const TheoremResult& r = parts[p][i];
      TheoremResult& acc = out[i];
      if (r.id != acc.id) {
        throw std::invalid_argument("merge_results: parts list different theorems");
      }
      acc.checked += r.checked;
      acc.applicable += r.applicable;
      acc.violations += r.violations;
      acc.wall_time_ms += r.wall_time_ms;
      if (r.counterexample && (!acc.counterexample || r.counterexample_rank < acc.counterexample_rank)) {
        acc.counterexample = r.counterexample;
        acc.counterexample_rank = r.counterexample_rank;
      }
    }
  }
  return out;
}

}  // namespace p4spec
