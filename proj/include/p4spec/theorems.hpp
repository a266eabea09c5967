#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace p4spec {

/// Theorem ids, in report order.
inline constexpr std::string_view kTheoremIds = "abcdefgh";

/// Largest n for exhaustive labeled enumeration and for edge-mask sampling.
inline constexpr int kExhaustiveMaxOrder = 7;
inline constexpr int kSampleMaxOrder = 11;
inline constexpr std::uint64_t kDefaultSampleCount = 1'000'000;

std::string_view theorem_statement(char id);

struct VerifyOptions {
  int n_max = 6;
  std::string theorems{kTheoremIds};
  int shards = 1;
  int shard_id = 0;
  /// Sampling mode: this many uniform edge masks at n = n_max instead of the
  /// exhaustive sweep over n = 1..n_max.
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 1;
  /// Worker threads inside this process; 0 means one per hardware thread.
  int jobs = 1;
};

struct TheoremResult {
  char id = '?';
  std::string statement;
  std::string population;
  std::uint64_t checked = 0;
  /// Graphs for which the premise held.
  std::uint64_t applicable = 0;
  std::uint64_t violations = 0;
  /// graph6 of the first violation in enumeration order.
  std::optional<std::string> counterexample;
  /// Enumeration position of `counterexample`; lower ranks win when merging.
  std::uint64_t counterexample_rank = 0;
  double wall_time_ms = 0;

  bool passed() const { return violations == 0; }
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<TheoremResult> results;
  double wall_time_ms = 0;

  bool sampled() const { return options.sample.has_value(); }
  bool passed() const;
};

/// Throws std::invalid_argument for unknown or repeated theorem ids, a shard
/// id outside [0, shards), exhaustive n_max above kExhaustiveMaxOrder or
/// sampled n_max above kSampleMaxOrder.
void validate(const VerifyOptions& options);

VerifyReport verify_theorems(const VerifyOptions& options);

/// Combines per-shard results theorem by theorem: counts add, wall times add,
/// and the lowest-ranked counterexample is kept. Every part must list the same
/// theorems in the same order.
std::vector<TheoremResult> merge_results(const std::vector<std::vector<TheoremResult>>& parts);

}  // namespace p4spec
