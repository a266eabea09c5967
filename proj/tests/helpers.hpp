#pragma once

#include <random>

#include "p4spec/graph.hpp"

namespace testutil {

inline p4spec::Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  p4spec::GraphBuilder b(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) {
        b.add_edge(i, j);
      }
    }
  }
  return std::move(b).build();
}

// Random order in [lo, hi] and random density.
inline p4spec::Graph random_graph(int lo, int hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> order(lo, hi);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  const int n = order(rng);
  return random_graph(n, density(rng), rng);
}

}  // namespace testutil
