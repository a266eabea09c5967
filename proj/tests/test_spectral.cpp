#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "p4spec/constructions.hpp"
#include "p4spec/spectral.hpp"

using namespace p4spec;

namespace {

std::vector<IntegerRoot> roots(std::initializer_list<std::pair<long long, int>> list) {
  std::vector<IntegerRoot> out;
  for (auto [v, m] : list) {
    out.push_back({v, m});
  }
  return out;
}

IntPolynomial quad(long long b, long long c) { return IntPolynomial{c, -b, 1}; }

}  // namespace

TEST_CASE("laplacian matrix") {
  const IntMatrix k2 = laplacian(complete_graph(2));
  CHECK(k2(0, 0) == 1);
  CHECK(k2(0, 1) == -1);
  CHECK(k2(1, 0) == -1);
  CHECK(k2(1, 1) == 1);
  const IntMatrix e3 = laplacian(Graph(3));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(e3(i, j) == 0);
    }
  }
  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    const IntMatrix l = laplacian(testutil::random_graph(1, 10, rng));
    CHECK(l.is_symmetric());
    CHECK(l.has_zero_row_sums());
  }
}

TEST_CASE("laplacian of a thin spider has the block form") {
  for (int k = 2; k <= 5; ++k) {
    for (int j = 0; j <= 3; ++j) {
      const IntMatrix l = laplacian(thin_spider(k, Graph(j)));
      for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
          // body x body: (k+j+1)I - J
          CHECK(l(a, b) == (a == b ? k + j : -1));
          // body x leg: -I, leg x leg: I
          CHECK(l(a, k + b) == (a == b ? -1 : 0));
          CHECK(l(k + a, k + b) == (a == b ? 1 : 0));
        }
        for (int r = 0; r < j; ++r) {
          CHECK(l(a, 2 * k + r) == -1);
          CHECK(l(k + a, 2 * k + r) == 0);
        }
      }
      for (int r = 0; r < j; ++r) {
        for (int s = 0; s < j; ++s) {
          CHECK(l(2 * k + r, 2 * k + s) == (r == s ? k : 0));
        }
      }
    }
  }
}

TEST_CASE("characteristic polynomial") {
  CHECK(laplacian_char_poly(path_graph(3)) == IntPolynomial{0, 3, -4, 1});
  CHECK(laplacian_char_poly(path_graph(4)) == IntPolynomial{0, -4, 10, -6, 1});
  CHECK(laplacian_char_poly(Graph(1)) == IntPolynomial::x());
  CHECK(laplacian_char_poly(Graph{}) == IntPolynomial::constant(1));
  CHECK(char_poly(laplacian(cycle_graph(5))) == laplacian_char_poly(cycle_graph(5)));

  // K30: x (x - 30)^29, far outside 64-bit range in the middle coefficients
  const IntPolynomial k30 = laplacian_char_poly(complete_graph(30));
  CHECK(k30 == IntPolynomial::x() * IntPolynomial::linear_factor(30).pow(29));

  // a matrix that is not a Laplacian
  IntMatrix m(2);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 3;
  m(1, 1) = 4;
  CHECK(char_poly(m) == IntPolynomial{-2, -5, 1});
}

TEST_CASE("characteristic polynomial matches the Bareiss-interpolation oracle") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 150; ++t) {
    const Graph g = testutil::random_graph(1, 12, rng);
    CHECK(laplacian_char_poly(g) == oracle::interpolated_char_poly(oracle::laplacian_rows(g)));
  }
  // larger, denser graphs push Faddeev-LeVerrier into big integers
  for (int t = 0; t < 5; ++t) {
    const Graph g = testutil::random_graph(24, 0.7, rng);
    CHECK(laplacian_char_poly(g) == oracle::interpolated_char_poly(oracle::laplacian_rows(g)));
  }
}

TEST_CASE("integer root extraction") {
  const ExactSpectrum p3 = extract_integer_roots(IntPolynomial{0, 3, -4, 1}, 0, 3);
  CHECK(p3.integer_roots == roots({{3, 1}, {1, 1}, {0, 1}}));
  CHECK(p3.residual == IntPolynomial::constant(1));
  CHECK(p3.is_integral());

  const ExactSpectrum p4 = extract_integer_roots(IntPolynomial{0, -4, 10, -6, 1}, 0, 4);
  CHECK(p4.integer_roots == roots({{2, 1}, {0, 1}}));
  CHECK(p4.residual == IntPolynomial{2, -4, 1});
  CHECK_FALSE(p4.is_integral());

  const ExactSpectrum none = extract_integer_roots(IntPolynomial{2, -4, 1}, 0, 4);
  CHECK(none.integer_roots.empty());
  CHECK(none.residual == IntPolynomial{2, -4, 1});
  CHECK(none.reconstruct() == IntPolynomial{2, -4, 1});
}

TEST_CASE("exact spectrum golden values") {
  const ExactSpectrum c6 = exact_spectrum(cycle_graph(6));
  CHECK(c6.integer_roots == roots({{4, 1}, {3, 2}, {1, 2}, {0, 1}}));
  CHECK(c6.residual.degree() == 0);

  const ExactSpectrum k4 = exact_spectrum(complete_graph(4));
  CHECK(k4.integer_roots == roots({{4, 3}, {0, 1}}));
  CHECK(k4.residual == IntPolynomial::constant(1));

  const ExactSpectrum p4 = exact_spectrum(thin_spider(2));
  CHECK(p4.integer_roots == roots({{2, 1}, {0, 1}}));
  CHECK(p4.residual == IntPolynomial{2, -4, 1});
  CHECK(p4.multiplicity_of(2) == 1);
  CHECK(p4.multiplicity_of(3) == 0);
  CHECK(p4.integer_root_count() == 2);
}

TEST_CASE("gershgorin interval encloses the spectrum") {
  const auto [lo, hi] = gershgorin_bounds(laplacian(complete_graph(4)));
  CHECK(lo == 0);
  CHECK(hi == 6);
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    const Graph g = testutil::random_graph(2, 10, rng);
    const auto [a, b] = gershgorin_bounds(laplacian(g));
    const auto ev = numeric_spectrum(g);
    CHECK(ev.front() >= a.get_d() - 1e-9);
    CHECK(ev.back() <= b.get_d() + 1e-9);
  }
}

TEST_CASE("integrality") {
  CHECK(is_l_integral(cycle_graph(6)));
  CHECK(is_l_integral(Graph(5)));
  CHECK(is_l_integral(Graph(1)));
  CHECK(is_l_integral(Graph{}));
  CHECK_FALSE(is_l_integral(path_graph(4)));
  for (int k = 2; k <= 6; ++k) {
    for (const auto& h : head_catalog()) {
      CHECK_FALSE(is_l_integral(thin_spider(k, h.graph)));
    }
  }
  // agrees with the residual degree for random graphs
  std::mt19937_64 rng(6);
  for (int t = 0; t < 100; ++t) {
    const Graph g = testutil::random_graph(1, 9, rng);
    CHECK(is_l_integral(g) == exact_spectrum(g).is_integral());
  }
}

TEST_CASE("numeric spectrum") {
  const auto p4 = numeric_spectrum(path_graph(4));
  REQUIRE(p4.size() == 4);
  const double expect[] = {0.0, 2 - std::sqrt(2.0), 2.0, 2 + std::sqrt(2.0)};
  for (int i = 0; i < 4; ++i) {
    CHECK(p4[static_cast<std::size_t>(i)] == doctest::Approx(expect[i]).epsilon(1e-12));
  }
  const auto k3 = numeric_spectrum(complete_graph(3));
  CHECK(k3[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(k3[1] == doctest::Approx(3.0));
  CHECK(k3[2] == doctest::Approx(3.0));
  const auto c6 = numeric_spectrum(cycle_graph(6));
  const double c6_expect[] = {0, 1, 1, 3, 3, 4};
  for (int i = 0; i < 6; ++i) {
    CHECK(std::abs(c6[static_cast<std::size_t>(i)] - c6_expect[i]) < 1e-9);
  }
  CHECK_THROWS_AS(numeric_spectrum(path_graph(3), 0.0), std::invalid_argument);
}

TEST_CASE("jacobi eigenvectors satisfy the eigen-equation") {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 20; ++t) {
    const Graph g = testutil::random_graph(2, 12, rng);
    const int n = g.order();
    const auto m = laplacian_as_doubles(g);
    std::vector<double> vecs;
    const auto vals = symmetric_eigenvalues(m, n, 1e-12, &vecs);
    CHECK(std::is_sorted(vals.begin(), vals.end()));
    for (int c = 0; c < n; ++c) {
      std::vector<double> v(static_cast<std::size_t>(n));
      for (int r = 0; r < n; ++r) {
        v[static_cast<std::size_t>(r)] = vecs[static_cast<std::size_t>(r * n + c)];
      }
      const auto lv = oracle::mat_vec(m, v);
      double err = 0;
      for (int r = 0; r < n; ++r) {
        err = std::max(err, std::abs(lv[static_cast<std::size_t>(r)] - vals[static_cast<std::size_t>(c)] * v[static_cast<std::size_t>(r)]));
      }
      CHECK(err < 1e-9);
    }
    // trace is preserved
    double trace = 0;
    for (int i = 0; i < n; ++i) {
      trace += m[static_cast<std::size_t>(i * n + i)];
    }
    CHECK(std::accumulate(vals.begin(), vals.end(), 0.0) == doctest::Approx(trace));
  }
}

TEST_CASE("jacobi gives up after the sweep cap") {
  const auto m = laplacian_as_doubles(cycle_graph(7));
  CHECK_THROWS_AS(symmetric_eigenvalues(m, 7, 1e-12, nullptr, 1), EigenNonConvergence);
}

TEST_CASE("closed-form thin spider spectra") {
  const auto headless2 = thin_spider_closed_form(2, 0);
  CHECK(headless2.eigenvalues == std::vector<SurdEigenvalue>{{4, 8, 1, 1}, {4, 8, -1, 1}, {0, 0, 0, 1}, {4, 0, 0, 1}});
  CHECK(headless2.count() == 4);

  const auto k2j1 = thin_spider_closed_form(2, 1);
  CHECK(k2j1.eigenvalues ==
        std::vector<SurdEigenvalue>{{5, 13, 1, 1}, {5, 13, -1, 1}, {5, 5, 1, 1}, {5, 5, -1, 1}, {0, 0, 0, 1}});

  const auto k3j2 = thin_spider_closed_form(3, 2);
  CHECK(k3j2.eigenvalues == std::vector<SurdEigenvalue>{{7, 29, 1, 2},
                                                          {7, 29, -1, 2},
                                                          {6, 0, 0, 1},
                                                          {7, 17, 1, 1},
                                                          {7, 17, -1, 1},
                                                          {0, 0, 0, 1}});
  CHECK(k3j2.count() == 8);

  CHECK_THROWS_AS(thin_spider_closed_form(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(thin_spider_closed_form(3, -1), std::invalid_argument);

  for (int k = 2; k <= 6; ++k) {
    for (int j = 0; j <= 4; ++j) {
      const auto cf = thin_spider_closed_form(k, j);
      const Graph g = thin_spider(k, Graph(j));
      CHECK(cf.count() == g.order());
      CHECK(cf.characteristic_polynomial() == laplacian_char_poly(g));
      auto values = cf.values();
      std::sort(values.begin(), values.end());
      const auto numeric = numeric_spectrum(g);
      for (std::size_t i = 0; i < values.size(); ++i) {
        CHECK(std::abs(values[i] - numeric[i]) < 1e-8);
      }
    }
  }
}

TEST_CASE("quotient matrix") {
  const QuotientMatrix q43 = quotient_matrix(4, 3);
  CHECK(q43.entries == std::array<std::array<long long, 3>, 3>{{{4, -1, -3}, {-1, 1, 0}, {-4, 0, 4}}});
  CHECK(quotient_matrix(2, 1).entries == std::array<std::array<long long, 3>, 3>{{{2, -1, -1}, {-1, 1, 0}, {-2, 0, 2}}});
  CHECK_THROWS_AS(quotient_matrix(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(quotient_matrix(2, 0), std::invalid_argument);
  for (int k = 2; k <= 5; ++k) {
    for (int j = 1; j <= 4; ++j) {
      const QuotientMatrix q = quotient_matrix(k, j);
      CHECK(q.row_sums() == std::array<long long, 3>{0, 0, 0});
      const IntPolynomial qp = char_poly(q.to_matrix());
      // x (x^2 - (k+j+2) x + (2k+j))
      CHECK(qp == IntPolynomial::x() * quad(k + j + 2, 2 * k + j));
      CHECK(divides(qp, laplacian_char_poly(thin_spider(k, Graph(j)))));
    }
  }
}

TEST_CASE("complement relation") {
  CHECK(check_complement_relation(complete_graph(2), 1e-9));
  CHECK(check_complement_relation(path_graph(4), 1e-9));
  CHECK_THROWS_AS(check_complement_relation(Graph{}, 1e-9), std::invalid_argument);
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    CHECK(check_complement_relation(testutil::random_graph(1, 10, rng), 1e-8));
  }
}

TEST_CASE("union relation") {
  CHECK(check_union_relation(Graph(1), Graph(1)));
  CHECK(laplacian_char_poly(disjoint_union(Graph(1), Graph(1))) == IntPolynomial{0, 0, 1});
  CHECK(check_union_relation(complete_graph(2), complete_graph(3)));
  CHECK(check_union_relation(path_graph(4), cycle_graph(6)));
  CHECK(laplacian_char_poly(disjoint_union(complete_graph(2), complete_graph(3))) ==
        IntPolynomial{0, -2, 1} * (IntPolynomial::x() * IntPolynomial::linear_factor(3).pow(2)));
}
