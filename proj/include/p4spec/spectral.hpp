#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "p4spec/graph.hpp"
#include "p4spec/polynomial.hpp"

namespace p4spec {

/// Dense square matrix of big integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

  int dimension() const { return n_; }
  BigInt& operator()(int i, int j) { return entries_[index(i, j)]; }
  const BigInt& operator()(int i, int j) const { return entries_[index(i, j)]; }

  bool is_symmetric() const;
  bool has_zero_row_sums() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j); }

  int n_ = 0;
  std::vector<BigInt> entries_;
};

/// L(G) = D(G) - A(G).
IntMatrix laplacian(const Graph& g);

/// Monic det(xI - M) by Faddeev-LeVerrier. Runs in checked 64-bit arithmetic
/// and reruns with big integers if any intermediate overflows. Every division
/// by the step index is verified exact; a failure throws std::logic_error.
IntPolynomial char_poly(const IntMatrix& m);

/// char_poly(laplacian(g)) without materialising a big-integer matrix.
IntPolynomial laplacian_char_poly(const Graph& g);

struct IntegerRoot {
  long long value;
  int multiplicity;
  friend bool operator==(const IntegerRoot&, const IntegerRoot&) = default;
};

/// Integer eigenvalues (descending by value) plus the factor of the
/// characteristic polynomial that has no integer roots in the searched range.
struct ExactSpectrum {
  std::vector<IntegerRoot> integer_roots;
  IntPolynomial residual;

  bool is_integral() const { return residual.degree() == 0; }
  int integer_root_count() const;
  /// prod (x - value)^multiplicity * residual.
  IntPolynomial reconstruct() const;
  int multiplicity_of(long long value) const;
};

/// Divides out (x - k) to maximal multiplicity for every integer k in [lo, hi].
ExactSpectrum extract_integer_roots(const IntPolynomial& p, long long lo, long long hi);

/// Gershgorin interval [lo, hi] containing every eigenvalue of a symmetric matrix.
std::pair<BigInt, BigInt> gershgorin_bounds(const IntMatrix& m);

/// Integer Laplacian eigenvalues of g. Roots are searched over the Gershgorin
/// interval of L(g), [0, 2 * max degree], which encloses the whole spectrum.
ExactSpectrum exact_spectrum(const Graph& g);

/// True iff every Laplacian eigenvalue of g is an integer.
bool is_l_integral(const Graph& g);

// ---------------------------------------------------------------------------
// Numeric eigenvalues

class EigenNonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiOffDiagonalTolerance = 1e-12;

/// Cyclic Jacobi rotations on a dense symmetric matrix (row-major, n x n).
/// Returns eigenvalues ascending. When `eigenvectors` is non-null it receives
/// the orthonormal eigenvectors as columns (row-major n x n), matching the
/// returned order.
std::vector<double> symmetric_eigenvalues(std::vector<double> matrix, int n, double tol,
                                          std::vector<double>* eigenvectors = nullptr,
                                          int max_sweeps = kJacobiMaxSweeps);

/// All n Laplacian eigenvalues, ascending. Throws std::invalid_argument for
/// tol <= 0 and EigenNonConvergence when the sweep cap is reached.
std::vector<double> numeric_spectrum(const Graph& g, double tol = 1e-9);

std::vector<double> laplacian_as_doubles(const Graph& g);

// ---------------------------------------------------------------------------
// Thin spiders with edgeless heads

/// (numerator + sign * sqrt(radicand)) / 2 with the given multiplicity.
/// Integer eigenvalues have radicand 0 and sign 0.
struct SurdEigenvalue {
  long long numerator;
  long long radicand;
  int sign;
  int multiplicity;

  double value() const;
  bool is_integer() const;
  friend bool operator==(const SurdEigenvalue&, const SurdEigenvalue&) = default;
};

struct ClosedFormSpectrum {
  int k;
  int j;
  std::vector<SurdEigenvalue> eigenvalues;

  int count() const;
  /// Product of the minimal polynomials x^2 - a x + (a^2 - b)/4 of each surd
  /// pair (and linear factors for integers), raised to their multiplicities.
  IntPolynomial characteristic_polynomial() const;
  std::vector<double> values() const;
};

/// Closed-form Laplacian spectrum of the thin spider with k legs and an
/// edgeless head of j vertices (j = 0 for the headless spider). Throws
/// std::invalid_argument for k < 2 or j < 0.
ClosedFormSpectrum thin_spider_closed_form(int k, int j);

/// Quotient of the Laplacian over the equitable partition (body, legs, head).
struct QuotientMatrix {
  std::array<std::array<long long, 3>, 3> entries;

  IntMatrix to_matrix() const;
  std::array<long long, 3> row_sums() const;
};

/// Throws std::invalid_argument unless k >= 2 and j >= 1.
QuotientMatrix quotient_matrix(int k, int j);

// ---------------------------------------------------------------------------
// Spectral identities

/// Compares spectrum(complement(g)) with {0} plus n - mu over the n-1 largest
/// eigenvalues mu of g, element-wise after sorting.
bool check_complement_relation(const Graph& g, double tol);

/// char_poly(L(g u h)) == char_poly(L(g)) * char_poly(L(h)) exactly.
bool check_union_relation(const Graph& g, const Graph& h);

}  // namespace p4spec
