#include "p4spec/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <optional>

namespace p4spec {

namespace {

// Arithmetic policies for Faddeev-LeVerrier. Each operation reports failure
// (overflow, inexact division) by returning false.
struct CheckedInt64 {
  using value_type = std::int64_t;

  static bool mul_add(value_type& acc, value_type a, value_type b) {
    value_type prod = 0;
    if (__builtin_mul_overflow(a, b, &prod)) {
      return false;
    }
    return !__builtin_add_overflow(acc, prod, &acc);
  }
  static bool add(value_type& acc, value_type b) { return !__builtin_add_overflow(acc, b, &acc); }
  static bool negate_div(value_type& v, value_type d) {
    if (v % d != 0 || v == INT64_MIN) {
      return false;
    }
    v = -(v / d);
    return true;
  }
  static BigInt to_big(value_type v) { return BigInt(static_cast<long>(v)); }
};

struct BigArith {
  using value_type = BigInt;

  static bool mul_add(value_type& acc, const value_type& a, const value_type& b) {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return true;
  }
  static bool add(value_type& acc, const value_type& b) {
    acc += b;
    return true;
  }
  static bool negate_div(value_type& v, long d) {
    if (!mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(d))) {
      throw std::logic_error("Faddeev-LeVerrier: inexact division by step index");
    }
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(d));
    v = -v;
    return true;
  }
  static BigInt to_big(const value_type& v) { return v; }
};

// Coefficients c[0..n] of det(xI - A), c[n] = 1. Returns nullopt when the
// policy reports overflow.
template <class Arith>
std::optional<std::vector<typename Arith::value_type>> faddeev_leverrier(
    int n, const std::vector<typename Arith::value_type>& a) {
  using T = typename Arith::value_type;
  const auto un = static_cast<std::size_t>(n);
  std::vector<T> coeffs(un + 1, T(0));
  coeffs[un] = T(1);
  if (n == 0) {
    return coeffs;
  }
  std::vector<T> m(un * un, T(0));
  for (std::size_t i = 0; i < un; ++i) {
    m[i * un + i] = T(1);
  }
  std::vector<T> am(un * un, T(0));
  for (int k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < un; ++i) {
      for (std::size_t j = 0; j < un; ++j) {
        T acc(0);
        for (std::size_t l = 0; l < un; ++l) {
          const T& x = a[i * un + l];
          if (x == 0) {
            continue;
          }
          if (!Arith::mul_add(acc, x, m[l * un + j])) {
            return std::nullopt;
          }
        }
        am[i * un + j] = acc;
      }
    }
    T trace(0);
    for (std::size_t i = 0; i < un; ++i) {
      if (!Arith::add(trace, am[i * un + i])) {
        return std::nullopt;
      }
    }
    if (!Arith::negate_div(trace, k)) {
      // Inexact in 64-bit means an overflow upstream; rerun in big integers.
      return std::nullopt;
    }
    const auto ck = un - static_cast<std::size_t>(k);
    coeffs[ck] = trace;
    if (k == n) {
      break;
    }
    std::swap(m, am);
    for (std::size_t i = 0; i < un; ++i) {
      if (!Arith::add(m[i * un + i], coeffs[ck])) {
        return std::nullopt;
      }
    }
  }
  return coeffs;
}

template <class Arith>
IntPolynomial to_polynomial(const std::vector<typename Arith::value_type>& coeffs) {
  std::vector<BigInt> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    out.push_back(Arith::to_big(c));
  }
  return IntPolynomial(std::move(out));
}

std::vector<std::int64_t> laplacian_int64(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<std::int64_t> out(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        out[i * n + j] = g.degree(static_cast<Vertex>(i));
      } else if (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))) {
        out[i * n + j] = -1;
      }
    }
  }
  return out;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    best = std::max(best, g.degree(v));
  }
  return best;
}

// Horner evaluation with overflow detection.
bool eval_int64(const std::vector<std::int64_t>& c, std::int64_t x, std::int64_t& out) {
  std::int64_t acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    if (__builtin_mul_overflow(acc, x, &acc) || __builtin_add_overflow(acc, *it, &acc)) {
      return false;
    }
  }
  out = acc;
  return true;
}

// Divides out all integer roots in [0, hi]; returns the residual degree, or
// nullopt on overflow.
std::optional<int> residual_degree_int64(std::vector<std::int64_t> c, std::int64_t hi) {
  for (std::int64_t k = 0; k <= hi && c.size() > 1; ++k) {
    while (c.size() > 1) {
      std::int64_t value = 0;
      if (!eval_int64(c, k, value)) {
        return std::nullopt;
      }
      if (value != 0) {
        break;
      }
      std::vector<std::int64_t> q(c.size() - 1);
      std::int64_t carry = c.back();
      for (std::size_t i = c.size() - 1; i-- > 0;) {
        q[i] = carry;
        if (__builtin_mul_overflow(carry, k, &carry) || __builtin_add_overflow(carry, c[i], &carry)) {
          return std::nullopt;
        }
      }
      c = std::move(q);
    }
  }
  return static_cast<int>(c.size()) - 1;
}

}  // namespace

// ---------------------------------------------------------------------------

bool IntMatrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) {
        return false;
      }
    }
  }
  return true;
}

bool IntMatrix::has_zero_row_sums() const {
  for (int i = 0; i < n_; ++i) {
    BigInt s = 0;
    for (int j = 0; j < n_; ++j) {
      s += (*this)(i, j);
    }
    if (s != 0) {
      return false;
    }
  }
  return true;
}

IntMatrix laplacian(const Graph& g) {
  const int n = g.order();
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = g.degree(i);
    for (int j = 0; j < n; ++j) {
      if (i != j && g.adjacent(i, j)) {
        m(i, j) = -1;
      }
    }
  }
  return m;
}

IntPolynomial char_poly(const IntMatrix& m) {
  const int n = m.dimension();
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::int64_t> small(un * un, 0);
  bool fits = true;
  for (int i = 0; i < n && fits; ++i) {
    for (int j = 0; j < n && fits; ++j) {
      const BigInt& e = m(i, j);
      if (!e.fits_slong_p()) {
        fits = false;
      } else {
        small[static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j)] = e.get_si();
      }
    }
  }
  if (fits) {
    if (auto c = faddeev_leverrier<CheckedInt64>(n, small)) {
      return to_polynomial<CheckedInt64>(*c);
    }
  }
  std::vector<BigInt> big(un * un);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      big[static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j)] = m(i, j);
    }
  }
  auto c = faddeev_leverrier<BigArith>(n, big);
  return to_polynomial<BigArith>(*c);
}

IntPolynomial laplacian_char_poly(const Graph& g) {
  if (auto c = faddeev_leverrier<CheckedInt64>(g.order(), laplacian_int64(g))) {
    return to_polynomial<CheckedInt64>(*c);
  }
  return char_poly(laplacian(g));
}

// ---------------------------------------------------------------------------

int ExactSpectrum::integer_root_count() const {
  int total = 0;
  for (const auto& r : integer_roots) {
    total += r.multiplicity;
  }
  return total;
}

IntPolynomial ExactSpectrum::reconstruct() const {
  IntPolynomial p = residual;
  for (const auto& r : integer_roots) {
    p *= IntPolynomial::linear_factor(BigInt(static_cast<long>(r.value))).pow(static_cast<unsigned>(r.multiplicity));
  }
  return p;
}

int ExactSpectrum::multiplicity_of(long long value) const {
  for (const auto& r : integer_roots) {
    if (r.value == value) {
      return r.multiplicity;
    }
  }
  return 0;
}

ExactSpectrum extract_integer_roots(const IntPolynomial& p, long long lo, long long hi) {
  ExactSpectrum out;
  IntPolynomial rest = p;
  for (long long k = lo; k <= hi && rest.degree() >= 1; ++k) {
    const BigInt root(static_cast<long>(k));
    int mult = 0;
    while (rest.degree() >= 1) {
      auto [q, r] = synthetic_division(rest, root);
      if (r != 0) {
        break;
      }
      rest = std::move(q);
      ++mult;
    }
    if (mult > 0) {
      out.integer_roots.push_back({k, mult});
    }
  }
  std::sort(out.integer_roots.begin(), out.integer_roots.end(),
            [](const IntegerRoot& a, const IntegerRoot& b) { return a.value > b.value; });
  out.residual = std::move(rest);
  return out;
}

std::pair<BigInt, BigInt> gershgorin_bounds(const IntMatrix& m) {
  const int n = m.dimension();
  if (n == 0) {
    return {BigInt(0), BigInt(0)};
  }
  BigInt lo;
  BigInt hi;
  for (int i = 0; i < n; ++i) {
    BigInt radius = 0;
    for (int j = 0; j < n; ++j) {
      if (j != i) {
        radius += abs(m(i, j));
      }
    }
    BigInt row_lo = m(i, i) - radius;
    BigInt row_hi = m(i, i) + radius;
    if (i == 0 || row_lo < lo) {
      lo = row_lo;
    }
    if (i == 0 || row_hi > hi) {
      hi = row_hi;
    }
  }
  return {lo, hi};
}

ExactSpectrum exact_spectrum(const Graph& g) {
  const IntMatrix l = laplacian(g);
  const auto [lo, hi] = gershgorin_bounds(l);
  if (lo < 0) {
    throw std::logic_error("exact_spectrum: Laplacian Gershgorin interval extends below zero");
  }
  return extract_integer_roots(char_poly(l), 0, hi.get_si());
}

bool is_l_integral(const Graph& g) {
  if (g.order() <= 1) {
    return true;
  }
  const auto lap = laplacian_int64(g);
  const std::int64_t hi = 2 * static_cast<std::int64_t>(max_degree(g));
  if (auto c = faddeev_leverrier<CheckedInt64>(g.order(), lap)) {
    if (auto deg = residual_degree_int64(*c, hi)) {
      return *deg == 0;
    }
  }
  return exact_spectrum(g).is_integral();
}

// ---------------------------------------------------------------------------
// Jacobi eigenvalue iteration

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n, double tol,
                                          std::vector<double>* eigenvectors, int max_sweeps) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("symmetric_eigenvalues: tolerance must be positive");
  }
  const auto un = static_cast<std::size_t>(n);
  if (a.size() != un * un) {
    throw std::invalid_argument("symmetric_eigenvalues: matrix size mismatch");
  }
  std::vector<double> v;
  if (eigenvectors != nullptr) {
    v.assign(un * un, 0.0);
    for (std::size_t i = 0; i < un; ++i) {
      v[i * un + i] = 1.0;
    }
  }
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * un + j]; };

  double frob = 0.0;
  for (double x : a) {
    frob += x * x;
  }
  frob = std::sqrt(frob);
  const double threshold =
      std::max(std::min(tol, kJacobiOffDiagonalTolerance), 8.0 * std::numeric_limits<double>::epsilon() * frob);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < un; ++i) {
      for (std::size_t j = i + 1; j < un; ++j) {
        s += 2.0 * at(i, j) * at(i, j);
      }
    }
    return std::sqrt(s);
  };

  int sweep = 0;
  for (; off_norm() >= threshold; ++sweep) {
    if (sweep >= max_sweeps) {
      throw EigenNonConvergence("Jacobi iteration did not converge within " + std::to_string(max_sweeps) +
                                " sweeps");
    }
    for (std::size_t p = 0; p < un; ++p) {
      for (std::size_t q = p + 1; q < un; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) {
          continue;
        }
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < un; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < un; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        if (eigenvectors != nullptr) {
          for (std::size_t k = 0; k < un; ++k) {
            const double vkp = v[k * un + p];
            const double vkq = v[k * un + q];
            v[k * un + p] = c * vkp - s * vkq;
            v[k * un + q] = s * vkp + c * vkq;
          }
        }
      }
    }
  }

  std::vector<std::size_t> order(un);
  for (std::size_t i = 0; i < un; ++i) {
    order[i] = i;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return at(x, x) < at(y, y); });
  std::vector<double> values(un);
  for (std::size_t i = 0; i < un; ++i) {
    values[i] = at(order[i], order[i]);
  }
  if (eigenvectors != nullptr) {
    eigenvectors->assign(un * un, 0.0);
    for (std::size_t col = 0; col < un; ++col) {
      for (std::size_t row = 0; row < un; ++row) {
        (*eigenvectors)[row * un + col] = v[row * un + order[col]];
      }
    }
  }
  return values;
}

std::vector<double> laplacian_as_doubles(const Graph& g) {
  const auto lap = laplacian_int64(g);
  return {lap.begin(), lap.end()};
}

std::vector<double> numeric_spectrum(const Graph& g, double tol) {
  return symmetric_eigenvalues(laplacian_as_doubles(g), g.order(), tol);
}

// ---------------------------------------------------------------------------
// Closed forms

double SurdEigenvalue::value() const {
  return (static_cast<double>(numerator) + sign * std::sqrt(static_cast<double>(radicand))) / 2.0;
}

bool SurdEigenvalue::is_integer() const {
  if (radicand == 0) {
    return numerator % 2 == 0;
  }
  const auto r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(radicand))));
  for (long long s = std::max(0LL, r - 1); s <= r + 1; ++s) {
    if (s * s == radicand) {
      return (numerator + sign * s) % 2 == 0;
    }
  }
  return false;
}

int ClosedFormSpectrum::count() const {
  int total = 0;
  for (const auto& e : eigenvalues) {
    total += e.multiplicity;
  }
  return total;
}

std::vector<double> ClosedFormSpectrum::values() const {
  std::vector<double> out;
  for (const auto& e : eigenvalues) {
    out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.value());
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntPolynomial ClosedFormSpectrum::characteristic_polynomial() const {
  IntPolynomial p = IntPolynomial::constant(1);
  std::vector<bool> consumed(eigenvalues.size(), false);
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    if (consumed[i]) {
      continue;
    }
    const auto& e = eigenvalues[i];
    consumed[i] = true;
    if (e.sign == 0) {
      if (e.radicand != 0 || e.numerator % 2 != 0) {
        throw std::logic_error("closed form: unpaired non-integer eigenvalue");
      }
      p *= IntPolynomial::linear_factor(BigInt(static_cast<long>(e.numerator / 2))).pow(static_cast<unsigned>(e.multiplicity));
      continue;
    }
    std::size_t partner = i + 1;
    while (partner < eigenvalues.size() &&
           (consumed[partner] || eigenvalues[partner].numerator != e.numerator ||
            eigenvalues[partner].radicand != e.radicand || eigenvalues[partner].sign != -e.sign ||
            eigenvalues[partner].multiplicity != e.multiplicity)) {
      ++partner;
    }
    if (partner == eigenvalues.size()) {
      throw std::logic_error("closed form: surd eigenvalue without conjugate");
    }
    consumed[partner] = true;
    const BigInt a(static_cast<long>(e.numerator));
    const BigInt disc = a * a - BigInt(static_cast<long>(e.radicand));
    if (!mpz_divisible_ui_p(disc.get_mpz_t(), 4)) {
      throw std::logic_error("closed form: conjugate pair has non-integral minimal polynomial");
    }
    const IntPolynomial minimal(std::vector<BigInt>{BigInt(disc / 4), BigInt(-a), BigInt(1)});
    p *= minimal.pow(static_cast<unsigned>(e.multiplicity));
  }
  return p;
}

ClosedFormSpectrum thin_spider_closed_form(int k, int j) {
  if (k < 2) {
    throw std::invalid_argument("thin_spider_closed_form: a spider needs k >= 2 legs");
  }
  if (j < 0) {
    throw std::invalid_argument("thin_spider_closed_form: head size must be non-negative");
  }
  ClosedFormSpectrum out{k, j, {}};
  const long long kk = k;
  const long long p = kk + j;
  if (j == 0) {
    const long long b = kk * kk + 4;
    out.eigenvalues.push_back({kk + 2, b, +1, k - 1});
    out.eigenvalues.push_back({kk + 2, b, -1, k - 1});
    out.eigenvalues.push_back({0, 0, 0, 1});
    out.eigenvalues.push_back({4, 0, 0, 1});
    return out;
  }
  const long long q = p * p + 4;
  out.eigenvalues.push_back({p + 2, q, +1, k - 1});
  out.eigenvalues.push_back({p + 2, q, -1, k - 1});
  if (j >= 2) {
    out.eigenvalues.push_back({2 * kk, 0, 0, j - 1});
  }
  out.eigenvalues.push_back({p + 2, q - 4 * kk, +1, 1});
  out.eigenvalues.push_back({p + 2, q - 4 * kk, -1, 1});
  out.eigenvalues.push_back({0, 0, 0, 1});
  return out;
}

IntMatrix QuotientMatrix::to_matrix() const {
  IntMatrix m(3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      m(i, j) = static_cast<long>(entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
  }
  return m;
}

std::array<long long, 3> QuotientMatrix::row_sums() const {
  std::array<long long, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = entries[i][0] + entries[i][1] + entries[i][2];
  }
  return out;
}

QuotientMatrix quotient_matrix(int k, int j) {
  if (k < 2 || j < 1) {
    throw std::invalid_argument("quotient_matrix: requires k >= 2 and j >= 1");
  }
  const long long kk = k;
  const long long jj = j;
  return QuotientMatrix{{{{jj + 1, -1, -jj}, {-1, 1, 0}, {-kk, 0, kk}}}};
}

// ---------------------------------------------------------------------------

bool check_complement_relation(const Graph& g, double tol) {
  const int n = g.order();
  if (n < 1) {
    throw std::invalid_argument("check_complement_relation: requires at least one vertex");
  }
  const auto mu = numeric_spectrum(g, tol);
  auto expected = std::vector<double>{0.0};
  // The n-1 largest eigenvalues of g are mu[1..n-1] in ascending order.
  for (std::size_t i = 1; i < mu.size(); ++i) {
    expected.push_back(static_cast<double>(n) - mu[i]);
  }
  std::sort(expected.begin(), expected.end());
  const auto actual = numeric_spectrum(complement(g), tol);
  for (std::size_t i = 0; i < actual.size(); ++i) {
    if (std::abs(actual[i] - expected[i]) > tol) {
      return false;
    }
  }
  return true;
}

bool check_union_relation(const Graph& g, const Graph& h) {
  return laplacian_char_poly(disjoint_union(g, h)) == laplacian_char_poly(g) * laplacian_char_poly(h);
}

}  // namespace p4spec
