#ifndef ANOLIE_HYPERBOLICITY_HPP
#define ANOLIE_HYPERBOLICITY_HPP

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "anolie/matrix.hpp"
#include "anolie/polynomial.hpp"
#include "anolie/rational.hpp"

namespace anolie {

/// det(xI - m), computed by the Faddeev-LeVerrier recursion in exact
/// arithmetic. Always monic of degree m.rows().
inline RatPolynomial char_poly(const Matrix<Rational>& m) {
  if (!m.square()) throw InputError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  if (n == 0) return RatPolynomial(c);
  // M_1 = I, c_{n-1} = -tr(A); M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  Matrix<Rational> mk = Matrix<Rational>::identity(n);
  Matrix<Rational> amk = m;
  c[n - 1] = -amk.trace();
  for (std::size_t k = 2; k <= n; ++k) {
    mk = amk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    amk = m * mk;
    c[n - k] = -amk.trace() / Rational(static_cast<long>(k));
  }
  return RatPolynomial(std::move(c));
}

/// p(0) = +1 or -1. Requires a monic integer polynomial.
inline bool unimodularity_check(const IntPolynomial& p) {
  if (!p.monic()) throw InputError("unimodularity check needs a monic polynomial");
  const Integer c = p.constant();
  return c == 1 || c == -1;
}

/// Determinant of an integer matrix by Bareiss fraction-free elimination.
inline Integer bareiss_determinant(Matrix<Integer> m) {
  if (!m.square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(t);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Res(p, q) via the Sylvester matrix.
inline Integer resultant(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return 0;
  const auto n = static_cast<std::size_t>(p.degree());
  const auto m = static_cast<std::size_t>(q.degree());
  if (n + m == 0) return 1;
  Matrix<Integer> s(n + m, n + m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t t = 0; t <= n; ++t) s(r, r + t) = p.coeff(n - t);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t t = 0; t <= m; ++t) s(m + r, r + t) = q.coeff(m - t);
  return bareiss_determinant(std::move(s));
}

/// r(y) = Res_x(p(x), x^2 - y x + 1), whose roots are mu + 1/mu over the roots
/// mu of p. Evaluated at the integer nodes 0, 1, -1, 2, -2, ... and
/// interpolated exactly.
inline IntPolynomial pair_transform(const IntPolynomial& p) {
  if (p.degree() < 1) throw InputError("pair_transform needs a nonconstant polynomial");
  if (p.constant() == 0) throw InputError("pair_transform needs p(0) != 0");
  const auto n = static_cast<std::size_t>(p.degree());
  std::vector<Rational> nodes, values;
  for (std::size_t t = 0; nodes.size() < n + 1; ++t) {
    const long y = (t % 2 == 1) ? static_cast<long>((t + 1) / 2) : -static_cast<long>(t / 2);
    nodes.emplace_back(y);
    values.emplace_back(resultant(p, IntPolynomial{Integer(1), Integer(-y), Integer(1)}));
  }
  // Newton divided differences, then expansion into the monomial basis.
  std::vector<Rational> dd = values;
  for (std::size_t level = 1; level <= n; ++level)
    for (std::size_t i = n; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
  RatPolynomial r{dd[n]};
  for (std::size_t i = n; i-- > 0;) r = r * RatPolynomial{Rational(-nodes[i]), Rational(1)} + RatPolynomial{dd[i]};
  auto ri = integer_coefficients(r);
  if (!ri) throw std::logic_error("pair_transform: interpolant is not integral");
  return *ri;
}

/// Outcome of the unit-circle root exclusion.
struct UnitCircleResult {
  enum class Witness { none, root_plus_one, root_minus_one, conjugate_pair };
  bool has_unit_root = false;
  Witness witness = Witness::none;
  /// Distinct values 2cos(theta) in (-2, 2) found, when witness is conjugate_pair.
  long conjugate_pairs = 0;

  std::string describe() const {
    switch (witness) {
      case Witness::root_plus_one: return "eigenvalue 1";
      case Witness::root_minus_one: return "eigenvalue -1";
      case Witness::conjugate_pair:
        return std::to_string(conjugate_pairs) + " conjugate pair(s) exp(+-i theta) on the unit circle";
      case Witness::none: break;
    }
    return "no root of modulus 1";
  }
};

/// Exact test for a complex root of modulus 1. Roots +-1 are checked directly;
/// any other unit root e^{+-i theta} shows up as a real root of pair_transform(p)
/// inside (-2, 2), which Sturm sequences count exactly.
inline UnitCircleResult unit_circle_root_test(const IntPolynomial& p) {
  if (p.constant() == 0) throw InputError("polynomial vanishes at 0 (singular matrix)");
  UnitCircleResult out;
  if (p.degree() < 1) return out;
  if (p(Integer(1)) == 0) {
    out.has_unit_root = true;
    out.witness = UnitCircleResult::Witness::root_plus_one;
    return out;
  }
  if (p(Integer(-1)) == 0) {
    out.has_unit_root = true;
    out.witness = UnitCircleResult::Witness::root_minus_one;
    return out;
  }
  const long inside = count_distinct_roots(to_rational(pair_transform(p)), Rational(-2), Rational(2));
  if (inside > 0) {
    out.has_unit_root = true;
    out.witness = UnitCircleResult::Witness::conjugate_pair;
    out.conjugate_pairs = inside;
  }
  return out;
}

enum class ClassificationMode { exact, numeric_fallback };

inline std::string to_string(ClassificationMode m) {
  return m == ClassificationMode::exact ? "exact" : "numeric-fallback";
}

struct Splitting {
  long expanding = 0;
  long contracting = 0;
  ClassificationMode mode = ClassificationMode::exact;
  /// Numeric fallback only: the root moduli passed the sum/product sanity checks.
  bool consistent = true;
};

/// Complex roots of p (as doubles) from the eigenvalues of its companion matrix.
inline std::vector<std::complex<double>> numeric_roots(const RatPolynomial& p) {
  const long n = p.degree();
  if (n < 1) return {};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  const Rational lead = p.leading();
  for (long i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (long i = 0; i < n; ++i) companion(i, n - 1) = -Rational(p.coeff(static_cast<std::size_t>(i)) / lead).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<std::complex<double>> roots;
  for (long i = 0; i < n; ++i) roots.push_back(solver.eigenvalues()[i]);
  return roots;
}

/// Counts roots with |mu| > 1 and |mu| < 1 (with multiplicity).
///
/// Exact when every root is real (Sturm counts on each squarefree factor);
/// otherwise falls back to companion eigenvalues and flags the result.
inline Splitting classify_splitting(const IntPolynomial& p) {
  if (unit_circle_root_test(p).has_unit_root) throw InputError("classify_splitting: polynomial has a root of modulus 1");
  const long n = p.degree();
  Splitting out;
  const RatPolynomial rp = to_rational(p);
  const auto factors = squarefree_decomposition(rp);
  long real = 0, inside = 0;
  for (std::size_t m = 0; m < factors.size(); ++m) {
    if (factors[m].degree() < 1) continue;
    const SturmSequence sturm(factors[m]);
    const long mult = static_cast<long>(m + 1);
    real += mult * sturm.real_roots();
    inside += mult * sturm.roots_in_open_interval(Rational(-1), Rational(1));
  }
  if (real == n) {
    out.contracting = inside;
    out.expanding = n - inside;
    out.mode = ClassificationMode::exact;
    return out;
  }

  out.mode = ClassificationMode::numeric_fallback;
  constexpr double rel_tol = 1e-9;
  double log_sum = 0.0;
  for (const auto& mu : numeric_roots(rp)) {
    const double r = std::abs(mu);
    if (r > 1.0 + rel_tol) ++out.expanding;
    else if (r < 1.0 - rel_tol) ++out.contracting;
    else out.consistent = false;
    log_sum += std::log(r);
  }
  const double expected = std::log(std::abs(Rational(rp.constant() / rp.leading()).get_d()));
  if (out.expanding + out.contracting != n || std::abs(log_sum - expected) > 1e-6) out.consistent = false;
  return out;
}

}  // namespace anolie

#endif  // ANOLIE_HYPERBOLICITY_HPP
