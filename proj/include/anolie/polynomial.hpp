#ifndef ANOLIE_POLYNOMIAL_HPP
#define ANOLIE_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "anolie/rational.hpp"

namespace anolie {

/// Dense univariate polynomial, constant term first. Trailing zeros are
/// trimmed, so the zero polynomial has no coefficients.
template <typename T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(const T& coeff, std::size_t degree) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = coeff;
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<T>& coefficients() const { return c_; }
  T coeff(std::size_t n) const { return n < c_.size() ? c_[n] : T(0); }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }
  T constant() const { return coeff(0); }
  bool monic() const { return !c_.empty() && c_.back() == 1; }

  template <typename X>
  X operator()(const X& x) const {
    return evaluate<X>(x);
  }
  template <typename U>
  mpq_class operator()(const __gmp_expr<mpq_t, U>& x) const {
    return evaluate<mpq_class>(mpq_class(x));
  }

  template <typename X>
  X evaluate(const X& x) const {
    X acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  Polynomial derivative() const {
    std::vector<T> d;
    for (std::size_t n = 1; n < c_.size(); ++n) d.push_back(c_[n] * T(static_cast<long>(n)));
    return Polynomial(std::move(d));
  }

  /// x^deg * p(1/x).
  Polynomial reversed() const {
    std::vector<T> r(c_.rbegin(), c_.rend());
    return Polynomial(std::move(r));
  }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& x : p.c_) x = -x;
    return p;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t n = 0; n < a.c_.size(); ++n) c[n] += a.c_[n];
    for (std::size_t n = 0; n < b.c_.size(); ++n) c[n] += b.c_[n];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const T& s, const Polynomial& p) {
    std::vector<T> c = p.c_;
    for (auto& x : c) x = s * x;
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (long n = p.degree(); n >= 0; --n) {
      const T& a = p.c_[static_cast<std::size_t>(n)];
      if (a == 0) continue;
      const bool neg = a < 0;
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      const T mag = neg ? T(-a) : a;
      if (mag != 1 || n == 0) os << mag;
      if (n >= 1) os << "x";
      if (n >= 2) os << "^" << n;
      first = false;
    }
    return os;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

inline RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  for (const auto& z : p.coefficients()) c.emplace_back(z);
  return RatPolynomial(std::move(c));
}

/// The same polynomial with integer coefficients, if it has them.
inline std::optional<IntPolynomial> integer_coefficients(const RatPolynomial& p) {
  std::vector<Integer> c;
  for (const auto& q : p.coefficients()) {
    if (!is_integer(q)) return std::nullopt;
    c.push_back(q.get_num());
  }
  return IntPolynomial(std::move(c));
}

/// Positive rational multiple with coprime integer coefficients. Root signs
/// and Sturm counts are unchanged by this scaling.
inline IntPolynomial primitive_part(const RatPolynomial& p) {
  Integer den = 1;
  for (const auto& q : p.coefficients()) den = lcm(den, q.get_den());
  std::vector<Integer> c;
  Integer g = 0;
  for (const auto& q : p.coefficients()) {
    Integer z = q.get_num() * (den / q.get_den());
    g = gcd(g, z);
    c.push_back(std::move(z));
  }
  if (g > 1)
    for (auto& z : c) z /= g;
  return IntPolynomial(std::move(c));
}

/// Euclidean division over Q: a = q*b + r with deg r < deg b.
inline std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const auto db = static_cast<std::size_t>(b.degree());
  if (rem.size() <= db) return {RatPolynomial{}, a};
  std::vector<Rational> quot(rem.size() - db, Rational(0));
  const Rational lead = b.leading();
  for (std::size_t n = rem.size(); n-- > db;) {
    const Rational f = rem[n] / lead;
    if (f == 0) continue;
    quot[n - db] = f;
    for (std::size_t m = 0; m <= db; ++m) rem[n - db + m] -= f * b.coeff(m);
  }
  rem.resize(db);
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

/// Monic gcd over Q (zero if both inputs are zero).
inline RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return (Rational(1) / a.leading()) * a;
}

/// p / gcd(p, p'): same roots, all simple.
inline RatPolynomial squarefree_part(const RatPolynomial& p) {
  if (p.degree() < 1) return p;
  return divmod(p, gcd(p, p.derivative())).first;
}

/// Yun's algorithm: p = lc * prod_m f_m^m with each f_m squarefree and the f_m
/// pairwise coprime. Entry m-1 holds f_m (possibly constant 1).
inline std::vector<RatPolynomial> squarefree_decomposition(const RatPolynomial& p) {
  std::vector<RatPolynomial> factors;
  if (p.degree() < 1) return factors;
  const RatPolynomial dp = p.derivative();
  RatPolynomial a = gcd(p, dp);
  RatPolynomial b = divmod(p, a).first;
  RatPolynomial c = divmod(dp, a).first;
  RatPolynomial d = c - b.derivative();
  while (b.degree() >= 1) {
    RatPolynomial f = gcd(b, d);
    factors.push_back(f);
    b = divmod(b, f).first;
    c = divmod(d, f).first;
    d = c - b.derivative();
  }
  return factors;
}

/// Sturm chain p_0 = p, p_1 = p', p_{m+1} = -rem(p_{m-1}, p_m). Each member is
/// rescaled by a positive constant to keep coefficients small.
class SturmSequence {
 public:
  /// `p` must be squarefree and nonconstant.
  explicit SturmSequence(const RatPolynomial& p) {
    if (p.degree() < 1) throw InputError("Sturm sequence of a constant polynomial");
    chain_.push_back(normalized(p));
    chain_.push_back(normalized(p.derivative()));
    while (true) {
      auto r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
      if (r.is_zero()) break;
      chain_.push_back(normalized(-r));
    }
    if (chain_.back().degree() > 0) throw InputError("Sturm sequence: polynomial is not squarefree");
  }

  const std::vector<RatPolynomial>& chain() const { return chain_; }

  long sign_changes_at(const Rational& x) const {
    std::vector<int> signs;
    for (const auto& q : chain_) signs.push_back(sgn(q(x)));
    return changes(signs);
  }

  /// +1 for +infinity, -1 for -infinity.
  long sign_changes_at_infinity(int direction) const {
    std::vector<int> signs;
    for (const auto& q : chain_) {
      int s = sgn(q.leading());
      if (direction < 0 && q.degree() % 2 != 0) s = -s;
      signs.push_back(s);
    }
    return changes(signs);
  }

  /// Distinct real roots in the open interval (lo, hi).
  long roots_in_open_interval(const Rational& lo, const Rational& hi) const {
    long n = sign_changes_at(lo) - sign_changes_at(hi);
    if (chain_.front()(hi) == 0) --n;  // the count is for (lo, hi]
    return n;
  }

  long real_roots() const { return sign_changes_at_infinity(-1) - sign_changes_at_infinity(+1); }

 private:
  static RatPolynomial normalized(const RatPolynomial& q) { return to_rational(primitive_part(q)); }

  static long changes(const std::vector<int>& signs) {
    long n = 0;
    int last = 0;
    for (int s : signs) {
      if (s == 0) continue;
      if (last != 0 && s != last) ++n;
      last = s;
    }
    return n;
  }

  std::vector<RatPolynomial> chain_;
};

/// Distinct real roots of an arbitrary nonzero polynomial in (lo, hi).
inline long count_distinct_roots(const RatPolynomial& p, const Rational& lo, const Rational& hi) {
  const auto sf = squarefree_part(p);
  if (sf.degree() < 1) return 0;
  return SturmSequence(sf).roots_in_open_interval(lo, hi);
}

}  // namespace anolie

#endif  // ANOLIE_POLYNOMIAL_HPP
