#ifndef ANOLIE_QUAD_EXT_HPP
#define ANOLIE_QUAD_EXT_HPP

#include <ostream>
#include <string>

#include "anolie/rational.hpp"

namespace anolie {

/// Element u + v*sqrt(D) of the real quadratic field Q(sqrt(D)), D > 0 not a
/// square.
///
/// Every element carries its radicand. Purely rational elements (v == 0) may
/// carry D == 0, meaning "no field context yet"; they combine with elements of
/// any field. Mixing two different nonzero radicands throws.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(long n) : u_(n) {}  // NOLINT(google-explicit-constructor)
  QuadExt(Rational u) : u_(std::move(u)) {}  // NOLINT(google-explicit-constructor)
  QuadExt(Rational u, Rational v, Integer radicand) : u_(std::move(u)), v_(std::move(v)), d_(std::move(radicand)) {
    if (v_ != 0 && d_ <= 0) throw InputError("QuadExt: irrational part needs a positive radicand");
  }

  /// sqrt(D) itself.
  static QuadExt sqrt_of(const Integer& radicand) { return QuadExt(Rational(0), Rational(1), radicand); }

  const Rational& rational_part() const { return u_; }
  const Rational& radical_part() const { return v_; }
  const Integer& radicand() const { return d_; }
  bool is_rational() const { return v_ == 0; }

  /// u^2 - D v^2.
  Rational norm() const { return u_ * u_ - Rational(d_) * v_ * v_; }
  QuadExt conjugate() const { return QuadExt(u_, -v_, d_); }

  QuadExt inverse() const {
    const Rational n = norm();
    if (n == 0) throw std::domain_error("QuadExt: division by zero");
    return QuadExt(u_ / n, -v_ / n, d_);
  }

  QuadExt operator-() const { return QuadExt(-u_, -v_, d_); }

  QuadExt& operator+=(const QuadExt& o) {
    d_ = joint(d_, o.d_);
    u_ += o.u_;
    v_ += o.v_;
    return *this;
  }
  QuadExt& operator-=(const QuadExt& o) { return *this += -o; }
  QuadExt& operator*=(const QuadExt& o) {
    const Integer d = joint(d_, o.d_);
    Rational u = u_ * o.u_ + Rational(d) * v_ * o.v_;
    Rational v = u_ * o.v_ + o.u_ * v_;
    u_ = std::move(u);
    v_ = std::move(v);
    d_ = d;
    return *this;
  }
  QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
  friend bool operator==(const QuadExt& a, const QuadExt& b) { return a.u_ == b.u_ && a.v_ == b.v_; }
  friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const QuadExt& x) {
    os << x.u_;
    if (x.v_ != 0) os << (x.v_ < 0 ? " - " : " + ") << abs(x.v_) << "*sqrt(" << x.d_ << ")";
    return os;
  }

 private:
  static Integer joint(const Integer& a, const Integer& b) {
    if (a == 0) return b;
    if (b == 0 || a == b) return a;
    throw std::domain_error("QuadExt: mixing Q(sqrt(" + a.get_str() + ")) and Q(sqrt(" + b.get_str() + "))");
  }

  Rational u_{0};
  Rational v_{0};
  Integer d_{0};
};

/// lambda = a + sqrt(a^2 - 1), the larger root of x^2 - 2ax + 1.
inline QuadExt expanding_unit(long a) {
  const Integer radicand = Integer(a) * a - 1;
  return QuadExt(Rational(a), Rational(1), radicand);
}

/// x^e for any integer e; negative exponents go through the inverse.
inline QuadExt power(const QuadExt& x, long e) {
  QuadExt base = e < 0 ? x.inverse() : x;
  QuadExt result(1);
  for (long n = e < 0 ? -e : e; n > 0; n >>= 1) {
    if (n & 1) result *= base;
    base *= base;
  }
  return result;
}

}  // namespace anolie

#endif  // ANOLIE_QUAD_EXT_HPP
