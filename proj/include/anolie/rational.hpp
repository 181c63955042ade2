#ifndef ANOLIE_RATIONAL_HPP
#define ANOLIE_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace anolie {

using Integer = mpz_class;
/// Exact fraction; GMP keeps results of arithmetic in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

/// Malformed or out-of-contract input (bad file, singular basis change, a < 2...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Canonical text form: "n" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

namespace detail {
inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}
}  // namespace detail

/// Parses "n", "-n", "p/q" or "-p/q" (decimal only). Throws InputError on
/// anything else, including a zero denominator.
inline Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!detail::all_digits(num) || !detail::all_digits(den))
    throw InputError("not a rational number: \"" + std::string(text) + "\"");
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
  Rational q(negative ? Integer(-n) : n, d);
  q.canonicalize();
  return q;
}

inline Integer parse_integer(std::string_view text) {
  const Rational q = parse_rational(text);
  if (!is_integer(q)) throw InputError("not an integer: \"" + std::string(text) + "\"");
  return q.get_num();
}

}  // namespace anolie

#endif  // ANOLIE_RATIONAL_HPP
