#ifndef ANOLIE_CERTIFICATE_HPP
#define ANOLIE_CERTIFICATE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "anolie/doubling.hpp"
#include "anolie/hyperbolicity.hpp"
#include "anolie/lie_algebra.hpp"
#include "anolie/matrix.hpp"

namespace anolie {

/// How the (algebra, matrix) pair came about; recorded in certificate files.
struct Provenance {
  std::string construction = "user";  // "doubling", "catalog" or "user"
  std::optional<long> a;
  std::string catalog_name;
  /// Doubling only; see DoublingResult::degree_grouped_order.
  std::vector<std::size_t> degree_grouped_order;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct Witness {
  std::string kind;  // "automorphism", "integral", "unimodular", "hyperbolic", "classification"
  std::string detail;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Everything needed to check, without the original inputs, that `matrix` is a
/// hyperbolic automorphism of `algebra` with integer entries and
/// characteristic polynomial constant term +-1.
struct AnosovCertificate {
  RationalLieAlgebra algebra;
  Matrix<Rational> matrix;
  RatPolynomial char_poly;
  bool automorphism = false;
  bool integral = false;
  bool unimodular = false;
  bool hyperbolic = false;
  bool anosov = false;
  std::optional<Splitting> splitting;
  Provenance parameters;
  std::vector<Witness> failure_witnesses;
};

namespace detail {

inline std::string format_vector(const Vector<Rational>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + to_string(v[k]) + ")e" + std::to_string(k + 1);
  }
  return s.empty() ? "0" : s;
}

}  // namespace detail

/// Runs every exact check and records the outcome; never throws on a failed
/// check, only on malformed input.
inline AnosovCertificate certify(const RationalLieAlgebra& alg, const Matrix<Rational>& m, Provenance provenance = {}) {
  if (!m.square() || m.rows() != alg.dim()) throw InputError("certify: matrix size differs from algebra dimension");
  AnosovCertificate cert;
  cert.algebra = alg;
  cert.matrix = m;
  cert.parameters = std::move(provenance);

  if (auto bad = verify_automorphism(alg, m)) {
    cert.failure_witnesses.push_back({"automorphism", "M[e" + std::to_string(bad->i + 1) + ", e" + std::to_string(bad->j + 1) +
                                                          "] - [Me" + std::to_string(bad->i + 1) + ", Me" +
                                                          std::to_string(bad->j + 1) + "] = " + detail::format_vector(bad->residual)});
  } else {
    cert.automorphism = true;
  }

  cert.integral = is_integral(m);
  if (!cert.integral) cert.failure_witnesses.push_back({"integral", "matrix has non-integer entries"});

  cert.char_poly = char_poly(m);
  const IntPolynomial scaled = primitive_part(cert.char_poly);
  if (const auto ip = integer_coefficients(cert.char_poly)) {
    cert.unimodular = unimodularity_check(*ip);
    if (!cert.unimodular)
      cert.failure_witnesses.push_back({"unimodular", "characteristic polynomial has constant term " + to_string(ip->constant())});
  } else {
    cert.failure_witnesses.push_back({"unimodular", "characteristic polynomial has non-integer coefficients"});
  }

  // Zero eigenvalues are off the unit circle; strip them before the exact test.
  std::vector<Integer> coeffs = scaled.coefficients();
  std::size_t zeros = 0;
  while (zeros < coeffs.size() && coeffs[zeros] == 0) ++zeros;
  const IntPolynomial nonzero_part(std::vector<Integer>(coeffs.begin() + static_cast<long>(zeros), coeffs.end()));
  const auto unit = unit_circle_root_test(nonzero_part);
  cert.hyperbolic = !unit.has_unit_root;
  if (cert.hyperbolic) {
    Splitting s = nonzero_part.degree() >= 1 ? classify_splitting(nonzero_part) : Splitting{};
    s.contracting += static_cast<long>(zeros);
    if (!s.consistent)
      cert.failure_witnesses.push_back({"classification", "numeric root moduli failed the consistency checks"});
    cert.splitting = s;
  } else {
    cert.failure_witnesses.push_back({"hyperbolic", unit.describe()});
  }

  cert.anosov = cert.automorphism && cert.integral && cert.unimodular && cert.hyperbolic;
  return cert;
}

}  // namespace anolie

#endif  // ANOLIE_CERTIFICATE_HPP
