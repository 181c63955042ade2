#ifndef ANOLIE_DOUBLING_HPP
#define ANOLIE_DOUBLING_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "anolie/lie_algebra.hpp"
#include "anolie/matrix.hpp"
#include "anolie/quad_ext.hpp"
#include "anolie/rational.hpp"

namespace anolie {

template <typename F>
struct AutomorphismFailure {
  std::size_t i, j;  // 0-based, i < j
  Vector<F> residual;  // M[e_i, e_j] - [M e_i, M e_j]
};

/// Checks M[e_i, e_j] = [M e_i, M e_j] for all i < j.
template <typename F>
std::optional<AutomorphismFailure<F>> verify_automorphism(const LieAlgebra<F>& alg, const Matrix<F>& m) {
  const std::size_t d = alg.dim();
  if (m.rows() != d || m.cols() != d) throw InputError("verify_automorphism: matrix size differs from dimension");
  std::vector<Vector<F>> images;
  for (std::size_t j = 0; j < d; ++j) images.push_back(m.column(j));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Vector<F> lhs = m * alg.basis_bracket(i, j);
      const Vector<F> rhs = bracket(alg, images[i], images[j]);
      for (std::size_t k = 0; k < d; ++k) lhs[k] -= rhs[k];
      if (!is_zero(lhs)) return AutomorphismFailure<F>{i, j, std::move(lhs)};
    }
  return std::nullopt;
}

/// B = [[a, a^2 - 1], [1, a]], the matrix of diag(lambda, 1/lambda) in the
/// basis {X + Y, sqrt(a^2 - 1)(X - Y)}.
inline Matrix<Rational> hyperbolic_block(long a) {
  const Rational ra(a);
  return Matrix<Rational>{{ra, ra * ra - 1}, {Rational(1), ra}};
}

struct DoublingResult {
  /// n (+) n in the basis u_1, v_1, ..., u_d, v_d with u_i = X_i + Y_i and
  /// v_i = sqrt(a^2 - 1)(X_i - Y_i).
  RationalLieAlgebra doubled;
  /// Block diagonal, block i equal to B^{deg(X_i)}.
  Matrix<Rational> matrix;
  long a = 2;
  std::vector<int> block_exponents;
  /// Basis order grouping the pairs by degree (stable): position m of the
  /// degree-grouped basis holds doubled basis vector degree_grouped_order[m].
  std::vector<std::size_t> degree_grouped_order;
};

/// Builds n (+) n in the integer basis of sum/difference pairs together with
/// the integer hyperbolic automorphism acting on pair i by B^{deg(X_i)}.
///
/// Requires a graded algebra with integer structure constants and a >= 2.
/// Rational constants are rejected; run scale_basis_to_integer first.
inline DoublingResult double_construction(const RationalLieAlgebra& alg, long a) {
  if (a < 2) throw InputError("parameter a must be >= 2 (otherwise 1/lambda < 1 < lambda fails)");
  if (!alg.degrees()) throw InputError("doubling needs a graded algebra (degrees are missing)");
  if (auto bad = grading_check(alg))
    throw InputError("doubling needs a valid grading; it fails at [e" + std::to_string(bad->i + 1) + ", e" +
                     std::to_string(bad->j + 1) + "] -> e" + std::to_string(bad->k + 1));
  if (!has_integer_constants(alg))
    throw InputError("doubling needs integer structure constants; apply scale_basis_to_integer (--scale) first");

  const std::size_t d = alg.dim();
  const Rational radicand = Rational(a) * a - 1;
  const auto u = [](std::size_t i) { return 2 * i; };
  const auto v = [](std::size_t i) { return 2 * i + 1; };

  std::vector<StructureConstant<Rational>> constants;
  for (const auto& sc : alg.constants()) {
    constants.push_back({u(sc.i), u(sc.j), u(sc.k), sc.c});
    constants.push_back({u(sc.i), v(sc.j), v(sc.k), sc.c});
    constants.push_back({v(sc.i), u(sc.j), v(sc.k), sc.c});
    constants.push_back({v(sc.i), v(sc.j), u(sc.k), radicand * sc.c});
  }
  std::vector<int> degrees;
  for (int deg : *alg.degrees()) {
    degrees.push_back(deg);
    degrees.push_back(deg);
  }

  DoublingResult out;
  const std::string base = alg.name().empty() ? std::string("n") : alg.name();
  out.doubled = RationalLieAlgebra(2 * d, constants, degrees, base + " doubled (a=" + std::to_string(a) + ")");
  out.a = a;
  out.block_exponents = *alg.degrees();
  const auto b = hyperbolic_block(a);
  std::vector<Matrix<Rational>> blocks;
  for (int deg : out.block_exponents) blocks.push_back(power(b, deg));
  out.matrix = block_diagonal(blocks);

  std::vector<std::size_t> pairs(d);
  std::iota(pairs.begin(), pairs.end(), 0);
  std::stable_sort(pairs.begin(), pairs.end(),
                   [&](std::size_t x, std::size_t y) { return out.block_exponents[x] < out.block_exponents[y]; });
  for (std::size_t p : pairs) {
    out.degree_grouped_order.push_back(u(p));
    out.degree_grouped_order.push_back(v(p));
  }
  return out;
}

namespace detail {

inline Matrix<QuadExt> lift(const Matrix<Rational>& m) {
  Matrix<QuadExt> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = QuadExt(m(i, j));
  return out;
}

inline LieAlgebra<QuadExt> lift(const RationalLieAlgebra& alg) {
  std::vector<StructureConstant<QuadExt>> constants;
  for (const auto& sc : alg.constants()) constants.push_back({sc.i, sc.j, sc.k, QuadExt(sc.c)});
  return LieAlgebra<QuadExt>(alg.dim(), constants, alg.degrees(), alg.name());
}

/// Columns u_i = X_i + Y_i, v_i = s(X_i - Y_i), written in the basis
/// X_1..X_d, Y_1..Y_d, with s = sqrt(a^2 - 1).
inline Matrix<QuadExt> pair_basis(std::size_t d, long a) {
  const QuadExt s = QuadExt::sqrt_of(Integer(a) * a - 1);
  Matrix<QuadExt> p(2 * d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    p(i, 2 * i) = QuadExt(1);
    p(d + i, 2 * i) = QuadExt(1);
    p(i, 2 * i + 1) = s;
    p(d + i, 2 * i + 1) = -s;
  }
  return p;
}

}  // namespace detail

/// Recomputes the automorphism from its eigenvalue description: in Q(sqrt(a^2-1)),
/// P^{-1} diag(lambda^{deg}, ..., lambda^{-deg}, ...) P must equal the integer matrix.
inline bool quadext_conjugation_check(const DoublingResult& result) {
  const std::size_t d = result.block_exponents.size();
  const QuadExt lambda = expanding_unit(result.a);
  if (lambda * power(lambda, -1) != QuadExt(1)) return false;
  Vector<QuadExt> diag(2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    diag[i] = power(lambda, result.block_exponents[i]);
    diag[d + i] = power(lambda, -result.block_exponents[i]);
  }
  const auto p = detail::pair_basis(d, result.a);
  const auto conj = inverse(p) * Matrix<QuadExt>::diagonal(diag) * p;
  return conj == detail::lift(result.matrix);
}

/// Recomputes the doubled brackets by an honest change of basis of n (+) n
/// over Q(sqrt(a^2-1)) and compares them with the closed-form table.
inline bool doubled_bracket_check(const RationalLieAlgebra& original, const DoublingResult& result) {
  const auto lifted = detail::lift(original);
  const auto sum = direct_sum(lifted, lifted);
  const auto in_beta = change_of_basis(sum, detail::pair_basis(original.dim(), result.a));
  return in_beta.table() == detail::lift(result.doubled).table();
}

struct DimensionLint {
  bool warning = false;
  std::string message;
};

/// An Anosov k-step nilpotent Lie algebra (k >= 2) has dimension >= 2k + 2.
inline DimensionLint min_dimension_lint(const RationalLieAlgebra& alg) {
  const auto series = lower_central_series(alg);
  if (!series.nilpotent) return {true, "not nilpotent, so not an Anosov nilpotent Lie algebra"};
  const std::size_t k = series.step();
  if (k < 2) return {};
  const std::size_t bound = 2 * k + 2;
  if (alg.dim() < bound)
    return {true, "dimension " + std::to_string(alg.dim()) + " < 2k+2 = " + std::to_string(bound) + " for a " +
                      std::to_string(k) + "-step algebra: no Anosov automorphism exists"};
  return {};
}

}  // namespace anolie

#endif  // ANOLIE_DOUBLING_HPP
