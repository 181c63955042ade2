#ifndef ANOLIE_CATALOG_HPP
#define ANOLIE_CATALOG_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "anolie/doubling.hpp"
#include "anolie/lie_algebra.hpp"
#include "anolie/matrix.hpp"
#include "anolie/quad_ext.hpp"

namespace anolie::catalog {

struct Entry {
  RationalLieAlgebra algebra;
  std::optional<Matrix<Rational>> automorphism;
  std::vector<std::string> warnings;
};

/// [X1, X2] = X3, graded (1, 1, 2).
inline RationalLieAlgebra heisenberg3() {
  return RationalLieAlgebra(3, {{0, 1, 2, Rational(1)}}, std::vector<int>{1, 1, 2}, "heisenberg3");
}

/// [X1, Xi] = X(i+1) for 2 <= i <= k: filiform, k-step, dimension k + 1,
/// graded (1, 1, 2, ..., k).
inline RationalLieAlgebra filiform(long k) {
  if (k < 2) throw InputError("filiform needs k >= 2");
  const auto n = static_cast<std::size_t>(k);
  std::vector<StructureConstant<Rational>> constants;
  for (std::size_t i = 1; i < n; ++i) constants.push_back({0, i, i + 1, Rational(1)});
  std::vector<int> degrees{1};
  for (long d = 1; d <= k; ++d) degrees.push_back(static_cast<int>(d));
  return RationalLieAlgebra(n + 1, constants, degrees, "filiform(k=" + std::to_string(k) + ")");
}

/// Parameter t_k = 4k^2/(k^2+1)^2 of the seven-dimensional curve, with both
/// radicals sqrt(t_k) and sqrt(1 - t_k) rational.
struct SevenDimParameter {
  Rational t;
  Rational sqrt_t;
  Rational sqrt_one_minus_t;
};

inline SevenDimParameter seven_dim_parameter(long k) {
  if (k < 2) throw InputError("seven_dim_family needs k >= 2 (k = 1 gives t = 1)");
  const Rational kk = Rational(k) * k;
  SevenDimParameter p;
  p.t = 4 * kk / ((kk + 1) * (kk + 1));
  p.sqrt_t = Rational(2 * k) / (kk + 1);
  p.sqrt_one_minus_t = (kk - 1) / (kk + 1);
  return p;
}

/// Seven-dimensional 6-step algebra with bracket mu_t at t = t_k, graded by
/// deg X_i = i:
///   [X1,X2] = s X3, [X1,X3] = X4, [X1,X4] = r X5, [X1,X5] = X6, [X1,X6] = X7,
///   [X2,X3] = X5,   [X2,X4] = X6, [X2,X5] = r X7, [X3,X4] = s X7,
/// where r = sqrt(t) and s = sqrt(1 - t).
inline RationalLieAlgebra seven_dim_family(long k) {
  const auto p = seven_dim_parameter(k);
  const Rational one(1);
  std::vector<StructureConstant<Rational>> constants{
      {0, 1, 2, p.sqrt_one_minus_t}, {0, 2, 3, one}, {0, 3, 4, p.sqrt_t}, {0, 4, 5, one}, {0, 5, 6, one},
      {1, 2, 4, one},                {1, 3, 5, one}, {1, 4, 6, p.sqrt_t}, {2, 3, 6, p.sqrt_one_minus_t},
  };
  return RationalLieAlgebra(7, constants, std::vector<int>{1, 2, 3, 4, 5, 6, 7},
                            "seven_dim_family(k=" + std::to_string(k) + ")");
}

/// Eight-dimensional two-step algebra on X1..X3, Y1..Y3, Z1, Z2 (in this order)
/// with [X1,X2] = Z1, [X1,X3] = Z2, [Y1,Y2] = Z1, [Y1,Y3] = Z2.
///
/// The last bracket is often misprinted as a second [Y1,Y2]; the weights of the
/// automorphism below force [Y1,Y3] = Z2.
inline RationalLieAlgebra eight_dim_original() {
  const Rational one(1);
  return RationalLieAlgebra(8, {{0, 1, 6, one}, {0, 2, 7, one}, {3, 4, 6, one}, {3, 5, 7, one}},
                            std::vector<int>{1, 1, 1, 1, 1, 1, 2, 2}, "eight_dim");
}

/// Exponents e with A = diag(lambda^e) on X1, X2, X3, Y1, Y2, Y3, Z1, Z2.
inline std::array<int, 8> eight_dim_weights() { return {1, 1, -3, -1, 3, -1, 2, -2}; }

/// Pairs (P, Q) of the integer basis {P + Q, sqrt(a^2-1)(P - Q)}: (X1,Y1),
/// (X2,Y3), (X3,Y2), (Z1,Z2); exponents of B on each pair are 1, 1, -3, 2.
inline Matrix<QuadExt> eight_dim_basis(long a) {
  constexpr std::array<std::array<std::size_t, 2>, 4> pairs{{{0, 3}, {1, 5}, {2, 4}, {6, 7}}};
  const QuadExt s = QuadExt::sqrt_of(Integer(a) * a - 1);
  Matrix<QuadExt> p(8, 8);
  for (std::size_t m = 0; m < pairs.size(); ++m) {
    const auto [x, y] = pairs[m];
    p(x, 2 * m) = QuadExt(1);
    p(y, 2 * m) = QuadExt(1);
    p(x, 2 * m + 1) = s;
    p(y, 2 * m + 1) = -s;
  }
  return p;
}

/// The eight-dimensional algebra rewritten in its integer basis, together with
/// diag(B, B, B^-3, B^2).
inline Entry eight_dim_example(long a = 2) {
  if (a < 2) throw InputError("eight_dim needs a >= 2");
  const auto orig = eight_dim_original();
  std::vector<StructureConstant<QuadExt>> lifted;
  for (const auto& sc : orig.constants()) lifted.push_back({sc.i, sc.j, sc.k, QuadExt(sc.c)});
  const LieAlgebra<QuadExt> q(8, lifted, orig.degrees());
  const auto in_beta = change_of_basis(q, eight_dim_basis(a));

  std::vector<StructureConstant<Rational>> constants;
  for (const auto& sc : in_beta.constants()) {
    if (!sc.c.is_rational()) throw std::logic_error("eight_dim: basis is not an integer basis");
    constants.push_back({sc.i, sc.j, sc.k, sc.c.rational_part()});
  }
  Entry e;
  e.algebra = RationalLieAlgebra(8, constants, in_beta.degrees(), "eight_dim(a=" + std::to_string(a) + ")");
  const auto b = hyperbolic_block(a);
  e.automorphism = block_diagonal<Rational>({b, b, power(b, -3), power(b, 2)});
  return e;
}

/// Induced map on the exterior square, basis e1^e2, e1^e3, e2^e3; entries are
/// the 2x2 minors of m.
inline Matrix<Rational> exterior_square(const Matrix<Rational>& m) {
  if (m.rows() != 3 || m.cols() != 3) throw InputError("exterior_square expects a 3x3 matrix");
  constexpr std::array<std::array<std::size_t, 2>, 3> wedge{{{0, 1}, {0, 2}, {1, 2}}};
  Matrix<Rational> out(3, 3);
  for (std::size_t row = 0; row < 3; ++row)
    for (std::size_t col = 0; col < 3; ++col) {
      const auto [c, d] = wedge[row];
      const auto [a, b] = wedge[col];
      out(row, col) = m(c, a) * m(d, b) - m(d, a) * m(c, b);
    }
  return out;
}

inline Matrix<Rational> default_free_two_step_matrix() {
  const Rational one(1), two(2), three(3);
  return Matrix<Rational>{{one, one, one}, {one, two, two}, {one, two, three}};
}

/// r copies of Z^3 plus Lambda^2 Z^3, with [v_1+...+v_r, w_1+...+w_r] =
/// v_1^w_1 + ... + v_r^w_r, and the automorphism diag(A, ..., A, Lambda^2 A).
inline Entry free_two_step_sums(long r, const Matrix<Rational>& a3 = default_free_two_step_matrix()) {
  if (r < 1) throw InputError("free_two_step needs r >= 1");
  if (a3.rows() != 3 || a3.cols() != 3) throw InputError("free_two_step needs a 3x3 matrix");
  const auto copies = static_cast<std::size_t>(r);
  const std::size_t w = 3 * copies;
  std::vector<StructureConstant<Rational>> constants;
  for (std::size_t s = 0; s < copies; ++s) {
    constants.push_back({3 * s, 3 * s + 1, w, Rational(1)});
    constants.push_back({3 * s, 3 * s + 2, w + 1, Rational(1)});
    constants.push_back({3 * s + 1, 3 * s + 2, w + 2, Rational(1)});
  }
  std::vector<int> degrees(w, 1);
  degrees.insert(degrees.end(), {2, 2, 2});

  Entry e;
  e.algebra = RationalLieAlgebra(w + 3, constants, degrees, "free_two_step(r=" + std::to_string(r) + ")");
  std::vector<Matrix<Rational>> blocks(copies, a3);
  blocks.push_back(exterior_square(a3));
  e.automorphism = block_diagonal(blocks);
  const Rational det = determinant(a3);
  if (det != 1 && det != -1)
    e.warnings.push_back("det A = " + to_string(det) + " is not +-1; the certificate will fail unimodularity");
  return e;
}

struct Description {
  std::string name;
  std::string parameters;
  std::string summary;
};

inline std::vector<Description> listing() {
  return {
      {"heisenberg3", "none", "3-dim Heisenberg algebra [X1,X2]=X3, degrees (1,1,2)"},
      {"filiform", "--k K, K >= 2", "[X1,Xi]=X(i+1) for 2<=i<=K; K-step filiform of dim K+1, degrees (1,1,2,...,K)"},
      {"seven_dim_family", "--k K, K >= 2",
       "7-dim 6-step curve mu_t at t = 4K^2/(K^2+1)^2, rational radicals, degrees 1..7"},
      {"eight_dim", "--a A, A >= 2 (default 2)",
       "8-dim two-step algebra in its integer basis with automorphism diag(B,B,B^-3,B^2)"},
      {"free_two_step", "--r R, R >= 1",
       "R copies of Z^3 plus Lambda^2 Z^3 (dim 3R+3) with diag(A,...,A,Lambda^2 A), A=[[1,1,1],[1,2,2],[1,2,3]]"},
  };
}

/// Looks up a catalog family by name; `param` is k, r or a depending on the
/// family (ignored by heisenberg3).
inline Entry make(const std::string& name, std::optional<long> param) {
  if (name == "heisenberg3") return {heisenberg3(), std::nullopt, {}};
  if (name == "filiform") return {filiform(param.value_or(2)), std::nullopt, {}};
  if (name == "seven_dim_family") return {seven_dim_family(param.value_or(2)), std::nullopt, {}};
  if (name == "eight_dim") return eight_dim_example(param.value_or(2));
  if (name == "free_two_step") return free_two_step_sums(param.value_or(1));
  throw InputError("unknown catalog entry \"" + name + "\"");
}

}  // namespace anolie::catalog

#endif  // ANOLIE_CATALOG_HPP
