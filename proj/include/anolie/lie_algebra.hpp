#ifndef ANOLIE_LIE_ALGEBRA_HPP
#define ANOLIE_LIE_ALGEBRA_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "anolie/matrix.hpp"
#include "anolie/rational.hpp"

namespace anolie {

/// One structure constant: [e_i, e_j] contains c * e_k. Indices are 0-based
/// in memory; files and reports use 1-based indices.
template <typename F>
struct StructureConstant {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  F c;
};

/// Finite-dimensional Lie algebra given by structure constants in a fixed
/// basis e_1..e_d, with an optional grading deg(e_i) >= 1.
///
/// Only brackets [e_i, e_j] with i < j are stored; antisymmetry is implied.
/// The Jacobi identity is not assumed: see jacobi_check.
template <typename F>
class LieAlgebra {
 public:
  using Column = std::map<std::size_t, F>;  // k -> coefficient, never zero
  using Table = std::map<std::pair<std::size_t, std::size_t>, Column>;

  LieAlgebra() = default;

  /// Entries with i > j are stored negated; repeated (i, j, k) entries add up.
  /// A nonzero entry with i == j is rejected.
  LieAlgebra(std::size_t dim, const std::vector<StructureConstant<F>>& constants,
             std::optional<std::vector<int>> degrees = std::nullopt, std::string name = {})
      : dim_(dim), degrees_(std::move(degrees)), name_(std::move(name)) {
    if (dim_ == 0) throw InputError("Lie algebra dimension must be positive");
    for (const auto& sc : constants) {
      if (sc.i >= dim_ || sc.j >= dim_ || sc.k >= dim_)
        throw InputError("structure constant index out of range");
      if (sc.c == F(0)) continue;
      if (sc.i == sc.j) throw InputError("nonzero bracket [e_i, e_i]");
      const bool swap = sc.i > sc.j;
      auto& column = table_[swap ? std::pair{sc.j, sc.i} : std::pair{sc.i, sc.j}];
      F& slot = column[sc.k];
      slot += swap ? F(-sc.c) : sc.c;
    }
    prune();
    if (degrees_) {
      if (degrees_->size() != dim_) throw InputError("degree list length differs from dimension");
      for (int d : *degrees_)
        if (d < 1) throw InputError("grading degrees must be >= 1");
    }
  }

  /// Builds from a bracket function on basis indices; used for basis changes.
  template <typename BracketFn>
  static LieAlgebra from_brackets(std::size_t dim, BracketFn&& basis_bracket,
                                  std::optional<std::vector<int>> degrees = std::nullopt, std::string name = {}) {
    std::vector<StructureConstant<F>> constants;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j) {
        const Vector<F> v = basis_bracket(i, j);
        for (std::size_t k = 0; k < dim; ++k)
          if (v[k] != F(0)) constants.push_back({i, j, k, v[k]});
      }
    return LieAlgebra(dim, constants, std::move(degrees), std::move(name));
  }

  std::size_t dim() const { return dim_; }
  const Table& table() const { return table_; }
  const std::optional<std::vector<int>>& degrees() const { return degrees_; }
  const std::string& name() const { return name_; }

  LieAlgebra with_name(std::string name) const {
    LieAlgebra copy = *this;
    copy.name_ = std::move(name);
    return copy;
  }
  LieAlgebra with_degrees(std::optional<std::vector<int>> degrees) const {
    return LieAlgebra(dim_, constants(), std::move(degrees), name_);
  }

  std::vector<StructureConstant<F>> constants() const {
    std::vector<StructureConstant<F>> out;
    for (const auto& [ij, column] : table_)
      for (const auto& [k, c] : column) out.push_back({ij.first, ij.second, k, c});
    return out;
  }

  /// [e_i, e_j] as a coordinate vector.
  Vector<F> basis_bracket(std::size_t i, std::size_t j) const {
    Vector<F> out(dim_, F(0));
    if (i == j) return out;
    const bool swap = i > j;
    const auto it = table_.find(swap ? std::pair{j, i} : std::pair{i, j});
    if (it == table_.end()) return out;
    for (const auto& [k, c] : it->second) out[k] = swap ? F(-c) : c;
    return out;
  }

  bool abelian() const { return table_.empty(); }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.table_ == b.table_ && a.degrees_ == b.degrees_;
  }
  friend bool operator!=(const LieAlgebra& a, const LieAlgebra& b) { return !(a == b); }

 private:
  void prune() {
    for (auto it = table_.begin(); it != table_.end();) {
      auto& column = it->second;
      for (auto c = column.begin(); c != column.end();) c = c->second == F(0) ? column.erase(c) : std::next(c);
      it = column.empty() ? table_.erase(it) : std::next(it);
    }
  }

  std::size_t dim_ = 0;
  Table table_;
  std::optional<std::vector<int>> degrees_;
  std::string name_;
};

using RationalLieAlgebra = LieAlgebra<Rational>;

/// Bilinear extension of the structure constants.
template <typename F>
Vector<F> bracket(const LieAlgebra<F>& alg, const Vector<F>& x, const Vector<F>& y) {
  if (x.size() != alg.dim() || y.size() != alg.dim()) throw InputError("bracket: vector length differs from dimension");
  Vector<F> out(alg.dim(), F(0));
  for (const auto& [ij, column] : alg.table()) {
    const auto [i, j] = ij;
    const F w = x[i] * y[j] - x[j] * y[i];
    if (w == F(0)) continue;
    for (const auto& [k, c] : column) out[k] += w * c;
  }
  return out;
}

template <typename F>
struct JacobiFailure {
  std::size_t i, j, k;  // 0-based, i < j < k
  Vector<F> residual;
};

/// First triple i < j < k (lexicographic) where the cyclic Jacobi sum is
/// nonzero, or nullopt when the identity holds.
template <typename F>
std::optional<JacobiFailure<F>> jacobi_check(const LieAlgebra<F>& alg) {
  const std::size_t d = alg.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        const auto ei = unit_vector<F>(d, i), ej = unit_vector<F>(d, j), ek = unit_vector<F>(d, k);
        Vector<F> r = bracket(alg, alg.basis_bracket(i, j), ek);
        const Vector<F> r2 = bracket(alg, alg.basis_bracket(j, k), ei);
        const Vector<F> r3 = bracket(alg, alg.basis_bracket(k, i), ej);
        for (std::size_t n = 0; n < d; ++n) r[n] += r2[n] + r3[n];
        if (!is_zero(r)) return JacobiFailure<F>{i, j, k, std::move(r)};
      }
  return std::nullopt;
}

struct CentralSeries {
  std::vector<std::size_t> dims;  // dim n, dim [n,n], dim [n,[n,n]], ...
  bool nilpotent = false;
  /// Nilpotency step (dims.size() - 1) when nilpotent.
  std::size_t step() const { return nilpotent ? dims.size() - 1 : 0; }
};

/// Dimensions of the lower central series C^1 = n, C^{m+1} = [n, C^m]. Stops
/// at 0 (nilpotent) or when the dimension stops dropping (not nilpotent).
template <typename F>
CentralSeries lower_central_series(const LieAlgebra<F>& alg) {
  const std::size_t d = alg.dim();
  CentralSeries series;
  std::vector<Vector<F>> current;
  for (std::size_t i = 0; i < d; ++i) current.push_back(unit_vector<F>(d, i));
  series.dims.push_back(d);
  while (!current.empty()) {
    std::vector<Vector<F>> next;
    for (std::size_t i = 0; i < d; ++i)
      for (const auto& v : current) {
        auto w = bracket(alg, unit_vector<F>(d, i), v);
        if (!is_zero(w)) next.push_back(std::move(w));
      }
    next = span_basis(next, d);
    if (next.size() == current.size()) {
      series.nilpotent = false;
      return series;
    }
    series.dims.push_back(next.size());
    current = std::move(next);
  }
  series.nilpotent = true;
  return series;
}

struct GradingFailure {
  std::size_t i, j, k;  // 0-based
};

/// Checks deg(e_k) = deg(e_i) + deg(e_j) for every nonzero constant.
template <typename F>
std::optional<GradingFailure> grading_check(const LieAlgebra<F>& alg) {
  if (!alg.degrees()) throw InputError("grading check needs degrees");
  const auto& deg = *alg.degrees();
  for (const auto& [ij, column] : alg.table())
    for (const auto& [k, c] : column)
      if (deg[k] != deg[ij.first] + deg[ij.second]) return GradingFailure{ij.first, ij.second, k};
  return std::nullopt;
}

/// a (+) b with block-diagonal brackets; degrees concatenate when both exist.
template <typename F>
LieAlgebra<F> direct_sum(const LieAlgebra<F>& a, const LieAlgebra<F>& b) {
  auto constants = a.constants();
  for (auto sc : b.constants()) {
    sc.i += a.dim();
    sc.j += a.dim();
    sc.k += a.dim();
    constants.push_back(std::move(sc));
  }
  std::optional<std::vector<int>> degrees;
  if (a.degrees() && b.degrees()) {
    degrees = *a.degrees();
    degrees->insert(degrees->end(), b.degrees()->begin(), b.degrees()->end());
  }
  std::string name;
  if (!a.name().empty() || !b.name().empty()) name = a.name() + " + " + b.name();
  return LieAlgebra<F>(a.dim() + b.dim(), constants, std::move(degrees), std::move(name));
}

/// Structure constants in the basis formed by the columns of `basis`
/// (new basis vectors written in old coordinates).
///
/// The grading survives when every new basis vector is homogeneous; otherwise
/// the result is ungraded.
template <typename F>
LieAlgebra<F> change_of_basis(const LieAlgebra<F>& alg, const Matrix<F>& basis) {
  if (basis.rows() != alg.dim() || basis.cols() != alg.dim()) throw InputError("change_of_basis: matrix size differs from dimension");
  if (determinant(basis) == F(0)) throw InputError("change_of_basis: singular basis matrix");
  const Matrix<F> to_new = inverse(basis);
  std::vector<Vector<F>> cols;
  for (std::size_t j = 0; j < alg.dim(); ++j) cols.push_back(basis.column(j));

  std::optional<std::vector<int>> degrees;
  if (alg.degrees()) {
    std::vector<int> nd;
    for (const auto& col : cols) {
      int found = 0;
      bool homogeneous = true;
      for (std::size_t i = 0; i < col.size(); ++i) {
        if (col[i] == F(0)) continue;
        const int di = (*alg.degrees())[i];
        if (found == 0) found = di;
        else if (found != di) homogeneous = false;
      }
      if (!homogeneous) break;
      nd.push_back(found);
    }
    if (nd.size() == alg.dim()) degrees = std::move(nd);
  }
  return LieAlgebra<F>::from_brackets(
      alg.dim(), [&](std::size_t i, std::size_t j) { return to_new * bracket(alg, cols[i], cols[j]); },
      std::move(degrees), alg.name());
}

template <typename F>
struct AbelianFactor {
  bool present = false;
  std::optional<Vector<F>> witness;  // central vector outside [n, n]
};

/// Center of alg: kernel of z -> ([z, e_1], ..., [z, e_d]).
template <typename F>
std::vector<Vector<F>> center(const LieAlgebra<F>& alg) {
  const std::size_t d = alg.dim();
  Matrix<F> ad(d * d, d);
  for (std::size_t col = 0; col < d; ++col)
    for (std::size_t j = 0; j < d; ++j) {
      const auto v = alg.basis_bracket(col, j);
      for (std::size_t k = 0; k < d; ++k) ad(j * d + k, col) = v[k];
    }
  return nullspace(ad);
}

template <typename F>
std::vector<Vector<F>> derived_subalgebra(const LieAlgebra<F>& alg) {
  std::vector<Vector<F>> gens;
  for (const auto& [ij, column] : alg.table()) gens.push_back(alg.basis_bracket(ij.first, ij.second));
  return span_basis(gens, alg.dim());
}

/// A nilpotent algebra splits off a one-dimensional ideal exactly when some
/// central vector lies outside [n, n].
template <typename F>
AbelianFactor<F> has_abelian_factor(const LieAlgebra<F>& alg) {
  const auto derived = derived_subalgebra(alg);
  for (const auto& z : center(alg))
    if (!in_span(derived, z)) return {true, z};
  return {};
}

/// Rescales every basis vector by L = lcm of all constant denominators; the new
/// constants are L times the old ones and therefore integers.
inline std::pair<RationalLieAlgebra, Integer> scale_basis_to_integer(const RationalLieAlgebra& alg) {
  Integer scale = 1;
  for (const auto& sc : alg.constants()) scale = lcm(scale, sc.c.get_den());
  auto constants = alg.constants();
  for (auto& sc : constants) sc.c *= Rational(scale);
  return {RationalLieAlgebra(alg.dim(), constants, alg.degrees(), alg.name()), scale};
}

inline bool has_integer_constants(const RationalLieAlgebra& alg) {
  for (const auto& sc : alg.constants())
    if (!is_integer(sc.c)) return false;
  return true;
}

/// Reorders the basis: new e_m is old e_{order[m]}.
template <typename F>
LieAlgebra<F> permute_basis(const LieAlgebra<F>& alg, const std::vector<std::size_t>& order) {
  Matrix<F> p(alg.dim(), alg.dim());
  for (std::size_t m = 0; m < order.size(); ++m) p(order.at(m), m) = F(1);
  return change_of_basis(alg, p);
}

}  // namespace anolie

#endif  // ANOLIE_LIE_ALGEBRA_HPP
