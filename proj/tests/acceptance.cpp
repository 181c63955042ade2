// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "anolie/catalog.hpp"
#include "anolie/certificate.hpp"
#include "anolie/cli.hpp"
#include "anolie/doubling.hpp"
#include "anolie/io.hpp"
#include "oracles.hpp"

using namespace anolie;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream notes;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) notes << what;
      else notes << "; " << what;
      ok = false;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Matrix<Rational> mat2(const oracle::Mat2& m) {
  return Matrix<Rational>{{Rational(m.a), Rational(m.b)}, {Rational(m.c), Rational(m.d)}};
}

std::vector<std::vector<mpq_class>> rows_of(const Matrix<Rational>& m) {
  std::vector<std::vector<mpq_class>> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i].push_back(m(i, j));
  return rows;
}

bool certified(const AnosovCertificate& c, long half_dim) {
  return c.anosov && c.splitting && c.splitting->expanding == half_dim && c.splitting->contracting == half_dim &&
         c.splitting->mode == ClassificationMode::exact;
}

// 1. Heisenberg doubling golden test, runtime < 1 s.
void heisenberg_golden(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = double_construction(catalog::heisenberg3(), 2);
  const auto cert = certify(r.doubled, r.matrix);
  const double t = seconds_since(t0);
  const Matrix<Rational> b{{2, 3}, {1, 2}}, b2{{7, 12}, {4, 7}};
  c.expect(mat2(oracle::repeated_power({2, 3, 1, 2}, 2)) == b2, "B^2 oracle mismatch");
  c.expect(r.matrix == block_diagonal<Rational>({b, b, b2}), "matrix is not diag(B,B,B^2)");
  c.expect(determinant(r.matrix) == 1, "det != 1");
  c.expect(!verify_automorphism(r.doubled, r.matrix), "automorphism identity fails");
  c.expect(certified(cert, 3), "certificate not anosov with 3/3 exact splitting");
  c.expect(t < 1.0, "runtime " + std::to_string(t) + " s >= 1 s");
  c.notes << (c.ok ? "" : " | ") << "runtime " << t << " s";
}

// 2. Filiform sharpness: k = 2..10, a in {2, 3}, total runtime < 5 s.
void filiform_sharpness(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  for (long k = 2; k <= 10; ++k) {
    const auto f = catalog::filiform(k);
    for (long a : {2L, 3L}) {
      const auto r = double_construction(f, a);
      const auto series = lower_central_series(r.doubled);
      const std::string tag = "k=" + std::to_string(k) + " a=" + std::to_string(a);
      c.expect(series.nilpotent && series.step() == static_cast<std::size_t>(k), tag + ": step != k");
      c.expect(r.doubled.dim() == static_cast<std::size_t>(2 * k + 2), tag + ": dim != 2k+2");
      c.expect(!min_dimension_lint(r.doubled).warning, tag + ": dimension bound not met");
      c.expect(certified(certify(r.doubled, r.matrix), k + 1), tag + ": not anosov");
    }
  }
  const double t = seconds_since(t0);
  c.expect(t < 5.0, "runtime " + std::to_string(t) + " s >= 5 s");
  c.notes << (c.ok ? "" : " | ") << "runtime " << t << " s";
}

// 3. Seven-dimensional family, k = 2..6.
void seven_dim_family(Check& c) {
  for (long k = 2; k <= 6; ++k) {
    const std::string tag = "k=" + std::to_string(k);
    const auto p = catalog::seven_dim_parameter(k);
    const Rational kk = Rational(k) * k;
    c.expect(p.t == 4 * kk / ((kk + 1) * (kk + 1)), tag + ": t_k");
    c.expect(p.sqrt_t == Rational(2 * k) / (kk + 1) && p.sqrt_t * p.sqrt_t == p.t, tag + ": sqrt(t_k)");
    c.expect(p.sqrt_one_minus_t == (kk - 1) / (kk + 1) && p.sqrt_one_minus_t * p.sqrt_one_minus_t == 1 - p.t,
             tag + ": sqrt(1-t_k)");
    const auto alg = catalog::seven_dim_family(k);
    c.expect(!jacobi_check(alg), tag + ": Jacobi");
    c.expect(alg.degrees() == std::vector<int>{1, 2, 3, 4, 5, 6, 7} && !grading_check(alg), tag + ": grading 1..7");
    c.expect(!has_abelian_factor(alg).present, tag + ": abelian factor");
    const auto [scaled, factor] = scale_basis_to_integer(alg);
    c.expect(has_integer_constants(scaled) && factor == lcm(p.sqrt_t.get_den(), p.sqrt_one_minus_t.get_den()), tag + ": scaling");
    const auto r = double_construction(scaled, 2);
    c.expect(r.doubled.dim() == 14 && certified(certify(r.doubled, r.matrix), 7), tag + ": doubled certificate");
  }
}

// 4. Eight-dimensional example.
void eight_dim(Check& c) {
  const auto e = catalog::eight_dim_example(2);
  const Matrix<Rational> b{{2, 3}, {1, 2}};
  const auto binv3 = mat2(oracle::repeated_power({2, 3, 1, 2}, -3));
  c.expect(binv3 == Matrix<Rational>{{26, -45}, {-15, 26}}, "B^-3 oracle");
  c.expect(e.automorphism && *e.automorphism == block_diagonal<Rational>({b, b, binv3, mat2(oracle::repeated_power({2, 3, 1, 2}, 2))}),
           "matrix is not diag(B,B,B^-3,B^2)");
  c.expect(determinant(*e.automorphism) == 1, "det != 1");
  c.expect(is_integral(*e.automorphism) && has_integer_constants(e.algebra), "not over Z");
  c.expect(certified(certify(e.algebra, *e.automorphism), 4), "certificate not anosov");
}

// 5. Free two-step family, r = 1..4.
void free_two_step(Check& c) {
  const auto a = catalog::default_free_two_step_matrix();
  const auto l2 = catalog::exterior_square(a);
  const RatPolynomial pa{-1, 5, -6, 1}, pl{-1, 6, -5, 1};
  c.expect(RatPolynomial(oracle::char_poly(rows_of(a))) == pa && char_poly(a) == pa, "char_poly(A)");
  c.expect(RatPolynomial(oracle::char_poly(rows_of(l2))) == pl && char_poly(l2) == pl, "char_poly(Lambda^2 A)");
  c.expect(!unit_circle_root_test(*integer_coefficients(pa)).has_unit_root, "A has a unit-modulus root");
  c.expect(!unit_circle_root_test(*integer_coefficients(pl)).has_unit_root, "Lambda^2 A has a unit-modulus root");
  for (long r = 1; r <= 4; ++r) {
    const auto e = catalog::free_two_step_sums(r);
    const auto cert = certify(e.algebra, *e.automorphism);
    c.expect(e.algebra.dim() == static_cast<std::size_t>(3 * r + 3), "r=" + std::to_string(r) + ": dim");
    c.expect(cert.anosov, "r=" + std::to_string(r) + ": not anosov");
  }
}

// 6. Unit-circle test against the numeric companion oracle.
void unit_circle_oracle(Check& c) {
  std::mt19937 rng(20061016);
  std::uniform_int_distribution<long> coeff(-9, 9), deg(1, 6);
  int compared = 0, positives = 0, disagreements = 0, skipped = 0;
  while (compared < 600) {
    const long n = deg(rng);
    std::vector<long> p;
    for (long i = 0; i < n; ++i) p.push_back(coeff(rng));
    p.push_back(1);
    if (p[0] == 0) continue;
    // Off-circle only when every modulus is at least 1e-4 away from 1.
    const auto verdict = oracle::numeric_unit_root(p, 1e-6, 1e-4);
    if (!verdict) {
      ++skipped;
      continue;
    }
    const bool exact = unit_circle_root_test(IntPolynomial(std::vector<Integer>(p.begin(), p.end()))).has_unit_root;
    if (exact != *verdict) ++disagreements;
    positives += *verdict;
    ++compared;
  }
  c.expect(disagreements == 0, std::to_string(disagreements) + " disagreements");
  const auto fixed = [](std::initializer_list<long> xs) {
    std::vector<Integer> z;
    for (long x : xs) z.emplace_back(x);
    return unit_circle_root_test(IntPolynomial(z)).has_unit_root;
  };
  c.expect(fixed({1, 0, 1}), "x^2+1");
  c.expect(fixed({1, -1, 1}), "x^2-x+1");
  c.expect(fixed({-1, 1}), "x-1");
  c.notes << (c.ok ? "" : " | ") << compared << " compared (" << positives << " on-circle), " << skipped << " ambiguous skipped";
}

// 7. Property suite.
void properties(Check& c) {
  std::vector<RationalLieAlgebra> algs{catalog::heisenberg3()};
  for (long k = 2; k <= 10; ++k) algs.push_back(catalog::filiform(k));
  for (long k = 2; k <= 6; ++k) algs.push_back(scale_basis_to_integer(catalog::seven_dim_family(k)).first);
  algs.push_back(catalog::eight_dim_example(2).algebra);
  for (long r = 1; r <= 4; ++r) algs.push_back(catalog::free_two_step_sums(r).algebra);

  for (const auto& alg : algs) {
    c.expect(!jacobi_check(double_construction(alg, 2).doubled), alg.name() + ": doubling breaks Jacobi");
    c.expect(!jacobi_check(direct_sum(alg, catalog::heisenberg3())), alg.name() + ": direct sum breaks Jacobi");
  }

  std::mt19937 rng(7);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (const auto& alg : {algs[3], algs[11], algs.back()}) {
    const std::size_t d = alg.dim();
    Matrix<Rational> p(d, d);
    do {
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) p(i, j) = entry(rng);
    } while (determinant(p) == 0);
    c.expect(change_of_basis(change_of_basis(alg, p), inverse(p)).table() == alg.table(), alg.name() + ": basis round trip");
  }

  std::uniform_int_distribution<long> e6(-6, 6);
  int multiplicative = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Matrix<Rational> a(3, 3), b(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        a(i, j) = e6(rng);
        b(i, j) = e6(rng);
      }
    multiplicative += catalog::exterior_square(a * b) == catalog::exterior_square(a) * catalog::exterior_square(b);
  }
  c.expect(multiplicative == 100, "Lambda^2 multiplicativity failed " + std::to_string(100 - multiplicative) + " times");

  for (std::size_t x = 0; x + 1 < algs.size(); x += 4) {
    const auto& a = algs[x];
    const auto& b = algs[x + 1];
    const auto whole = double_construction(direct_sum(a, b), 2);
    const auto da = double_construction(a, 2), db = double_construction(b, 2);
    std::vector<std::size_t> identity(whole.doubled.dim());
    std::iota(identity.begin(), identity.end(), 0);
    c.expect(permute_basis(whole.doubled, identity).table() == direct_sum(da.doubled, db.doubled).table() &&
                 whole.matrix == block_diagonal<Rational>({da.matrix, db.matrix}),
             a.name() + " + " + b.name() + ": doubling does not commute with direct sum");
  }

  for (const auto& alg : {algs[0], algs[12], algs[15]}) {
    const auto r = double_construction(alg, 3);
    const auto cert = certify(r.doubled, r.matrix, {"doubling", 3, alg.name(), r.degree_grouped_order});
    const auto text = io::dump(io::to_json(cert));
    const auto first = cli::detail::recheck(io::parse_text(text, "cert"));
    const auto second_text = io::dump(io::to_json(first.recomputed));
    const auto second = cli::detail::recheck(io::parse_text(second_text, "cert"));
    c.expect(first.consistent && second.consistent && second_text == text &&
                 io::dump(io::to_json(second.recomputed)) == text,
             alg.name() + ": recheck not idempotent");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"AC1 heisenberg doubling golden", heisenberg_golden},
      {"AC2 filiform sharpness k=2..10", filiform_sharpness},
      {"AC3 seven-dimensional family k=2..6", seven_dim_family},
      {"AC4 eight-dimensional example", eight_dim},
      {"AC5 free two-step family r=1..4", free_two_step},
      {"AC6 unit-circle oracle equivalence", unit_circle_oracle},
      {"AC7 property suite", properties},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Check c;
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << name;
    const auto notes = c.notes.str();
    if (!notes.empty()) std::cout << " -- " << notes;
    std::cout << "\n";
    failed += !c.ok;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed\n" : "all criteria passed\n");
  return failed ? 1 : 0;
}
