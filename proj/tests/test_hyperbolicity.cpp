#include <gtest/gtest.h>

#include <random>

#include "anolie/catalog.hpp"
#include "anolie/certificate.hpp"
#include "anolie/hyperbolicity.hpp"
#include "oracles.hpp"

using namespace anolie;

namespace {

IntPolynomial ip(std::initializer_list<long> coeffs) {
  std::vector<Integer> c;
  for (long x : coeffs) c.emplace_back(x);
  return IntPolynomial(std::move(c));
}

RatPolynomial from_oracle(const oracle::Poly& p) { return RatPolynomial(p); }

std::vector<std::vector<mpq_class>> rows_of(const Matrix<Rational>& m) {
  std::vector<std::vector<mpq_class>> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i].push_back(m(i, j));
  return rows;
}

const Matrix<Rational> kLibre = catalog::default_free_two_step_matrix();

}  // namespace

TEST(CharPoly, HyperbolicBlock) {
  for (long a : {2, 3, 5, 10}) EXPECT_EQ(char_poly(hyperbolic_block(a)), to_rational(ip({1, -2 * a, 1})));
  EXPECT_EQ(char_poly(Matrix<Rational>::identity(2)), to_rational(ip({1, -2, 1})));
}

TEST(CharPoly, FreeTwoStepMatrixAgainstCofactorOracle) {
  const auto expected = ip({-1, 5, -6, 1});
  EXPECT_EQ(from_oracle(oracle::char_poly(rows_of(kLibre))), to_rational(expected));
  EXPECT_EQ(char_poly(kLibre), to_rational(expected));
}

TEST(CharPoly, RandomMatricesAgainstCofactorOracle) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> entry(-4, 4), size(1, 5), den(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(size(rng));
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational q(entry(rng), den(rng));
        q.canonicalize();
        m(i, j) = q;
      }
    EXPECT_EQ(char_poly(m), from_oracle(oracle::char_poly(rows_of(m))));
  }
}

TEST(CharPoly, BlockDiagonalIsProduct) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> entry(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Matrix<Rational>> blocks;
    RatPolynomial product{Rational(1)};
    for (std::size_t n : {1u, 2u, 3u}) {
      Matrix<Rational> b(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = entry(rng);
      product = product * char_poly(b);
      blocks.push_back(b);
    }
    EXPECT_EQ(char_poly(block_diagonal(blocks)), product);
  }
}

TEST(Unimodularity, ConstantTerm) {
  EXPECT_TRUE(unimodularity_check(ip({1, -4, 1})));
  EXPECT_FALSE(unimodularity_check(ip({0, -3, 1})));
  EXPECT_TRUE(unimodularity_check(ip({-1, 5, -6, 1})));
  EXPECT_THROW(unimodularity_check(ip({1, 2})), InputError);
}

TEST(Resultant, MatchesProductOverRoots) {
  // Res(x - 2, x^2 - yx + 1) = 4 - 2y + 1.
  for (long y = -3; y <= 3; ++y) EXPECT_EQ(resultant(ip({-2, 1}), ip({1, -y, 1})), 5 - 2 * y);
  EXPECT_EQ(bareiss_determinant(Matrix<Integer>{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(bareiss_determinant(Matrix<Integer>{{2, 3, 1}, {4, 6, 5}, {1, 1, 1}}), 3);
}

TEST(PairTransform, RootsAreMuPlusInverse) {
  const auto r1 = pair_transform(ip({1, -3, 1}));
  EXPECT_EQ(r1(Rational(3)), 0);
  const auto r2 = pair_transform(ip({1, 0, 1}));
  EXPECT_EQ(r2(Rational(0)), 0);
  const auto r3 = pair_transform(ip({-2, 1}));
  EXPECT_EQ(r3(Rational(5, 2)), 0);
  EXPECT_EQ(r3.degree(), 1);
}

TEST(PairTransform, VanishesAtRationalRootImages) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<long> root(-6, 6);
  for (int trial = 0; trial < 30; ++trial) {
    IntPolynomial p = ip({1});
    std::vector<long> roots;
    for (int n = 0; n < 4; ++n) {
      long mu = 0;
      while (mu == 0) mu = root(rng);
      roots.push_back(mu);
      p = p * ip({-mu, 1});
    }
    const auto r = pair_transform(p);
    EXPECT_EQ(r.degree(), p.degree());
    for (long mu : roots) EXPECT_EQ(r(Rational(mu) + Rational(1) / mu), 0);
  }
}

TEST(UnitCircle, FixedCases) {
  EXPECT_FALSE(unit_circle_root_test(ip({1, -4, 1})).has_unit_root);
  const auto i_roots = unit_circle_root_test(ip({1, 0, 1}));
  EXPECT_TRUE(i_roots.has_unit_root);
  EXPECT_EQ(i_roots.witness, UnitCircleResult::Witness::conjugate_pair);
  const auto cyclo = unit_circle_root_test(ip({1, -3, 1}) * ip({1, -1, 1}));
  EXPECT_TRUE(cyclo.has_unit_root);
  EXPECT_EQ(cyclo.witness, UnitCircleResult::Witness::conjugate_pair);
  EXPECT_FALSE(unit_circle_root_test(ip({-1, 5, -6, 1})).has_unit_root);
  EXPECT_FALSE(unit_circle_root_test(ip({-1, 6, -5, 1})).has_unit_root);
  EXPECT_EQ(unit_circle_root_test(ip({-1, 1})).witness, UnitCircleResult::Witness::root_plus_one);
  EXPECT_EQ(unit_circle_root_test(ip({1, 1})).witness, UnitCircleResult::Witness::root_minus_one);
  EXPECT_THROW(unit_circle_root_test(ip({0, 1, 1})), InputError);
}

TEST(UnitCircle, RepeatedUnitRoots) {
  const auto sq = ip({1, 0, 1}) * ip({1, 0, 1});
  EXPECT_TRUE(unit_circle_root_test(sq).has_unit_root);
  // Salem-type: x^4 - x^3 - x^2 - x + 1 has two roots on the circle.
  EXPECT_TRUE(unit_circle_root_test(ip({1, -1, -1, -1, 1})).has_unit_root);
}

TEST(UnitCircle, ReverseGivesSameVerdictAndSwappedSplitting) {
  std::mt19937 rng(21);
  std::uniform_int_distribution<long> coeff(-9, 9), deg(1, 6);
  int checked = 0;
  while (checked < 150) {
    const long n = deg(rng);
    std::vector<Integer> c;
    for (long i = 0; i < n; ++i) c.emplace_back(coeff(rng));
    c.emplace_back(1);
    if (c[0] == 0) continue;
    const IntPolynomial p(c);
    // The reversal is monic only up to sign when the constant term is +-1.
    if (c[0] != 1 && c[0] != -1) continue;
    IntPolynomial rev = p.reversed();
    if (rev.leading() < 0) rev = -rev;
    const auto a = unit_circle_root_test(p), b = unit_circle_root_test(rev);
    EXPECT_EQ(a.has_unit_root, b.has_unit_root);
    if (!a.has_unit_root) {
      const auto sa = classify_splitting(p), sb = classify_splitting(rev);
      EXPECT_EQ(sa.expanding, sb.contracting);
      EXPECT_EQ(sa.contracting, sb.expanding);
    }
    ++checked;
  }
}

TEST(UnitCircle, AgreesWithNumericOracle) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long> coeff(-9, 9), deg(1, 6);
  int agreed = 0, positives = 0;
  while (agreed < 300) {
    const long n = deg(rng);
    std::vector<long> c;
    for (long i = 0; i < n; ++i) c.push_back(coeff(rng));
    c.push_back(1);
    if (c[0] == 0) continue;
    const auto verdict = oracle::numeric_unit_root(c);
    if (!verdict) continue;
    std::vector<Integer> z(c.begin(), c.end());
    ASSERT_EQ(unit_circle_root_test(IntPolynomial(z)).has_unit_root, *verdict) << "polynomial degree " << n;
    positives += *verdict;
    ++agreed;
  }
  EXPECT_GT(positives, 0);
}

TEST(Splitting, ExactCounts) {
  const auto s = classify_splitting(ip({1, -4, 1}));
  EXPECT_EQ(s.expanding, 1);
  EXPECT_EQ(s.contracting, 1);
  EXPECT_EQ(s.mode, ClassificationMode::exact);

  const auto b = hyperbolic_block(2);
  const auto m = block_diagonal<Rational>({b, b, power(b, 2)});
  const auto cp = *integer_coefficients(char_poly(m));
  const auto s2 = classify_splitting(cp);
  EXPECT_EQ(s2.expanding, 3);
  EXPECT_EQ(s2.contracting, 3);
  EXPECT_EQ(s2.mode, ClassificationMode::exact);

  const auto s3 = classify_splitting(ip({-1, 5, -6, 1}));
  EXPECT_EQ(s3.expanding, 1);
  EXPECT_EQ(s3.contracting, 2);
  EXPECT_EQ(s3.mode, ClassificationMode::exact);

  EXPECT_THROW(classify_splitting(ip({1, 0, 1})), InputError);
}

TEST(Splitting, ComplexSpectrumFallsBack) {
  // x^3 + x + 3 has one real root and a complex pair.
  const auto p = ip({3, 1, 0, 1});
  ASSERT_FALSE(unit_circle_root_test(p).has_unit_root);
  const auto s = classify_splitting(p);
  EXPECT_EQ(s.mode, ClassificationMode::numeric_fallback);
  EXPECT_EQ(s.expanding + s.contracting, 3);
  EXPECT_TRUE(s.consistent);
  // |product of roots| = 3 > 1 and real root ~ -1.21, so the pair has modulus ~ 1.57.
  EXPECT_EQ(s.expanding, 3);
}

TEST(Certify, Examples) {
  const auto h3 = catalog::heisenberg3();
  const auto id = certify(h3, Matrix<Rational>::identity(3));
  EXPECT_TRUE(id.automorphism);
  EXPECT_FALSE(id.hyperbolic);
  EXPECT_FALSE(id.anosov);

  Matrix<Rational> d(3, 3);
  d(0, 0) = 2;
  d(1, 1) = 2;
  d(2, 2) = 4;
  const auto c = certify(h3, d);
  EXPECT_TRUE(c.automorphism);
  EXPECT_TRUE(c.integral);
  EXPECT_FALSE(c.unimodular);
  EXPECT_EQ(c.char_poly, to_rational(ip({-16, 20, -8, 1})));
  EXPECT_FALSE(c.anosov);

  const auto f = certify(h3, Matrix<Rational>::diagonal({1, 1, 2}));
  EXPECT_FALSE(f.automorphism);
  ASSERT_FALSE(f.failure_witnesses.empty());
  EXPECT_EQ(f.failure_witnesses.front().kind, "automorphism");

  EXPECT_THROW(certify(h3, Matrix<Rational>::identity(2)), InputError);
}

TEST(Certify, NonIntegralMatrixStillClassified) {
  const RationalLieAlgebra ab(2, {});
  const auto c = certify(ab, Matrix<Rational>{{Rational(3), Rational(0)}, {Rational(0), Rational(1, 2)}});
  EXPECT_TRUE(c.automorphism);
  EXPECT_FALSE(c.integral);
  EXPECT_FALSE(c.unimodular);
  EXPECT_TRUE(c.hyperbolic);
  ASSERT_TRUE(c.splitting);
  EXPECT_EQ(c.splitting->expanding, 1);
  EXPECT_EQ(c.splitting->contracting, 1);
}

TEST(Certify, SingularMatrix) {
  const RationalLieAlgebra ab(2, {});
  const auto c = certify(ab, Matrix<Rational>{{Rational(2), Rational(0)}, {Rational(0), Rational(0)}});
  EXPECT_FALSE(c.unimodular);
  EXPECT_TRUE(c.hyperbolic);
  EXPECT_EQ(c.splitting->contracting, 1);
  EXPECT_EQ(c.splitting->expanding, 1);
}
