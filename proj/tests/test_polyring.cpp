#include <gtest/gtest.h>

#include <random>

#include "symspace/groebner.hpp"
#include "symspace/poly.hpp"

using namespace symspace;

namespace {

VarSetPtr xy() { return make_vars({"x", "y"}, {2, 2}); }

Poly random_homogeneous(const VarSetPtr& vars, int degree, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::vector<Term> ts;
  for (const auto& m : monomials_of_degree(*vars, degree)) {
    int c = coef(rng);
    if (c != 0) ts.push_back({m, Rational(c, 1 + (rng() % 3))});
  }
  return Poly::from_terms(vars, ts);
}

// Independent membership oracle: the polynomial is in the ideal of a set of
// monomials iff every term is divisible by one of them.
bool in_monomial_ideal(const Poly& p, const std::vector<Monomial>& gens) {
  for (const auto& t : p.terms()) {
    bool hit = false;
    for (const auto& g : gens) hit = hit || g.divides(t.mono);
    if (!hit) return false;
  }
  return true;
}

}  // namespace

TEST(Symmetric, ElementaryBasics) {
  auto v = make_uniform_vars("x", 3);
  Poly x1 = Poly::variable(v, 0), x2 = Poly::variable(v, 1), x3 = Poly::variable(v, 2);
  EXPECT_EQ(elementary_symmetric(0, v), Poly::constant(v, 1));
  EXPECT_EQ(elementary_symmetric(1, v), x1 + x2 + x3);
  EXPECT_EQ(elementary_symmetric(2, v), x1 * x2 + x1 * x3 + x2 * x3);
  EXPECT_EQ(elementary_symmetric(3, v), x1 * x2 * x3);
  EXPECT_THROW(elementary_symmetric(4, v), IndexOutOfRange);
  EXPECT_THROW(symmetric_in_squares(4, v), IndexOutOfRange);
}

TEST(Symmetric, SquaresTwoVariables) {
  auto v = make_uniform_vars("x", 2);
  Poly x1 = Poly::variable(v, 0), x2 = Poly::variable(v, 1);
  EXPECT_EQ(symmetric_in_squares(1, v), x1 * x1 + x2 * x2);
  EXPECT_EQ(symmetric_in_squares(2, v), x1 * x1 * x2 * x2);
  EXPECT_EQ(symmetric_in_squares(2, v).degree(), 8);
}

TEST(Symmetric, NewtonIdentityUpToEight) {
  for (std::size_t p = 2; p <= 8; ++p) {
    auto v = make_uniform_vars("x", p);
    Poly s1 = elementary_symmetric(1, v), s2 = elementary_symmetric(2, v);
    EXPECT_EQ(s1 * s1 - Rational(2) * s2, symmetric_in_squares(1, v)) << "p=" << p;
  }
}

TEST(Symmetric, CompleteHomogeneousAgainstExpansion) {
  // h_k(x1,x2,x3) by brute force versus the recursion in elementary classes.
  auto x = make_uniform_vars("x", 3);
  auto e = make_uniform_vars("e", 3, 2);
  auto h = complete_in_elementary(5, e);
  std::vector<Poly> images{elementary_symmetric(1, x), elementary_symmetric(2, x), elementary_symmetric(3, x)};
  for (int k = 0; k <= 5; ++k) {
    std::vector<Term> ts;
    for (const auto& m : monomials_of_degree(*x, 2 * k)) ts.push_back({m, 1});
    EXPECT_EQ(h[std::size_t(k)].substitute(images, x), Poly::from_terms(x, ts)) << "k=" << k;
  }
}

TEST(Poly, RingAxiomsRandomized) {
  std::mt19937 rng(7);
  auto v = make_vars({"a", "b", "c"}, {2, 4, 2});
  for (int trial = 0; trial < 25; ++trial) {
    Poly a = random_homogeneous(v, 2 * int(rng() % 3 + 1), rng);
    Poly b = random_homogeneous(v, 2 * int(rng() % 3 + 1), rng);
    Poly c = random_homogeneous(v, 2 * int(rng() % 3 + 1), rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a - a).is_zero());
    for (const auto& t : (a * b).terms()) EXPECT_NE(t.coef, 0);
  }
}

TEST(Poly, GradingIsAdditive) {
  auto v = make_vars({"a", "b"}, {2, 6});
  Poly a = Poly::variable(v, 0), b = Poly::variable(v, 1);
  EXPECT_EQ((a * b).degree(), 8);
  EXPECT_TRUE((a * a * a + b).is_homogeneous());
  EXPECT_FALSE((a + b).is_homogeneous());
}

TEST(Poly, TruncatedProductMatchesFullProduct) {
  std::mt19937 rng(3);
  auto v = make_uniform_vars("x", 3);
  Poly a = Poly::constant(v, 1) + random_homogeneous(v, 2, rng) + random_homogeneous(v, 4, rng);
  Poly b = Poly::constant(v, 1) + random_homogeneous(v, 4, rng) + random_homogeneous(v, 6, rng);
  for (int d = 0; d <= 10; d += 2) EXPECT_EQ(Poly::multiply_truncated(a, b, d), (a * b).truncated(d));
}

TEST(Poly, MismatchedVariablesRejected) {
  Poly a = Poly::variable(xy(), 0);
  Poly b = Poly::variable(make_uniform_vars("z", 2), 0);
  EXPECT_THROW(a + b, VariableMismatch);
}

TEST(Groebner, SquaresIdeal) {
  auto v = xy();
  Poly x = Poly::variable(v, 0), y = Poly::variable(v, 1);
  auto gb = buchberger(v, {x * x, y * y});
  ASSERT_EQ(gb.polys.size(), 2u);
  EXPECT_EQ(quotient_dimension(gb), 4);
  EXPECT_EQ(quotient_monomial_basis(gb, 4).size(), 1u);
  EXPECT_EQ(quotient_monomial_basis(gb, 4)[0], Monomial::unit(0) * Monomial::unit(1));
  EXPECT_TRUE(normal_form(x * x, gb).is_zero());
}

TEST(Groebner, CubeOfSumModSquares) {
  auto v = xy();
  Poly x = Poly::variable(v, 0), y = Poly::variable(v, 1);
  Poly f = (x + y).pow(3);
  auto gb = buchberger(v, {x * x, y * y});
  std::vector<Monomial> gens{Monomial::unit(0, 2), Monomial::unit(1, 2)};
  // Oracle: every term of the expansion lies in the monomial ideal.
  EXPECT_TRUE(in_monomial_ideal(f, gens));
  EXPECT_TRUE(normal_form(f, gb).is_zero());
  // (x+y)^2 = x^2 + 2xy + y^2 leaves exactly 2xy.
  EXPECT_EQ(normal_form((x + y).pow(2), gb), Rational(2) * x * y);
}

TEST(Groebner, UnitIdeal) {
  auto v = xy();
  auto gb = buchberger(v, {Poly::constant(v, 1)});
  EXPECT_TRUE(gb.is_unit());
  EXPECT_EQ(quotient_dimension(gb), 0);
  EXPECT_TRUE(quotient_monomial_basis(gb, 4).empty());
}

TEST(Groebner, NonHomogeneousRejected) {
  auto v = xy();
  Poly x = Poly::variable(v, 0), y = Poly::variable(v, 1);
  EXPECT_THROW(buchberger(v, {x * x + y}), NonHomogeneousInput);
}

TEST(Groebner, NormalFormVariableMismatch) {
  auto v = xy();
  auto gb = buchberger(v, {Poly::variable(v, 0)});
  EXPECT_THROW(normal_form(Poly::variable(make_uniform_vars("z", 2), 0), gb), VariableMismatch);
}

TEST(Groebner, DiiiThreeIdeal) {
  auto v = make_vars({"s1", "s2", "s3"}, {2, 4, 6});
  auto x = make_uniform_vars("x", 3);
  // λ_j written in σ's via subduction by hand: λ1 = s1²-2s2, λ2 = s2²-2s1s3.
  Poly s1 = Poly::variable(v, 0), s2 = Poly::variable(v, 1), s3 = Poly::variable(v, 2);
  Poly l1 = s1 * s1 - Rational(2) * s2;
  Poly l2 = s2 * s2 - Rational(2) * s1 * s3;
  std::vector<Poly> images{elementary_symmetric(1, x), elementary_symmetric(2, x), elementary_symmetric(3, x)};
  ASSERT_EQ(l1.substitute(images, x), symmetric_in_squares(1, x));
  ASSERT_EQ(l2.substitute(images, x), symmetric_in_squares(2, x));
  auto gb = buchberger(v, {l1, l2, s3});
  EXPECT_EQ(quotient_dimension(gb), 4);
  auto hf = quotient_hilbert_function(gb);
  EXPECT_EQ(hf, (std::vector<long long>{1, 0, 1, 0, 1, 0, 1}));
  EXPECT_EQ(quotient_monomial_basis(gb, 2).size(), 1u);
  EXPECT_EQ(normal_form(s1 * s1, gb), normal_form(Rational(2) * s2, gb));
}

TEST(Groebner, NormalFormIsReducedAndIdempotent) {
  std::mt19937 rng(11);
  auto v = make_vars({"a", "b", "c"}, {2, 2, 4});
  Poly a = Poly::variable(v, 0), b = Poly::variable(v, 1), c = Poly::variable(v, 2);
  auto gb = buchberger(v, {a * a * a - b * c, b * b - c, a * c + b * c, c * c});
  auto lms = gb.leading_monomials();
  for (int trial = 0; trial < 20; ++trial) {
    Poly f = random_homogeneous(v, 2 * int(rng() % 5 + 1), rng);
    Poly g = random_homogeneous(v, 2 * int(rng() % 5 + 1), rng);
    Poly nf = normal_form(f, gb);
    EXPECT_EQ(normal_form(nf, gb), nf);
    for (const auto& t : nf.terms()) {
      for (const auto& l : lms) EXPECT_FALSE(l.divides(t.mono));
    }
    EXPECT_EQ(normal_form(f + g, gb), normal_form(f, gb) + normal_form(g, gb));
    EXPECT_EQ(normal_form(f * g, gb), normal_form(normal_form(f, gb) * normal_form(g, gb), gb));
  }
}

TEST(Groebner, SPolynomialsReduceToZero) {
  auto v = make_vars({"a", "b", "c"}, {2, 2, 2});
  Poly a = Poly::variable(v, 0), b = Poly::variable(v, 1), c = Poly::variable(v, 2);
  auto gb = buchberger(v, {a * a + b * c, a * b - c * c, b * b * b});
  for (std::size_t i = 0; i < gb.polys.size(); ++i) {
    for (std::size_t j = i + 1; j < gb.polys.size(); ++j) {
      EXPECT_TRUE(normal_form(detail::s_polynomial(gb.polys[i], gb.polys[j]), gb).is_zero());
    }
  }
}

TEST(Groebner, QuotientRingElementsStayReduced) {
  auto v = xy();
  Poly x = Poly::variable(v, 0), y = Poly::variable(v, 1);
  auto ring = QuotientRing::create(v, {x * x, y * y});
  EXPECT_EQ(ring->top_degree(), 4);
  EXPECT_EQ(ring->dimension(), 4);
  auto e = ring->generator(0) + ring->generator(1);
  EXPECT_EQ((e * e).poly(), Rational(2) * x * y);
  EXPECT_TRUE((e * e * e).is_zero());
}
