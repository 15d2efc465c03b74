#include <gtest/gtest.h>

#include "symspace/charclass.hpp"

using namespace symspace;

namespace {

Poly pvar(const VarSetPtr& pv, std::size_t i) { return Poly::variable(pv, i - 1); }

// Pontrjagin classes from the torus-level product ∏(1+β²), truncated at the
// top degree, each homogeneous part transported separately.
std::vector<RingElement> pontrjagin_by_product(const CohomologyPresentation& pres) {
  int top = pres.top_degree();
  Poly prod = Poly::constant(pres.torus_vars(), 1);
  for (const auto& r : pres.pair().complementary_roots) {
    Poly b = pres.torus_form(r);
    prod = Poly::multiply_truncated(prod, Poly::constant(pres.torus_vars(), 1) + b * b, top);
  }
  std::vector<RingElement> out;
  for (int k = 0; 4 * k <= top; ++k) out.push_back(pres.from_torus(prod.homogeneous_part(4 * k)));
  return out;
}

std::vector<SpaceId> small_supported() {
  return {SpaceId::make(Family::AIII, 1, 2), SpaceId::make(Family::AIII, 2, 2), SpaceId::make(Family::AIII, 2, 3),
          SpaceId::make(Family::CII, 1, 2),  SpaceId::make(Family::CII, 2, 2),  SpaceId::make(Family::DIII, 4),
          SpaceId::make(Family::DIII, 5),    SpaceId::make(Family::CI, 2),      SpaceId::make(Family::CI, 3),
          SpaceId::make(Family::BDI, 2, 4),  SpaceId::make(Family::BDI, 4, 4),  SpaceId::make(Family::BDI, 3, 4),
          SpaceId::make(Family::G2SO4),      SpaceId::make(Family::FII)};
}

// Fixed-point signature: (1/|W_K|) Σ_{w∈W_U} ∏_β sign⟨β, wξ⟩ for a generic ξ,
// summing over the W_U-orbit of ξ.
long long fixed_point_signature(const SpaceId& s) {
  DualPair d = dual_pair(s);
  LinearForm xi;
  for (std::size_t i = 0; i < d.coords.size(); ++i) xi.push_back(Rational(long(7 * i * i + 3 * i + 1), long(5 + i)));
  auto orbit = detail::weyl_orbit(xi, d.u_positive_roots, d.gram, 1000000);
  EXPECT_EQ(orbit.size(), d.u_weyl_order()) << s.descriptor();
  long long total = 0;
  for (const auto& eta : orbit) {
    int sign = 1;
    for (const auto& b : d.complementary_roots) {
      int v = sgn(d.inner(b, eta));
      EXPECT_NE(v, 0);
      sign *= v;
    }
    total += sign;
  }
  EXPECT_EQ(total % (long long)d.k_weyl_order(), 0);
  return total / (long long)d.k_weyl_order();
}

}  // namespace

TEST(LGenus, SeriesCoefficients) {
  auto b = l_series(4);
  EXPECT_EQ(b[0], Rational(1));
  EXPECT_EQ(b[1], Rational(1, 3));
  EXPECT_EQ(b[2], Rational(-1, 45));
  EXPECT_EQ(b[3], Rational(2, 945));
  EXPECT_EQ(b[4], Rational(-1, 4725));
}

TEST(LGenus, FirstPolynomials) {
  auto pv = pontrjagin_vars(1);
  EXPECT_EQ(l_polynomial(1), pvar(pv, 1) * Rational(1, 3));
  auto pv2 = pontrjagin_vars(2);
  EXPECT_EQ(l_polynomial(2), (pvar(pv2, 2) * Rational(7) - pvar(pv2, 1) * pvar(pv2, 1)) * Rational(1, 45));
  auto pv3 = pontrjagin_vars(3);
  auto p1 = pvar(pv3, 1), p2 = pvar(pv3, 2), p3 = pvar(pv3, 3);
  EXPECT_EQ(l_polynomial(3), (p3 * Rational(62) - p1 * p2 * Rational(13) + p1 * p1 * p1 * Rational(2)) * Rational(1, 945));
  auto pv4 = pontrjagin_vars(4);
  auto q1 = pvar(pv4, 1), q2 = pvar(pv4, 2), q3 = pvar(pv4, 3), q4 = pvar(pv4, 4);
  EXPECT_EQ(l_polynomial(4), (q4 * Rational(381) - q3 * q1 * Rational(71) - q2 * q2 * Rational(19) +
                              q2 * q1 * q1 * Rational(22) - q1 * q1 * q1 * q1 * Rational(3)) *
                                 Rational(1, 14175));
}

TEST(LGenus, ProjectiveSpacesHaveSignatureOne) {
  // L_k(p) with p = (1+h²)^{2k+1}, evaluated on h^{2k}, is 1 for ℂP^{2k}.
  for (std::size_t k = 1; k <= 6; ++k) {
    auto l = l_polynomial(k);
    std::vector<Rational> vals;
    for (std::size_t i = 1; i <= k; ++i) vals.push_back(to_rational(binomial(long(2 * k + 1), long(i))));
    EXPECT_EQ(l.evaluate(vals), Rational(1)) << k;
  }
}

TEST(CharClass, ComplementaryRoots) {
  for (int p = 2; p <= 6; ++p) {
    auto roots = complementary_roots(SpaceId::make(Family::DIII, p));
    EXPECT_EQ(int(roots.size()), p * (p - 1) / 2);
    for (const auto& r : roots) {
      int ones = 0;
      for (const auto& c : r) {
        if (c == 1) ++ones;
        else EXPECT_EQ(c, 0);
      }
      EXPECT_EQ(ones, 2);
    }
    auto ci = complementary_roots(SpaceId::make(Family::CI, p));
    EXPECT_EQ(int(ci.size()), p * (p + 1) / 2);
  }
  auto cii = complementary_roots(SpaceId::make(Family::CII, 2, 3));
  EXPECT_EQ(cii.size(), 12u);
  EXPECT_THROW(complementary_roots(SpaceId::make(Family::AI, 4)), UnsupportedSpace);
}

TEST(CharClass, DIIIFirstPontrjaginClass) {
  for (int p = 2; p <= 6; ++p) {
    SCOPED_TRACE(p);
    auto pres = presentation(SpaceId::make(Family::DIII, p));
    auto pc = pontrjagin_classes(pres, 1);
    auto s1 = pres.ring()->generator(0);
    EXPECT_EQ(pc[1], s1 * s1);
    EXPECT_EQ(pc[1], Rational(2) * pres.ring()->generator(1));
  }
}

TEST(CharClass, DIIIPontrjaginNumberNonzero) {
  for (int p = 2; p <= 6; ++p) {
    int d = p * (p - 1) / 2;
    if (d % 2) continue;
    auto pres = presentation(SpaceId::make(Family::DIII, p));
    EXPECT_NE(pontrjagin_number(pres, std::vector<int>(std::size_t(d / 2), 1)), 0) << p;
  }
}

TEST(CharClass, ProjectivePlane) {
  auto pres = presentation(SpaceId::make(Family::AIII, 1, 2));
  auto h = pres.ring()->generator(0);
  auto pc = pontrjagin_classes(pres);
  EXPECT_EQ(pc[1], Rational(3) * h * h);
  EXPECT_EQ(pontrjagin_number(pres, {1}), Rational(3));
  EXPECT_EQ(lgenus_signature(pres), 1);
  auto cc = chern_classes(pres);
  EXPECT_EQ(cc[1], Rational(3) * h);
  EXPECT_EQ(cc[2], Rational(3) * h * h);
}

TEST(CharClass, FirstChernClasses) {
  auto cp1 = presentation(SpaceId::make(Family::AIII, 1, 1));
  EXPECT_EQ(chern_classes(cp1)[1], Rational(2) * cp1.ring()->generator(0));
  auto d3 = presentation(SpaceId::make(Family::DIII, 3));
  EXPECT_EQ(chern_classes(d3)[1], Rational(2) * d3.ring()->generator(0));
  for (int p = 2; p <= 6; ++p) {
    auto pres = presentation(SpaceId::make(Family::DIII, p));
    EXPECT_EQ(chern_classes(pres, 1)[1], Rational(p - 1) * pres.ring()->generator(0)) << p;
  }
  EXPECT_THROW(chern_classes(presentation(SpaceId::make(Family::CII, 1, 2))), NotHermitian);
  EXPECT_THROW(chern_classes(presentation(SpaceId::make(Family::G2SO4))), NotHermitian);
}

TEST(CharClass, CI2FirstPontrjaginClass) {
  // (x1+x2)² + (2x1)² + (2x2)² = 5σ1² - 8σ2, and σ2 = σ1²/2 modulo λ1, so
  // p1 = σ1² (the quadric Q3 has p1 = h² with h = σ1).
  auto pres = presentation(SpaceId::make(Family::CI, 2));
  auto s1 = pres.ring()->generator(0);
  EXPECT_EQ(pontrjagin_classes(pres, 1)[1], s1 * s1);
}

TEST(CharClass, NewtonAssemblyMatchesTorusProduct) {
  for (const auto& s : small_supported()) {
    SCOPED_TRACE(s.descriptor());
    auto pres = presentation(s);
    auto newton = pontrjagin_classes(pres);
    auto direct = pontrjagin_by_product(pres);
    ASSERT_EQ(newton.size(), direct.size());
    for (std::size_t k = 0; k < newton.size(); ++k) EXPECT_EQ(newton[k], direct[k]) << k;
    EXPECT_EQ(total_pontrjagin(pres).homogeneous_part(0), pres.ring()->one());
  }
}

TEST(CharClass, ChernTimesConjugateIsPontrjagin) {
  std::vector<SpaceId> hermitian = {SpaceId::make(Family::AIII, 1, 3), SpaceId::make(Family::AIII, 2, 2),
                                    SpaceId::make(Family::AIII, 2, 3), SpaceId::make(Family::DIII, 4),
                                    SpaceId::make(Family::DIII, 5),    SpaceId::make(Family::CI, 3),
                                    SpaceId::make(Family::BDI, 2, 5),  SpaceId::make(Family::BDI, 4, 2),
                                    SpaceId::make(Family::BDI, 2, 3)};
  for (const auto& s : hermitian) {
    SCOPED_TRACE(s.descriptor());
    auto pres = presentation(s);
    auto c = chern_classes(pres);
    RingElement total = pres.ring()->zero(), conj = pres.ring()->zero();
    for (std::size_t k = 0; k < c.size(); ++k) {
      total = total + c[k];
      conj = k % 2 ? conj - c[k] : conj + c[k];
    }
    RingElement alt = pres.ring()->zero();
    auto p = pontrjagin_classes(pres);
    for (std::size_t k = 0; k < p.size(); ++k) alt = k % 2 ? alt - p[k] : alt + p[k];
    EXPECT_EQ(total * conj, alt);
    // Top Chern class is the Euler class up to the orientation sign.
    auto e = pres.euler_class();
    auto ctop = c[std::size_t(pres.top_degree() / 2)];
    EXPECT_TRUE(ctop == e || ctop == Rational(-1) * e);
  }
}

TEST(CharClass, QuaternionicPontrjaginNumber) {
  auto pres = presentation(SpaceId::make(Family::CII, 1, 2));
  EXPECT_NE(pontrjagin_number(pres, {1, 1}), 0);
}

TEST(CharClass, G2PontrjaginNumber) {
  auto pres = presentation(SpaceId::make(Family::G2SO4));
  EXPECT_NE(pontrjagin_number(pres, {2}), 0);
  EXPECT_THROW(pontrjagin_number(pres, {1}), InvalidParameters);
  EXPECT_THROW(pontrjagin_number(presentation(SpaceId::make(Family::AIII, 1, 1)), {}), DimensionNotDivisibleBy4);
}

TEST(Signature, Examples) {
  EXPECT_EQ(std::abs(lgenus_signature(presentation(SpaceId::make(Family::AIII, 2, 2)))), 2);
  EXPECT_EQ(std::abs(lgenus_signature(presentation(SpaceId::make(Family::G2SO4)))), 1);
  EXPECT_EQ(std::abs(lgenus_signature(presentation(SpaceId::make(Family::BDI, 4, 4)))), 4);
  EXPECT_THROW(lgenus_signature(presentation(SpaceId::make(Family::AIII, 1, 3))), DimensionNotDivisibleBy4);
}

TEST(Signature, LGenusViaLogarithmAgrees) {
  // exp(Σ a_k P_k) computed directly in the ring, against the L-polynomial.
  for (const auto& s : small_supported()) {
    auto pres = presentation(s);
    int top = pres.top_degree();
    if (top % 4) continue;
    SCOPED_TRACE(s.descriptor());
    std::size_t n = std::size_t(top / 4);
    auto a = l_log_series(n);
    std::vector<RingElement> big_a{pres.ring()->zero()};
    for (std::size_t k = 1; k <= n; ++k) {
      Poly ps(pres.torus_vars());
      for (const auto& r : pres.pair().complementary_roots) ps += pres.torus_form(r).pow(unsigned(2 * k));
      big_a.push_back(a[k] * pres.from_torus(ps));
    }
    std::vector<RingElement> e{pres.ring()->one()};
    for (std::size_t m = 1; m <= n; ++m) {
      RingElement v = pres.ring()->zero();
      for (std::size_t k = 1; k <= m; ++k) v = v + Rational(long(k)) * (big_a[k] * e[m - k]);
      e.push_back(Rational(1, long(m)) * v);
    }
    EXPECT_EQ(integrate(pres, e[n]), lgenus_signature_exact(pres));
  }
}

TEST(Signature, ZeroWhenMiddleBettiVanishes) {
  for (const auto& s : small_supported()) {
    auto pres = presentation(s);
    int top = pres.top_degree();
    if (top % 4) continue;
    if (pres.poincare()[std::size_t(top / 2)] == 0) {
      EXPECT_EQ(lgenus_signature(pres), 0) << s.descriptor();
    }
    EXPECT_LE(std::abs(lgenus_signature(pres)), pres.poincare()[std::size_t(top / 2)]) << s.descriptor();
  }
}

TEST(Signature, QuaternionicVanishesIffBothOdd) {
  for (int p = 1; p <= 3; ++p) {
    for (int q = 1; q <= 3; ++q) {
      auto sig = lgenus_signature(presentation(SpaceId::make(Family::CII, p, q)));
      EXPECT_EQ(sig == 0, p % 2 == 1 && q % 2 == 1) << p << "," << q;
    }
  }
}

TEST(Signature, MatchesFixedPointFormula) {
  for (const auto& s : small_supported()) {
    auto pres = presentation(s);
    if (pres.top_degree() % 4) continue;
    EXPECT_EQ(std::abs(lgenus_signature(pres)), std::abs(fixed_point_signature(s))) << s.descriptor();
  }
  for (auto s : {SpaceId::make(Family::BDI, 2, 6), SpaceId::make(Family::BDI, 6, 2), SpaceId::make(Family::CII, 1, 3),
                 SpaceId::make(Family::AIII, 2, 4), SpaceId::make(Family::CI, 4)}) {
    EXPECT_EQ(std::abs(lgenus_signature(presentation(s))), std::abs(fixed_point_signature(s))) << s.descriptor();
  }
}

TEST(Signature, ClosedForms) {
  EXPECT_EQ(signature_closed_form(SpaceId::make(Family::AIII, 2, 3)).value, 2);
  EXPECT_EQ(signature_closed_form(SpaceId::make(Family::AIII, 2, 2)).value, 2);
  EXPECT_FALSE(signature_closed_form(SpaceId::make(Family::AIII, 1, 3)).value.has_value());
  EXPECT_EQ(signature_closed_form(SpaceId::make(Family::BDI, 2, 4)).value, 1);
  EXPECT_EQ(signature_closed_form(SpaceId::make(Family::BDI, 4, 2)).value, 1);
  EXPECT_EQ(signature_closed_form(SpaceId::make(Family::BDI, 4, 4)).value, 2);
  EXPECT_EQ(signature_closed_form(SpaceId::make(Family::BDI, 2, 6)).value, 0);
  EXPECT_FALSE(signature_closed_form(SpaceId::make(Family::BDI, 3, 5)).value.has_value());
  EXPECT_EQ(signature_closed_form(SpaceId::make(Family::EIII)).value, 3);
  EXPECT_EQ(signature_closed_form(SpaceId::make(Family::FII)).value, 1);
  EXPECT_EQ(signature_closed_form(SpaceId::make(Family::G2SO4)).value, 1);
  auto cii = signature_closed_form(SpaceId::make(Family::CII, 2, 3));
  EXPECT_FALSE(cii.value.has_value());
  EXPECT_EQ(cii.nonzero, true);
  EXPECT_EQ(signature_closed_form(SpaceId::make(Family::CII, 1, 3)).nonzero, false);
  EXPECT_FALSE(signature_closed_form(SpaceId::make(Family::AI, 5)).nonzero.has_value());
}

TEST(Signature, AIIIMatchesClosedForm) {
  for (int p = 1; p <= 4; ++p) {
    for (int q = 1; p + q <= 6; ++q) {
      if ((p * q) % 2) continue;
      auto s = SpaceId::make(Family::AIII, p, q);
      EXPECT_EQ(std::abs(lgenus_signature(presentation(s))), *signature_closed_form(s).value) << s.descriptor();
    }
  }
}

TEST(Signature, EIII) {
  auto s = SpaceId::make(Family::EIII);
  auto pres = presentation(s);
  long long sig = lgenus_signature(pres);
  EXPECT_EQ(std::abs(sig), 3);
  EXPECT_EQ(std::abs(sig), std::abs(fixed_point_signature(s)));
  EXPECT_NE(pontrjagin_number(pres, std::vector<int>(8, 1)), 0);
}
