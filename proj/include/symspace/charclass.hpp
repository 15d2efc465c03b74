#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "symspace/cohomology.hpp"
#include "symspace/errors.hpp"
#include "symspace/lgenus.hpp"
#include "symspace/linalg.hpp"

namespace symspace {

/// Δ⁺(U) ∖ Δ⁺(K) as linear forms in the torus coordinates.
inline std::vector<LinearForm> complementary_roots(const SpaceId& s) {
  DualPair d = dual_pair(s);
  if (!d.equal_rank || !d.has_model) throw UnsupportedSpace(s.descriptor() + ": no complementary-root model");
  return d.complementary_roots;
}

namespace detail {

inline Poly power_sum_of_forms(const CohomologyPresentation& pres, const std::vector<LinearForm>& forms, unsigned k) {
  Poly s(pres.torus_vars());
  for (const auto& f : forms) s += pres.torus_form(f).pow(k);
  return s;
}

/// e_0..e_n from power sums P_1..P_n (index 0 unused): k e_k = Σ (-1)^{i-1} e_{k-i} P_i.
inline std::vector<RingElement> elementary_from_power_sums(const QuotientRingPtr& ring,
                                                           const std::vector<RingElement>& power) {
  std::size_t n = power.size() - 1;
  std::vector<RingElement> e{ring->one()};
  for (std::size_t k = 1; k <= n; ++k) {
    RingElement v = ring->zero();
    for (std::size_t i = 1; i <= k; ++i) {
      RingElement t = e[k - i] * power[i];
      v = i % 2 ? v + t : v - t;
    }
    e.push_back(Rational(1, long(k)) * v);
  }
  return e;
}

}  // namespace detail

/// Pontrjagin classes p_0..p_kmax (kmax defaults to top/4). Each p_k is
/// e_k(β²) over complementary roots, assembled from the W_K-invariant power
/// sums Σ β^{2i} by Newton's identities inside the ring.
inline std::vector<RingElement> pontrjagin_classes(const CohomologyPresentation& pres, int kmax = -1) {
  if (kmax < 0) kmax = pres.top_degree() / 4;
  const auto& roots = pres.pair().complementary_roots;
  std::vector<RingElement> power{pres.ring()->zero()};
  for (int i = 1; i <= kmax; ++i) {
    power.push_back(pres.from_torus(detail::power_sum_of_forms(pres, roots, unsigned(2 * i))));
  }
  return detail::elementary_from_power_sums(pres.ring(), power);
}

inline RingElement total_pontrjagin(const CohomologyPresentation& pres) {
  RingElement t = pres.ring()->zero();
  for (const auto& p : pontrjagin_classes(pres)) t = t + p;
  return t;
}

/// Weights of 𝔭⁺: complementary roots signed by their pairing with a central
/// element of 𝔨 that is not central in 𝔲.
inline std::vector<LinearForm> chern_weights(const DualPair& d) {
  if (!d.hermitian || !d.has_model) throw NotHermitian(d.space.descriptor() + " is not a Hermitian symmetric space");
  std::size_t dim = d.coords.size();
  RationalMatrix m;
  for (const auto& a : d.k_positive_roots) {
    std::vector<Rational> row(dim);
    for (std::size_t i = 0; i < dim; ++i) row[i] = a[i] * d.gram[i];
    m.push_back(row);
  }
  for (const auto& z : nullspace(m, dim)) {
    std::vector<int> signs;
    for (const auto& b : d.complementary_roots) {
      Rational v = d.inner(z, b);
      signs.push_back(sgn(v));
    }
    if (std::all_of(signs.begin(), signs.end(), [](int x) { return x == 0; })) continue;
    if (std::any_of(signs.begin(), signs.end(), [](int x) { return x == 0; })) break;
    std::vector<LinearForm> out;
    for (std::size_t i = 0; i < signs.size(); ++i) {
      LinearForm w = d.complementary_roots[i];
      if (signs[i] < 0) {
        for (auto& c : w) c = -c;
      }
      out.push_back(w);
    }
    return out;
  }
  throw NotHermitian(d.space.descriptor() + ": no invariant complex structure on the isotropy representation");
}

/// Chern classes c_0..c_kmax of the holomorphic tangent bundle (kmax
/// defaults to top/2), via power sums of the 𝔭⁺ weights.
inline std::vector<RingElement> chern_classes(const CohomologyPresentation& pres, int kmax = -1) {
  auto weights = chern_weights(pres.pair());
  if (kmax < 0) kmax = pres.top_degree() / 2;
  std::vector<RingElement> power{pres.ring()->zero()};
  for (int i = 1; i <= kmax; ++i) {
    power.push_back(pres.from_torus(detail::power_sum_of_forms(pres, weights, unsigned(i))));
  }
  return detail::elementary_from_power_sums(pres.ring(), power);
}

inline RingElement total_chern(const CohomologyPresentation& pres) {
  RingElement t = pres.ring()->zero();
  for (const auto& c : chern_classes(pres)) t = t + c;
  return t;
}

/// ∫ p_{k_1} ··· p_{k_r} for a partition of dim/4.
inline Rational pontrjagin_number(const CohomologyPresentation& pres, const std::vector<int>& partition) {
  int dim = pres.top_degree();
  if (dim % 4 != 0) throw DimensionNotDivisibleBy4(pres.space().descriptor() + " has dimension " + std::to_string(dim));
  int sum = 0;
  int largest = 0;
  for (int k : partition) {
    if (k <= 0) throw InvalidParameters("partition parts must be positive");
    sum += k;
    largest = std::max(largest, k);
  }
  if (sum != dim / 4) throw InvalidParameters("partition must have weight " + std::to_string(dim / 4));
  auto p = pontrjagin_classes(pres, largest);
  RingElement w = pres.ring()->one();
  for (int k : partition) w = w * p[std::size_t(k)];
  return integrate(pres, w);
}

/// Evaluates a polynomial in p1..pn on given Pontrjagin classes.
inline RingElement evaluate_in_pontrjagin(const CohomologyPresentation& pres, const Poly& f,
                                          const std::vector<RingElement>& p) {
  RingElement out = pres.ring()->zero();
  for (const auto& t : f.terms()) {
    RingElement m = pres.ring()->one();
    for (std::size_t i = 0; i < f.vars()->size(); ++i) {
      for (unsigned e = 0; e < t.mono[i]; ++e) m = m * p.at(i + 1);
    }
    out = out + t.coef * m;
  }
  return out;
}

/// ∫ L_{dim/4}(p_1, ...): the signature for the ∫e = +χ orientation, exact.
inline Rational lgenus_signature_exact(const CohomologyPresentation& pres) {
  int dim = pres.top_degree();
  if (dim % 4 != 0) throw DimensionNotDivisibleBy4(pres.space().descriptor() + " has dimension " + std::to_string(dim));
  std::size_t n = std::size_t(dim / 4);
  auto p = pontrjagin_classes(pres, int(n));
  return integrate(pres, evaluate_in_pontrjagin(pres, l_polynomial(n), p));
}

inline long long lgenus_signature(const CohomologyPresentation& pres) {
  Rational s = lgenus_signature_exact(pres);
  if (!is_integer(s)) throw Error("L-genus of " + pres.space().descriptor() + " is not an integer: " + to_fraction_string(s));
  return to_int64(s);
}

/// Quoted closed-form signature data: an exact value, or only a
/// zero/nonzero predicate, or nothing.
struct ClosedFormSignature {
  std::optional<long long> value;
  std::optional<bool> nonzero;
  std::string rule;
};

inline long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline ClosedFormSignature signature_closed_form(const SpaceId& s) {
  ClosedFormSignature out;
  int p = s.p, q = s.q;
  auto set = [&](long long v, const std::string& rule) {
    out.value = v;
    out.nonzero = v != 0;
    out.rule = rule;
  };
  switch (s.family) {
    case Family::AIII:
      if ((p * q) % 2 == 0) set(binomial((p + q) / 2, p / 2), "C(floor((p+q)/2), floor(p/2))");
      break;
    case Family::BDI:
      // G~_{m+n,n} with (m, n) = (p, q).
      if ((p * q) % 4 != 0) break;
      if (p % 2 == 0 && q % 2 == 0 && (p * q) % 8 == 0) {
        set(binomial((p + q) / 4, q / 4), "C(floor((m+n)/4), floor(n/4))");
      } else {
        set(0, "zero unless m, n even and mn = 0 mod 8");
      }
      break;
    case Family::CII:
      out.nonzero = !(p % 2 == 1 && q % 2 == 1);
      if (!*out.nonzero) out.value = 0;
      out.rule = "zero iff p, q both odd";
      break;
    case Family::EIII: set(3, "EIII"); break;
    case Family::FII: set(1, "FII"); break;
    case Family::G2SO4: set(1, "G2/SO(4)"); break;
    default: break;
  }
  return out;
}

}  // namespace symspace
