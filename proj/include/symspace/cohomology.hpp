#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "symspace/errors.hpp"
#include "symspace/groebner.hpp"
#include "symspace/invariants.hpp"
#include "symspace/spaces.hpp"

namespace symspace {

/// Integer polynomial in t, index = power of t.
using IntPoly = std::vector<long long>;

namespace detail {

inline IntPoly int_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

/// Exact division by (1 - t^k); throws if the remainder is nonzero.
inline IntPoly divide_one_minus(IntPoly a, std::size_t k) {
  // a = (1 - t^k) q  =>  q_i = a_i + q_{i-k}
  if (a.size() <= k) throw Error("Hirsch quotient is not a polynomial");
  IntPoly q(a.size() - k, 0);
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = a[i] + (i >= k ? q[i - k] : 0);
  for (std::size_t i = q.size(); i < a.size(); ++i) {
    long long expect = -(i >= k ? q[i - k] : 0);
    if (a[i] != expect) throw Error("Hirsch quotient is not a polynomial");
  }
  return q;
}

}  // namespace detail

/// ∏(1 - t^{2 d_i(U)}) / ∏(1 - t^{2 d_j(K)}), expanded exactly.
inline IntPoly hirsch_poincare(const SpaceId& s) {
  DualPair d = dual_pair(s);
  if (!d.equal_rank) throw NotEqualRank(s.descriptor() + " is not an equal-rank pair");
  IntPoly num{1};
  for (const auto& b : d.u_blocks) {
    for (int deg : b.degrees()) {
      IntPoly f(std::size_t(2 * deg) + 1, 0);
      f[0] = 1;
      f.back() = -1;
      num = detail::int_mul(num, f);
    }
  }
  for (const auto& b : d.k_blocks) {
    for (int deg : b.degrees()) num = detail::divide_one_minus(num, std::size_t(2 * deg));
  }
  while (num.size() > 1 && num.back() == 0) num.pop_back();
  return num;
}

inline std::string format_int_poly(const IntPoly& p, const std::string& var = "t") {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    long long c = p[i];
    if (c == 0) continue;
    if (!s.empty()) s += c < 0 ? "-" : "+";
    else if (c < 0) s += "-";
    long long a = c < 0 ? -c : c;
    if (i == 0) {
      s += std::to_string(a);
      continue;
    }
    if (a != 1) s += std::to_string(a);
    s += var;
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

/// Integration data: ∫ m0 = factor, where m0 spans the top-degree piece and
/// the Euler class reduces to euler_coefficient·m0.
struct Calibration {
  Monomial top_monomial;
  Rational euler_coefficient;
  Rational factor;
};

/// H*(U/K; ℚ) as ℚ[generators]/I. Generators are the basic W_K invariants
/// (AIII and CII keep only the first block; the second block's classes are
/// determined by c·c' = 1). Torus-level invariants are transported into the
/// ring by subduction.
class CohomologyPresentation {
 public:
  const SpaceId& space() const { return pair_.space; }
  const DualPair& pair() const { return pair_; }
  const VarSetPtr& torus_vars() const { return torus_; }
  const VarSetPtr& generators() const { return ring_->vars(); }
  const QuotientRingPtr& ring() const { return ring_; }
  const std::vector<Poly>& ideal_generators() const { return ring_->relations(); }
  const GroebnerBasis& groebner() const { return ring_->groebner(); }
  const IntPoly& poincare() const { return poincare_; }
  int top_degree() const { return ring_->top_degree(); }
  long long euler_characteristic() const { return (long long)(pair_.u_weyl_order() / pair_.k_weyl_order()); }
  const std::vector<Poly>& u_invariants() const { return u_basics_; }
  const std::vector<Poly>& basic_images() const { return images_; }

  Poly torus_form(const LinearForm& f) const { return Poly::linear_form(torus_, f); }

  /// Image in the ring of a W_K-invariant torus polynomial.
  RingElement from_torus(const Poly& invariant) const {
    Poly in_basics = subductor_->express(invariant);
    return ring_->element(in_basics.substitute(images_, ring_->vars(), top_degree()));
  }

  /// Euler class ∏ β over complementary roots.
  RingElement euler_class() const {
    Poly e = Poly::constant(torus_, 1);
    for (const auto& r : pair_.complementary_roots) e = e * torus_form(r);
    return from_torus(e);
  }

  bool is_calibrated() const {
    std::lock_guard<std::mutex> lock(*mu_);
    return calibration_.has_value();
  }

  /// Calibration, computed from the Euler class on first use.
  const Calibration& calibration() const;

 private:
  friend CohomologyPresentation presentation(const SpaceId&, bool);
  friend CohomologyPresentation calibrate(const CohomologyPresentation&, const RingElement&);
  CohomologyPresentation() = default;

  DualPair pair_;
  VarSetPtr torus_;
  std::shared_ptr<const Subductor> subductor_;
  std::vector<Poly> images_;
  std::vector<Poly> u_basics_;
  QuotientRingPtr ring_;
  IntPoly poincare_;
  std::shared_ptr<std::mutex> mu_ = std::make_shared<std::mutex>();
  mutable std::optional<Calibration> calibration_;
};

/// Sets ∫ m0 = χ/μ from euler_class = μ·m0.
inline CohomologyPresentation calibrate(const CohomologyPresentation& pres, const RingElement& euler_class) {
  if (euler_class.ring() != pres.ring()) throw VariableMismatch("Euler class from a different ring");
  int top = pres.top_degree();
  auto basis = pres.ring()->basis(top);
  if (basis.size() != 1) throw Error("top-degree piece is not one-dimensional");
  Rational mu = euler_class.poly().homogeneous_part(top).coefficient(basis[0]);
  if (mu == 0) throw DegenerateEulerClass("Euler class reduces to zero in " + pres.space().descriptor());
  CohomologyPresentation out = pres;
  out.mu_ = std::make_shared<std::mutex>();
  out.calibration_ = Calibration{basis[0], mu, to_rational(pres.euler_characteristic()) / mu};
  return out;
}

inline const Calibration& CohomologyPresentation::calibration() const {
  std::lock_guard<std::mutex> lock(*mu_);
  if (!calibration_) {
    CohomologyPresentation tmp = calibrate(*this, euler_class());
    calibration_ = tmp.calibration_;
  }
  return *calibration_;
}

namespace detail {

inline std::vector<std::string> generator_prefixes(Family f) {
  switch (f) {
    case Family::AIII:
    case Family::CII: return {"c", "d"};
    case Family::DIII:
    case Family::CI: return {"s"};
    case Family::G2SO4: return {"u", "v"};
    case Family::FII: return {"q"};
    case Family::EIII: return {"q", "t"};
    default: return {"a", "b"};
  }
}

inline std::vector<std::string> block_generator_names(const WeylBlock& b, const std::string& prefix,
                                                      const std::vector<std::string>& coords) {
  std::vector<std::string> out;
  std::size_t n = b.size();
  switch (b.kind) {
    case BlockKind::Torus: out.push_back(coords.at(b.coords.at(0))); break;
    case BlockKind::D:
      for (std::size_t j = 1; j < n; ++j) out.push_back(prefix + std::to_string(j));
      out.push_back(prefix + "e");
      break;
    default:
      for (std::size_t j = 1; j <= b.degrees().size(); ++j) out.push_back(prefix + std::to_string(j));
  }
  return out;
}

}  // namespace detail

/// Builds the presentation. With `calibrated`, the fundamental class is
/// calibrated immediately; otherwise on first integration.
inline CohomologyPresentation presentation(const SpaceId& s, bool calibrated = false) {
  DualPair d = dual_pair(s);
  if (!d.equal_rank) throw UnsupportedSpace(s.descriptor() + ": cohomology ring needs an equal-rank pair");
  if (!d.has_model) throw UnsupportedSpace(s.descriptor() + ": no torus model for this family");

  CohomologyPresentation pres;
  pres.pair_ = d;
  pres.poincare_ = hirsch_poincare(s);
  std::vector<int> torus_weights(d.coords.size(), 2);
  pres.torus_ = make_vars(d.coords, torus_weights);
  const VarSetPtr& torus = pres.torus_;

  auto prefixes = detail::generator_prefixes(s.family);
  std::vector<InvariantBlock> blocks;
  std::vector<std::string> names;
  std::vector<int> weights;
  std::vector<std::size_t> block_start;
  for (std::size_t i = 0; i < d.k_blocks.size(); ++i) {
    const auto& b = d.k_blocks[i];
    InvariantBlock ib{b.coords, block_invariants(b, torus, d.k_positive_roots, d.gram), b.permutes_freely()};
    auto bn = detail::block_generator_names(b, prefixes[std::min(i, prefixes.size() - 1)], d.coords);
    if (bn.size() != ib.basics.size()) throw Error("generator naming mismatch");
    block_start.push_back(names.size());
    for (std::size_t j = 0; j < bn.size(); ++j) {
      names.push_back(bn[j]);
      weights.push_back(ib.basics[j].degree());
    }
    blocks.push_back(std::move(ib));
  }
  auto basic_vars = make_vars(names, weights);
  pres.subductor_ = std::make_shared<Subductor>(torus, basic_vars, blocks);

  for (const auto& b : d.u_blocks) {
    for (auto& f : block_invariants(b, torus, d.u_positive_roots, d.gram)) pres.u_basics_.push_back(std::move(f));
  }

  bool split = (s.family == Family::AIII || s.family == Family::CII) && blocks.size() == 2;
  std::vector<Poly> relations;
  if (split) {
    // Generators c_j of the first block; the second block's classes are
    // (-1)^k h_k(c), and the relations are h_{q+1}, ..., h_{q+p}.
    std::size_t p = blocks[0].basics.size(), q = blocks[1].basics.size();
    std::vector<std::string> cn(names.begin(), names.begin() + long(p));
    std::vector<int> cw(weights.begin(), weights.begin() + long(p));
    auto cvars = make_vars(cn, cw);
    auto h = complete_in_elementary(p + q, cvars);
    for (std::size_t j = 0; j < p; ++j) pres.images_.push_back(Poly::variable(cvars, j));
    for (std::size_t k = 1; k <= q; ++k) pres.images_.push_back(k % 2 ? -h[k] : h[k]);
    for (std::size_t k = q + 1; k <= q + p; ++k) relations.push_back(h[k]);
    pres.ring_ = QuotientRing::create(cvars, relations);
  } else {
    for (std::size_t j = 0; j < names.size(); ++j) pres.images_.push_back(Poly::variable(basic_vars, j));
    for (const auto& f : pres.u_basics_) relations.push_back(pres.subductor_->express(f));
    pres.ring_ = QuotientRing::create(basic_vars, relations);
  }
  if (calibrated) pres.calibration();
  return pres;
}

/// ∫ ω: the coefficient of m0 in the top-degree part, times the calibration.
/// Classes of lower degree integrate to 0.
inline Rational integrate(const CohomologyPresentation& pres, const RingElement& w) {
  if (w.ring() != pres.ring()) throw VariableMismatch("integrand from a different ring");
  if (w.is_zero()) return 0;
  const auto& cal = pres.calibration();
  return w.poly().homogeneous_part(pres.top_degree()).coefficient(cal.top_monomial) * cal.factor;
}

/// ∫ of a polynomial in the generators; throws DegreeAboveTop when some term
/// lies above the top degree.
inline Rational integrate(const CohomologyPresentation& pres, const Poly& w) {
  for (const auto& t : w.terms()) {
    if (pres.generators()->degree(t.mono) > pres.top_degree()) {
      throw DegreeAboveTop("integrand has degree above " + std::to_string(pres.top_degree()));
    }
  }
  return integrate(pres, pres.ring()->element(w));
}

}  // namespace symspace
