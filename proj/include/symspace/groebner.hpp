#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "symspace/errors.hpp"
#include "symspace/poly.hpp"

namespace symspace {

/// Reduced Gröbner basis under weighted grevlex; every element is monic.
struct GroebnerBasis {
  VarSetPtr vars;
  std::vector<Poly> polys;
  std::string order = "grevlex";

  bool is_unit() const { return polys.size() == 1 && polys[0].degree() == 0; }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : polys) out.push_back(g.leading().mono);
    return out;
  }
};

namespace detail {

inline Poly make_monic(Poly p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.leading().coef;
  p *= inv;
  return p;
}

/// Reduces `f` fully by `divisors` (monic). Uses an ordered working set so that
/// each step removes the current largest monomial.
inline Poly reduce_full(const Poly& f, const std::vector<Poly>& divisors) {
  const VarSetPtr& vars = f.vars();
  if (f.is_zero()) return f;
  GrevlexGreater gt{vars.get()};
  std::map<Monomial, Rational, GrevlexGreater> work(gt);
  for (const auto& t : f.terms()) work.emplace(t.mono, t.coef);
  std::vector<Term> rem;
  while (!work.empty()) {
    auto it = work.begin();
    Monomial m = it->first;
    Rational c = it->second;
    work.erase(it);
    const Poly* div = nullptr;
    for (const auto& g : divisors) {
      if (g.leading().mono.divides(m)) {
        div = &g;
        break;
      }
    }
    if (!div) {
      rem.push_back({m, c});
      continue;
    }
    Monomial cof = div->leading().mono.cofactor_in(m);
    const auto& gt_terms = div->terms();
    for (std::size_t k = 1; k < gt_terms.size(); ++k) {
      Monomial mm = cof * gt_terms[k].mono;
      Rational delta = -c * gt_terms[k].coef;
      auto [jt, inserted] = work.try_emplace(mm, delta);
      if (!inserted) {
        jt->second += delta;
        if (jt->second == 0) work.erase(jt);
      }
    }
  }
  return Poly::from_terms(vars, std::move(rem));
}

inline Poly s_polynomial(const Poly& f, const Poly& g) {
  const Monomial& mf = f.leading().mono;
  const Monomial& mg = g.leading().mono;
  Monomial l = mf.lcm(mg);
  Poly a = f * Poly::monomial(f.vars(), mf.cofactor_in(l));
  Poly b = g * Poly::monomial(g.vars(), mg.cofactor_in(l));
  return a - b;
}

}  // namespace detail

/// Buchberger's algorithm with the product and chain criteria. Inputs must be
/// homogeneous in the weighted grading and share one variable set.
inline GroebnerBasis buchberger(const VarSetPtr& vars, const std::vector<Poly>& generators) {
  std::vector<Poly> basis;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    if (!same_vars(g.vars(), vars)) throw VariableMismatch("generator in wrong variable set");
    if (!g.is_homogeneous()) throw NonHomogeneousInput("generator is not homogeneous: " + g.to_string());
    basis.push_back(detail::make_monic(g));
  }
  for (const auto& g : basis) {
    if (g.degree() == 0) return GroebnerBasis{vars, {Poly::constant(vars, 1)}};
  }

  struct Pair {
    int degree;
    std::size_t i, j;
  };
  auto pair_less = [](const Pair& a, const Pair& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };
  std::set<Pair, decltype(pair_less)> pairs(pair_less);
  // done[i][j] (i<j) marks pairs that were either processed or discarded.
  std::vector<std::vector<bool>> done;
  auto pair_state = [&](std::size_t i, std::size_t j) -> bool {
    if (i > j) std::swap(i, j);
    return done[j][i];
  };
  auto add_pairs_for = [&](std::size_t j) {
    done.emplace_back(j, false);
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = basis[i].leading().mono.lcm(basis[j].leading().mono);
      pairs.insert(Pair{vars->degree(l), i, j});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  while (!pairs.empty()) {
    Pair pr = *pairs.begin();
    pairs.erase(pairs.begin());
    done[pr.j][pr.i] = true;
    const Monomial& mi = basis[pr.i].leading().mono;
    const Monomial& mj = basis[pr.j].leading().mono;
    if (mi.coprime(mj)) continue;
    Monomial l = mi.lcm(mj);
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis[k].leading().mono.divides(l)) continue;
      if (pair_state(pr.i, k) && pair_state(pr.j, k)) chain = true;
    }
    if (chain) continue;
    Poly s = detail::reduce_full(detail::s_polynomial(basis[pr.i], basis[pr.j]), basis);
    if (s.is_zero()) continue;
    s = detail::make_monic(std::move(s));
    if (s.degree() == 0) return GroebnerBasis{vars, {Poly::constant(vars, 1)}};
    basis.push_back(std::move(s));
    add_pairs_for(basis.size() - 1);
  }

  // Minimalize, then inter-reduce.
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i) continue;
      const Monomial& mk = basis[k].leading().mono;
      const Monomial& mi = basis[i].leading().mono;
      if (mk.divides(mi) && (!(mk == mi) || k < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      if (k != i) others.push_back(minimal[k]);
    }
    Poly lead = Poly::monomial(vars, minimal[i].leading().mono, 1);
    Poly tail = minimal[i] - lead;
    reduced.push_back(lead + detail::reduce_full(tail, others));
  }
  GrevlexGreater gt{vars.get()};
  std::sort(reduced.begin(), reduced.end(),
            [&](const Poly& a, const Poly& b) { return gt(b.leading().mono, a.leading().mono); });
  return GroebnerBasis{vars, std::move(reduced)};
}

/// Fully reduced remainder of p modulo gb.
inline Poly normal_form(const Poly& p, const GroebnerBasis& gb) {
  if (!p.is_zero() && !same_vars(p.vars(), gb.vars)) {
    throw VariableMismatch("normal_form: polynomial and basis use different variables");
  }
  if (p.is_zero()) return Poly(gb.vars);
  return detail::reduce_full(p, gb.polys);
}

/// Standard monomials of the given topological degree.
inline std::vector<Monomial> quotient_monomial_basis(const GroebnerBasis& gb, int degree) {
  std::vector<Monomial> out;
  auto lms = gb.leading_monomials();
  for (const auto& m : monomials_of_degree(*gb.vars, degree)) {
    bool standard = std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); });
    if (standard) out.push_back(m);
  }
  GrevlexGreater gt{gb.vars.get()};
  std::sort(out.begin(), out.end(), gt);
  return out;
}

/// Degree bound for standard monomials, or -1 when the quotient is infinite.
inline int quotient_degree_bound(const GroebnerBasis& gb) {
  if (gb.is_unit()) return -1;
  int bound = 0;
  auto lms = gb.leading_monomials();
  for (std::size_t i = 0; i < gb.vars->size(); ++i) {
    int best = -1;
    for (const auto& l : lms) {
      bool pure = true;
      for (std::size_t k = 0; k < gb.vars->size(); ++k) {
        if (k != i && l[k] != 0) pure = false;
      }
      if (pure && l[i] > 0 && (best < 0 || l[i] < best)) best = l[i];
    }
    if (best < 0) throw Error("quotient ring is not finite dimensional");
    bound += (best - 1) * gb.vars->weight(i);
  }
  return bound;
}

/// Dimensions of the graded quotient pieces, index = topological degree.
inline std::vector<long long> quotient_hilbert_function(const GroebnerBasis& gb) {
  if (gb.is_unit()) return {};
  int bound = quotient_degree_bound(gb);
  std::vector<long long> dims(std::size_t(bound) + 1, 0);
  for (int d = 0; d <= bound; ++d) dims[std::size_t(d)] = (long long)quotient_monomial_basis(gb, d).size();
  while (!dims.empty() && dims.back() == 0) dims.pop_back();
  return dims;
}

inline long long quotient_dimension(const GroebnerBasis& gb) {
  long long s = 0;
  for (auto d : quotient_hilbert_function(gb)) s += d;
  return s;
}

class QuotientRing;
using QuotientRingPtr = std::shared_ptr<const QuotientRing>;

/// Element of a quotient ring, always stored in normal form.
class RingElement {
 public:
  RingElement() = default;
  RingElement(QuotientRingPtr ring, const Poly& p);

  const QuotientRingPtr& ring() const { return ring_; }
  const Poly& poly() const { return nf_; }
  bool is_zero() const { return nf_.is_zero(); }

  RingElement homogeneous_part(int d) const { return RingElement(ring_, nf_.homogeneous_part(d), true); }

  friend RingElement operator+(const RingElement& a, const RingElement& b) {
    check(a, b);
    return RingElement(a.ring_, a.nf_ + b.nf_, true);
  }
  friend RingElement operator-(const RingElement& a, const RingElement& b) {
    check(a, b);
    return RingElement(a.ring_, a.nf_ - b.nf_, true);
  }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const Rational& c, const RingElement& a) {
    return RingElement(a.ring_, a.nf_ * c, true);
  }
  friend bool operator==(const RingElement& a, const RingElement& b) {
    check(a, b);
    return a.nf_ == b.nf_;
  }

  std::string to_string() const { return nf_.to_string(); }

 private:
  RingElement(QuotientRingPtr ring, Poly nf, bool /*already_reduced*/) : ring_(std::move(ring)), nf_(std::move(nf)) {}
  static void check(const RingElement& a, const RingElement& b) {
    if (a.ring_ != b.ring_) throw VariableMismatch("ring elements from different rings");
  }

  QuotientRingPtr ring_;
  Poly nf_;
};

/// ℚ[vars]/I with I given by generators; the Gröbner basis is computed once.
class QuotientRing : public std::enable_shared_from_this<QuotientRing> {
 public:
  static QuotientRingPtr create(VarSetPtr vars, std::vector<Poly> relations) {
    auto r = std::shared_ptr<QuotientRing>(new QuotientRing(std::move(vars), std::move(relations)));
    return r;
  }

  const VarSetPtr& vars() const { return vars_; }
  const std::vector<Poly>& relations() const { return relations_; }
  const GroebnerBasis& groebner() const { return gb_; }

  /// Highest degree carrying a nonzero quotient piece.
  int top_degree() const { return int(hilbert_.size()) - 1; }
  const std::vector<long long>& hilbert_function() const { return hilbert_; }
  long long dimension() const {
    long long s = 0;
    for (auto d : hilbert_) s += d;
    return s;
  }
  std::vector<Monomial> basis(int degree) const { return quotient_monomial_basis(gb_, degree); }

  RingElement element(const Poly& p) const { return RingElement(shared_from_this(), p); }
  RingElement zero() const { return element(Poly(vars_)); }
  RingElement one() const { return element(Poly::constant(vars_, 1)); }
  RingElement generator(std::size_t i) const { return element(Poly::variable(vars_, i)); }

  Poly reduce(const Poly& p) const { return normal_form(p, gb_); }

  /// NF(a*b) with products above the top degree discarded up front (those
  /// vanish in the quotient anyway).
  Poly multiply(const Poly& a, const Poly& b) const {
    return reduce(Poly::multiply_truncated(a, b, top_degree()));
  }

 private:
  QuotientRing(VarSetPtr vars, std::vector<Poly> relations)
      : vars_(std::move(vars)), relations_(std::move(relations)), gb_(buchberger(vars_, relations_)),
        hilbert_(quotient_hilbert_function(gb_)) {}

  VarSetPtr vars_;
  std::vector<Poly> relations_;
  GroebnerBasis gb_;
  std::vector<long long> hilbert_;
};

inline RingElement::RingElement(QuotientRingPtr ring, const Poly& p) : ring_(std::move(ring)) {
  if (!p.is_zero() && !same_vars(p.vars(), ring_->vars())) {
    throw VariableMismatch("element does not belong to this ring");
  }
  nf_ = p.is_zero() ? Poly(ring_->vars()) : ring_->reduce(p);
}

inline RingElement operator*(const RingElement& a, const RingElement& b) {
  RingElement::check(a, b);
  return RingElement(a.ring_, a.ring_->multiply(a.nf_, b.nf_), true);
}

}  // namespace symspace
