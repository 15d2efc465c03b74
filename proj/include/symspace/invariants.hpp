#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "symspace/errors.hpp"
#include "symspace/linalg.hpp"
#include "symspace/poly.hpp"
#include "symspace/spaces.hpp"

namespace symspace {

namespace detail {

inline Poly form_poly(const VarSetPtr& vars, const LinearForm& f) { return Poly::linear_form(vars, f); }

inline Rational inner_diag(const LinearForm& a, const LinearForm& b, const std::vector<Rational>& gram) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i] * gram[i];
  return s;
}

inline LinearForm reflect(const LinearForm& v, const LinearForm& a, const std::vector<Rational>& gram) {
  Rational c = 2 * inner_diag(v, a, gram) / inner_diag(a, a, gram);
  LinearForm r = v;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= c * a[i];
  return r;
}

/// Positive roots that are not sums of two positive roots.
inline std::vector<LinearForm> simple_roots_of(const std::vector<LinearForm>& positive) {
  std::set<LinearForm> pos(positive.begin(), positive.end());
  std::vector<LinearForm> simple;
  for (const auto& r : positive) {
    bool decomposable = false;
    for (const auto& a : positive) {
      LinearForm diff = r;
      for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= a[i];
      if (pos.count(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(r);
  }
  return simple;
}

inline std::vector<LinearForm> weyl_orbit(const LinearForm& v, const std::vector<LinearForm>& simple,
                                          const std::vector<Rational>& gram, std::size_t cap) {
  std::set<LinearForm> seen{v};
  std::vector<LinearForm> frontier{v};
  while (!frontier.empty() && seen.size() <= cap) {
    std::vector<LinearForm> next;
    for (const auto& w : frontier) {
      for (const auto& a : simple) {
        LinearForm r = reflect(w, a, gram);
        if (seen.insert(r).second) next.push_back(r);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

inline std::vector<Rational> gradient_at(const Poly& f, const std::vector<Rational>& pt) {
  std::vector<Rational> g;
  for (std::size_t i = 0; i < pt.size(); ++i) g.push_back(f.derivative(i).evaluate(pt));
  return g;
}

inline std::vector<Rational> sample_point(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-40, 40);
  std::vector<Rational> pt;
  for (std::size_t i = 0; i < n; ++i) pt.push_back(Rational(dist(rng), 1 + int(rng() % 7)));
  for (auto& v : pt) v.canonicalize();
  return pt;
}

}  // namespace detail

/// Basic invariants of an exceptional Weyl group acting on all coordinates,
/// chosen among power sums over orbits of fundamental weights: for each
/// required degree, the first candidate that raises the Jacobian rank at a
/// sample point is kept. Algebraic independence plus ∏ degrees = |W| makes the
/// result a generating set.
inline std::vector<Poly> exceptional_invariants(const VarSetPtr& vars, const std::vector<LinearForm>& positive_roots,
                                                const std::vector<Rational>& gram, const std::vector<int>& degrees) {
  std::size_t n = vars->size();
  auto simple = detail::simple_roots_of(positive_roots);
  if (simple.size() != n) throw Error("exceptional_invariants: simple root count does not match rank");
  RationalMatrix m(n, std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j) {
    Rational aa = detail::inner_diag(simple[j], simple[j], gram);
    for (std::size_t k = 0; k < n; ++k) m[j][k] = 2 * simple[j][k] * gram[k] / aa;
  }
  std::vector<std::vector<LinearForm>> orbits;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> e(n, 0);
    e[i] = 1;
    auto w = solve_square(m, e);
    if (!w) throw Error("exceptional_invariants: singular Cartan system");
    auto orb = detail::weyl_orbit(*w, simple, gram, 4000);
    if (orb.size() <= 4000) orbits.push_back(std::move(orb));
  }
  std::sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });

  auto pt = detail::sample_point(n, 20240611);
  std::vector<Poly> chosen;
  RationalMatrix jac;
  std::vector<int> sorted = degrees;
  std::sort(sorted.begin(), sorted.end());
  for (int d : sorted) {
    bool found = false;
    for (const auto& orb : orbits) {
      Poly ps(vars);
      for (const auto& mu : orb) ps += detail::form_poly(vars, mu).pow(unsigned(d));
      if (ps.is_zero()) continue;
      auto trial = jac;
      trial.push_back(detail::gradient_at(ps, pt));
      if (matrix_rank(trial) == trial.size()) {
        jac = std::move(trial);
        chosen.push_back(std::move(ps));
        found = true;
        break;
      }
    }
    if (!found) throw Error("exceptional_invariants: no independent invariant of degree " + std::to_string(d));
  }
  return chosen;
}

/// Basic invariants of one Weyl block. `positive_roots`/`gram` are consulted
/// only for exceptional blocks.
inline std::vector<Poly> block_invariants(const WeylBlock& b, const VarSetPtr& vars,
                                          const std::vector<LinearForm>& positive_roots = {},
                                          const std::vector<Rational>& gram = {}) {
  std::vector<Poly> xs;
  for (auto c : b.coords) xs.push_back(Poly::variable(vars, c));
  std::vector<Poly> sq;
  for (const auto& x : xs) sq.push_back(x * x);
  std::vector<Poly> out;
  std::size_t n = xs.size();
  switch (b.kind) {
    case BlockKind::A:
      for (std::size_t j = 1; j <= n; ++j) out.push_back(elementary_of(j, xs, vars));
      break;
    case BlockKind::B:
    case BlockKind::C:
      for (std::size_t j = 1; j <= n; ++j) out.push_back(elementary_of(j, sq, vars));
      break;
    case BlockKind::D:
      for (std::size_t j = 1; j < n; ++j) out.push_back(elementary_of(j, sq, vars));
      if (n >= 1) out.push_back(elementary_of(n, xs, vars));
      break;
    case BlockKind::Torus: out.push_back(xs.at(0)); break;
    case BlockKind::Exceptional:
      if (b.coords.size() != vars->size()) throw Error("exceptional block must span all coordinates");
      out = exceptional_invariants(vars, positive_roots, gram, b.degrees());
      break;
  }
  return out;
}

/// One factor of W_K together with its basic invariants. The factor acts on
/// `coords` only; when `sortable`, all permutations of `coords` lie in it.
struct InvariantBlock {
  std::vector<std::size_t> coords;
  std::vector<Poly> basics;
  bool sortable = true;
};

/// Rewrites polynomials invariant under a reflection group W_K in terms of
/// chosen basic invariants. Works degree by degree: expansions of all basic
/// monomials of that degree are restricted to "canonical" torus monomials
/// (exponents nonincreasing inside each sortable block, legitimate because
/// those permutations lie in W_K), echelonized once, and cached. Blocks use
/// disjoint coordinates, so restricted expansions are outer products of
/// per-block expansions and never need the full torus.
class Subductor {
 public:
  Subductor(VarSetPtr torus, VarSetPtr basic_vars, std::vector<InvariantBlock> blocks)
      : torus_(std::move(torus)), basic_vars_(std::move(basic_vars)), blocks_(std::move(blocks)) {
    std::size_t offset = 0;
    for (const auto& b : blocks_) {
      std::vector<std::string> names;
      std::vector<int> weights;
      for (std::size_t i = 0; i < b.basics.size(); ++i) {
        const Poly& f = b.basics[i];
        if (offset + i >= basic_vars_->size()) throw Error("Subductor: more basics than basic variables");
        if (!f.is_homogeneous() || f.degree() != basic_vars_->weight(offset + i)) {
          throw Error("Subductor: basic invariant degree does not match variable weight");
        }
        names.push_back(basic_vars_->name(offset + i));
        weights.push_back(basic_vars_->weight(offset + i));
        basics_.push_back(f);
      }
      block_vars_.push_back(make_vars(names, weights));
      offsets_.push_back(offset);
      offset += b.basics.size();
    }
    if (offset != basic_vars_->size()) throw Error("Subductor: one variable per basic invariant");
    block_cache_.resize(blocks_.size());
    for (unsigned seed : {101U, 202U}) {
      auto pt = detail::sample_point(torus_->size(), seed);
      std::vector<Rational> vals;
      for (const auto& b : basics_) vals.push_back(b.evaluate(pt));
      check_points_.push_back({pt, vals});
    }
  }

  const VarSetPtr& torus_vars() const { return torus_; }
  const VarSetPtr& basic_vars() const { return basic_vars_; }
  const std::vector<Poly>& basics() const { return basics_; }

  bool is_canonical(const Monomial& m) const {
    for (const auto& blk : blocks_) {
      if (!blk.sortable) continue;
      for (std::size_t i = 1; i < blk.coords.size(); ++i) {
        if (m[blk.coords[i - 1]] < m[blk.coords[i]]) return false;
      }
    }
    return true;
  }

  /// Expresses an invariant polynomial in the basic variables; throws
  /// NotInvariant when that is impossible.
  Poly express(const Poly& f) const {
    if (!f.is_zero() && !same_vars(f.vars(), torus_)) throw VariableMismatch("Subductor: wrong variable set");
    std::map<int, std::vector<Term>> by_degree;
    for (const auto& t : f.terms()) {
      if (is_canonical(t.mono)) by_degree[torus_->degree(t.mono)].push_back(t);
    }
    std::vector<Term> out;
    for (auto& [deg, terms] : by_degree) {
      auto coeffs = solve_degree(deg, terms);
      for (auto& t : coeffs) out.push_back(std::move(t));
    }
    Poly result = Poly::from_terms(basic_vars_, std::move(out));
    for (const auto& [pt, vals] : check_points_) {
      if (f.evaluate(pt) != result.evaluate(vals)) {
        throw NotInvariant("polynomial is not invariant under the isotropy Weyl group");
      }
    }
    return result;
  }

 private:
  using SparseVec = std::map<Monomial, Rational, LexGreater>;
  struct Pivot {
    SparseVec vec;
    std::map<std::size_t, Rational> combo;
  };
  struct DegreeData {
    std::vector<Monomial> columns;  // monomials in the basic variables
    std::vector<Pivot> pivots;
    std::unordered_map<Monomial, std::size_t, MonomialHash> pivot_of_lead;
  };
  struct BlockCache {
    std::unordered_map<Monomial, Poly, MonomialHash> full;           // keyed by block-local monomial
    std::unordered_map<Monomial, std::vector<Term>, MonomialHash> restricted;
  };

  const Poly& block_expansion(std::size_t b, const Monomial& m) const {
    auto& cache = block_cache_[b].full;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    Poly e(torus_);
    if (m.is_one()) {
      e = Poly::constant(torus_, 1);
    } else {
      std::size_t i = 0;
      while (m[i] == 0) ++i;
      Monomial rest = m;
      rest.set(i, m[i] - 1U);
      e = block_expansion(b, rest) * blocks_[b].basics[i];
    }
    return cache.emplace(m, std::move(e)).first->second;
  }

  const std::vector<Term>& block_restricted(std::size_t b, const Monomial& m) const {
    auto& cache = block_cache_[b].restricted;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::vector<Term> r;
    const auto& blk = blocks_[b];
    for (const auto& t : block_expansion(b, m).terms()) {
      bool ok = true;
      if (blk.sortable) {
        for (std::size_t i = 1; i < blk.coords.size() && ok; ++i) ok = t.mono[blk.coords[i - 1]] >= t.mono[blk.coords[i]];
      }
      if (ok) r.push_back(t);
    }
    return cache.emplace(m, std::move(r)).first->second;
  }

  Monomial globalize(std::size_t b, const Monomial& local) const {
    Monomial g;
    for (std::size_t i = 0; i < blocks_[b].basics.size(); ++i) g.set(offsets_[b] + i, local[i]);
    return g;
  }

  const DegreeData& degree_data(int deg) const {
    auto it = cache_.find(deg);
    if (it != cache_.end()) return it->second;
    DegreeData dd;
    // Enumerate splits of `deg` across blocks; the column vector is the outer
    // product of the blocks' restricted expansions.
    std::vector<std::pair<Monomial, SparseVec>> cols;
    std::vector<Monomial> locals(blocks_.size());
    auto rec = [&](auto&& self, std::size_t b, int remaining) -> void {
      if (b == blocks_.size()) {
        if (remaining != 0) return;
        Monomial global;
        std::vector<Term> acc{{Monomial{}, Rational(1)}};
        for (std::size_t k = 0; k < blocks_.size(); ++k) {
          global = global * globalize(k, locals[k]);
          const auto& part = block_restricted(k, locals[k]);
          std::vector<Term> next;
          next.reserve(acc.size() * part.size());
          for (const auto& a : acc) {
            for (const auto& t : part) next.push_back({a.mono * t.mono, a.coef * t.coef});
          }
          acc = std::move(next);
        }
        SparseVec v;
        for (auto& t : acc) v.emplace(t.mono, std::move(t.coef));
        cols.emplace_back(global, std::move(v));
        return;
      }
      for (int d = 0; d <= remaining; d += 2) {
        for (const auto& m : monomials_of_degree(*block_vars_[b], d)) {
          locals[b] = m;
          self(self, b + 1, remaining - d);
        }
      }
    };
    rec(rec, 0, deg);
    for (auto& [mono, vec] : cols) {
      Pivot pv;
      pv.vec = std::move(vec);
      pv.combo.emplace(dd.columns.size(), Rational(1));
      dd.columns.push_back(mono);
      reduce(dd, pv);
      if (pv.vec.empty()) throw Error("Subductor: basic invariants are algebraically dependent");
      dd.pivot_of_lead.emplace(pv.vec.begin()->first, dd.pivots.size());
      dd.pivots.push_back(std::move(pv));
    }
    return cache_.emplace(deg, std::move(dd)).first->second;
  }

  static void reduce(const DegreeData& dd, Pivot& pv) {
    while (!pv.vec.empty()) {
      auto lead = pv.vec.begin();
      auto hit = dd.pivot_of_lead.find(lead->first);
      if (hit == dd.pivot_of_lead.end()) return;
      const Pivot& p = dd.pivots[hit->second];
      Rational a = -lead->second / p.vec.begin()->second;
      for (const auto& [m, c] : p.vec) {
        auto [jt, inserted] = pv.vec.try_emplace(m, a * c);
        if (!inserted) {
          jt->second += a * c;
          if (jt->second == 0) pv.vec.erase(jt);
        }
      }
      for (const auto& [c, v] : p.combo) {
        auto [jt, inserted] = pv.combo.try_emplace(c, a * v);
        if (!inserted) {
          jt->second += a * v;
          if (jt->second == 0) pv.combo.erase(jt);
        }
      }
    }
  }

  std::vector<Term> solve_degree(int deg, const std::vector<Term>& terms) const {
    std::lock_guard<std::mutex> lock(mu_);
    const DegreeData& dd = degree_data(deg);
    Pivot target;
    for (const auto& t : terms) target.vec.emplace(t.mono, t.coef);
    reduce(dd, target);
    if (!target.vec.empty()) throw NotInvariant("polynomial is not in the span of invariant monomials");
    // target + Σ combo[c]·E_c = 0.
    std::vector<Term> out;
    for (const auto& [c, v] : target.combo) out.push_back({dd.columns[c], -v});
    return out;
  }

  VarSetPtr torus_;
  VarSetPtr basic_vars_;
  std::vector<InvariantBlock> blocks_;
  std::vector<Poly> basics_;
  std::vector<VarSetPtr> block_vars_;
  std::vector<std::size_t> offsets_;
  std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> check_points_;
  mutable std::mutex mu_;
  mutable std::map<int, DegreeData> cache_;
  mutable std::vector<BlockCache> block_cache_;
};

}  // namespace symspace
