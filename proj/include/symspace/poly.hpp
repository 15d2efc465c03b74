#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symspace/errors.hpp"
#include "symspace/monomial.hpp"
#include "symspace/rational.hpp"

namespace symspace {

struct Term {
  Monomial mono;
  Rational coef;
};

/// Sparse polynomial with exact rational coefficients. Terms are kept sorted
/// in decreasing weighted grevlex order with no zero coefficients, so equality
/// is structural and the leading term is terms().front().
class Poly {
 public:
  Poly() = default;
  explicit Poly(VarSetPtr vars) : vars_(std::move(vars)) {}

  static Poly constant(VarSetPtr vars, const Rational& c) { return monomial(std::move(vars), Monomial{}, c); }

  static Poly variable(VarSetPtr vars, std::size_t i) {
    if (i >= vars->size()) throw IndexOutOfRange("variable index out of range");
    Poly p(std::move(vars));
    p.terms_.push_back({Monomial::unit(i), Rational(1)});
    return p;
  }

  static Poly monomial(VarSetPtr vars, const Monomial& m, const Rational& c = 1) {
    Poly p(std::move(vars));
    if (c != 0) p.terms_.push_back({m, c});
    if (!p.terms_.empty()) p.terms_[0].coef.canonicalize();
    return p;
  }

  /// Σ coeffs[i] * x_i.
  static Poly linear_form(VarSetPtr vars, const std::vector<Rational>& coeffs) {
    if (coeffs.size() != vars->size()) throw VariableMismatch("linear form length mismatch");
    std::vector<Term> ts;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] != 0) ts.push_back({Monomial::unit(i), coeffs[i]});
    }
    return from_terms(std::move(vars), std::move(ts));
  }

  /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
  static Poly from_terms(VarSetPtr vars, std::vector<Term> ts) {
    Poly p(std::move(vars));
    for (auto& t : ts) t.coef.canonicalize();
    GrevlexGreater gt{p.vars_.get()};
    std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) { return gt(a.mono, b.mono); });
    for (auto& t : ts) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coef += t.coef;
        if (p.terms_.back().coef == 0) p.terms_.pop_back();
      } else if (t.coef != 0) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  static Poly from_map(VarSetPtr vars, const std::unordered_map<Monomial, Rational, MonomialHash>& acc) {
    Poly p(std::move(vars));
    p.terms_.reserve(acc.size());
    for (const auto& [m, c] : acc) {
      if (c != 0) p.terms_.push_back({m, c});
    }
    GrevlexGreater gt{p.vars_.get()};
    std::sort(p.terms_.begin(), p.terms_.end(),
              [&](const Term& a, const Term& b) { return gt(a.mono, b.mono); });
    return p;
  }

  const VarSetPtr& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.front();
  }

  /// Highest topological degree present; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : vars_->degree(terms_.front().mono); }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = vars_->degree(terms_.front().mono);
    for (const auto& t : terms_) {
      if (vars_->degree(t.mono) != d) return false;
    }
    return true;
  }

  Rational coefficient(const Monomial& m) const {
    for (const auto& t : terms_) {
      if (t.mono == m) return t.coef;
    }
    return 0;
  }

  Rational constant_term() const { return coefficient(Monomial{}); }

  Poly homogeneous_part(int d) const {
    Poly p(vars_);
    for (const auto& t : terms_) {
      if (vars_->degree(t.mono) == d) p.terms_.push_back(t);
    }
    return p;
  }

  /// Drops every term of degree above max_degree.
  Poly truncated(int max_degree) const {
    Poly p(vars_);
    for (const auto& t : terms_) {
      if (vars_->degree(t.mono) <= max_degree) p.terms_.push_back(t);
    }
    return p;
  }

  Poly operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.coef = -t.coef;
    return p;
  }

  Poly& operator+=(const Poly& o) { return *this = add(*this, o, 1); }
  Poly& operator-=(const Poly& o) { return *this = add(*this, o, -1); }
  Poly& operator*=(const Poly& o) { return *this = multiply_truncated(*this, o, -1); }

  Poly& operator*=(const Rational& c) {
    Rational cc = c;
    cc.canonicalize();
    if (cc == 0) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.coef *= cc;
    }
    return *this;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return add(a, b, 1); }
  friend Poly operator-(const Poly& a, const Poly& b) { return add(a, b, -1); }
  friend Poly operator*(const Poly& a, const Poly& b) { return multiply_truncated(a, b, -1); }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (!a.terms_.empty() && !same_vars(a.vars_, b.vars_)) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
    }
    return true;
  }

  /// a*b with every product term above max_degree discarded (max_degree < 0
  /// means no truncation).
  static Poly multiply_truncated(const Poly& a, const Poly& b, int max_degree) {
    check_compatible(a, b);
    const VarSetPtr& vars = a.vars_ ? a.vars_ : b.vars_;
    if (a.is_zero() || b.is_zero()) return Poly(vars);
    if (a.size() == 1 && a.terms_[0].mono.is_one() && max_degree < 0) return b * a.terms_[0].coef;
    if (b.size() == 1 && b.terms_[0].mono.is_one() && max_degree < 0) return a * b.terms_[0].coef;
    std::vector<int> db;
    db.reserve(b.size());
    for (const auto& t : b.terms_) db.push_back(vars->degree(t.mono));
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    Rational tmp;
    for (const auto& ta : a.terms_) {
      int da = vars->degree(ta.mono);
      for (std::size_t j = 0; j < b.terms_.size(); ++j) {
        if (max_degree >= 0 && da + db[j] > max_degree) continue;
        mpq_mul(tmp.get_mpq_t(), ta.coef.get_mpq_t(), b.terms_[j].coef.get_mpq_t());
        auto [it, inserted] = acc.try_emplace(ta.mono * b.terms_[j].mono, tmp);
        if (!inserted) it->second += tmp;
      }
    }
    return from_map(vars, acc);
  }

  Poly pow(unsigned e, int max_degree = -1) const {
    Poly result = constant(vars_, 1);
    Poly base = *this;
    while (e > 0) {
      if (e & 1U) result = multiply_truncated(result, base, max_degree);
      e >>= 1U;
      if (e > 0) base = multiply_truncated(base, base, max_degree);
    }
    return result;
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    if (point.size() != vars_->size()) throw VariableMismatch("evaluation point has wrong length");
    std::vector<std::vector<Rational>> powers(point.size());
    Rational sum = 0;
    for (const auto& t : terms_) {
      Rational v = t.coef;
      for (std::size_t i = 0; i < point.size(); ++i) {
        unsigned e = t.mono[i];
        if (e == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(1);
        while (pw.size() <= e) pw.push_back(pw.back() * point[i]);
        v *= pw[e];
      }
      sum += v;
    }
    return sum;
  }

  /// Replaces variable i by images[i] (all images share one target variable
  /// set). Terms above max_degree in the target are discarded when
  /// max_degree >= 0.
  Poly substitute(const std::vector<Poly>& images, const VarSetPtr& target, int max_degree = -1) const {
    if (images.size() != vars_->size()) throw VariableMismatch("substitution needs one image per variable");
    for (const auto& im : images) {
      if (!im.is_zero() && !same_vars(im.vars_, target)) throw VariableMismatch("substitution image in wrong ring");
    }
    std::vector<std::vector<Poly>> powers(images.size());
    auto power = [&](std::size_t i, unsigned e) -> const Poly& {
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(target, 1));
      while (pw.size() <= e) pw.push_back(multiply_truncated(pw.back(), images[i], max_degree));
      return pw[e];
    };
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    for (const auto& t : terms_) {
      Poly prod = constant(target, t.coef);
      for (std::size_t i = 0; i < images.size() && !prod.is_zero(); ++i) {
        if (t.mono[i] > 0) prod = multiply_truncated(prod, power(i, t.mono[i]), max_degree);
      }
      for (const auto& pt : prod.terms_) {
        auto [it, inserted] = acc.try_emplace(pt.mono, pt.coef);
        if (!inserted) it->second += pt.coef;
      }
    }
    return from_map(target, acc);
  }

  /// Partial derivative with respect to variable i.
  Poly derivative(std::size_t i) const {
    std::vector<Term> ts;
    for (const auto& t : terms_) {
      unsigned e = t.mono[i];
      if (e == 0) continue;
      Monomial m = t.mono;
      m.set(i, e - 1);
      ts.push_back({m, t.coef * e});
    }
    return from_terms(vars_, std::move(ts));
  }

  /// Same polynomial viewed over another variable set of equal size.
  Poly rebased(VarSetPtr vars) const {
    if (vars->size() < used_variable_count()) throw VariableMismatch("rebase target too small");
    return from_terms(std::move(vars), terms_);
  }

  std::size_t used_variable_count() const {
    std::size_t n = 0;
    for (const auto& t : terms_) {
      for (std::size_t i = 0; i < kMaxVariables; ++i) {
        if (t.mono[i] != 0) n = std::max(n, i + 1);
      }
    }
    return n;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      Rational c = t.coef;
      bool neg = c < 0;
      if (neg) c = -c;
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      bool unit = t.mono.is_one();
      if (unit) {
        os << c.get_str();
      } else {
        if (c != 1) os << c.get_str() << "*";
        os << vars_->format(t.mono);
      }
    }
    return os.str();
  }

 private:
  static void check_compatible(const Poly& a, const Poly& b) {
    if (a.vars_ && b.vars_ && !same_vars(a.vars_, b.vars_)) {
      throw VariableMismatch("polynomials live in different variable sets");
    }
  }

  static Poly add(const Poly& a, const Poly& b, int sign) {
    check_compatible(a, b);
    const VarSetPtr& vars = a.vars_ ? a.vars_ : b.vars_;
    Poly r(vars);
    r.terms_.reserve(a.size() + b.size());
    GrevlexGreater gt{vars.get()};
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && gt(a.terms_[i].mono, b.terms_[j].mono))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.size() || gt(b.terms_[j].mono, a.terms_[i].mono)) {
        Term t = b.terms_[j++];
        if (sign < 0) t.coef = -t.coef;
        r.terms_.push_back(std::move(t));
      } else {
        Rational c = a.terms_[i].coef;
        if (sign > 0) {
          c += b.terms_[j].coef;
        } else {
          c -= b.terms_[j].coef;
        }
        if (c != 0) r.terms_.push_back({a.terms_[i].mono, c});
        ++i;
        ++j;
      }
    }
    return r;
  }

  VarSetPtr vars_;
  std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

/// σ_j(x_0, ..., x_{n-1}) over the variables of `vars`; σ_0 = 1.
inline Poly elementary_symmetric(std::size_t j, const VarSetPtr& vars) {
  std::size_t n = vars->size();
  if (j > n) throw IndexOutOfRange("elementary_symmetric: j exceeds number of variables");
  std::vector<Term> ts;
  std::vector<std::size_t> idx(j);
  for (std::size_t i = 0; i < j; ++i) idx[i] = i;
  while (true) {
    Monomial m;
    for (auto i : idx) m.set(i, 1);
    ts.push_back({m, Rational(1)});
    std::size_t k = j;
    while (k > 0 && idx[k - 1] == n - j + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t l = k; l < j; ++l) idx[l] = idx[l - 1] + 1;
  }
  return Poly::from_terms(vars, std::move(ts));
}

/// σ_j of the linear forms `forms` (each a Poly in one common variable set).
inline Poly elementary_of(std::size_t j, const std::vector<Poly>& forms, const VarSetPtr& vars) {
  if (j > forms.size()) throw IndexOutOfRange("elementary_of: j exceeds number of forms");
  // Coefficient of u^j in ∏(1 + u f).
  std::vector<Poly> e(j + 1, Poly(vars));
  e[0] = Poly::constant(vars, 1);
  for (const auto& f : forms) {
    for (std::size_t k = j; k >= 1; --k) e[k] += e[k - 1] * f;
  }
  return e[j];
}

/// λ_j = σ_j(x_1², ..., x_n²).
inline Poly symmetric_in_squares(std::size_t j, const VarSetPtr& vars) {
  if (j > vars->size()) throw IndexOutOfRange("symmetric_in_squares: j exceeds number of variables");
  Poly s = elementary_symmetric(j, vars);
  std::vector<Term> ts;
  for (const auto& t : s.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < vars->size(); ++i) m.set(i, 2U * t.mono[i]);
    ts.push_back({m, t.coef});
  }
  return Poly::from_terms(vars, std::move(ts));
}

/// Complete homogeneous h_0..h_kmax written in elementary classes: the
/// variables of `evars` stand for e_1, e_2, ... and h_k = Σ_i (-1)^{i-1} e_i h_{k-i}.
inline std::vector<Poly> complete_in_elementary(std::size_t kmax, const VarSetPtr& evars) {
  std::vector<Poly> h;
  h.push_back(Poly::constant(evars, 1));
  for (std::size_t k = 1; k <= kmax; ++k) {
    Poly hk(evars);
    for (std::size_t i = 1; i <= std::min(k, evars->size()); ++i) {
      Poly term = Poly::variable(evars, i - 1) * h[k - i];
      if (i % 2 == 1) {
        hk += term;
      } else {
        hk -= term;
      }
    }
    h.push_back(std::move(hk));
  }
  return h;
}

}  // namespace symspace
