#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "symspace/poly.hpp"

namespace symspace {

/// Coefficients b_k of Q(z) = √z / tanh √z = Σ b_k z^k for k ≤ n.
inline std::vector<Rational> l_series(std::size_t n) {
  // Q = C / S with C = Σ z^k/(2k)!, S = Σ z^k/(2k+1)!.
  std::vector<Rational> c(n + 1), s(n + 1), b(n + 1);
  Rational fact = 1;
  for (std::size_t m = 0; m <= 2 * n + 1; ++m) {
    if (m > 0) fact *= Rational(long(m));
    if (m % 2 == 0 && m / 2 <= n) c[m / 2] = 1 / fact;
    if (m % 2 == 1 && m / 2 <= n) s[m / 2] = 1 / fact;
  }
  for (std::size_t k = 0; k <= n; ++k) {
    Rational v = c[k];
    for (std::size_t j = 1; j <= k; ++j) v -= s[j] * b[k - j];
    b[k] = v / s[0];
  }
  return b;
}

/// Coefficients a_k of log Q(z) for 1 ≤ k ≤ n (a_0 = 0).
inline std::vector<Rational> l_log_series(std::size_t n) {
  auto b = l_series(n);
  std::vector<Rational> a(n + 1, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    Rational v = Rational(long(k)) * b[k];
    for (std::size_t j = 1; j < k; ++j) v -= Rational(long(j)) * a[j] * b[k - j];
    a[k] = v / Rational(long(k));
  }
  return a;
}

/// Variables p1..pn with topological weights 4, 8, ...
inline VarSetPtr pontrjagin_vars(std::size_t n) {
  std::vector<std::string> names;
  std::vector<int> weights;
  for (std::size_t i = 1; i <= n; ++i) {
    names.push_back("p" + std::to_string(i));
    weights.push_back(int(4 * i));
  }
  return make_vars(names, weights);
}

/// Power sums s_1..s_n of the Pontrjagin roots written in p1..pn (Newton).
inline std::vector<Poly> power_sums_in_elementary(const VarSetPtr& pv) {
  std::size_t n = pv->size();
  std::vector<Poly> s(n + 1, Poly(pv));
  for (std::size_t k = 1; k <= n; ++k) {
    Poly v(pv);
    for (std::size_t i = 1; i < k; ++i) {
      Poly t = Poly::variable(pv, i - 1) * s[k - i];
      if (i % 2 == 1) v += t;
      else v -= t;
    }
    Poly last = Poly::variable(pv, k - 1) * Rational(long(k));
    if (k % 2 == 1) v += last;
    else v -= last;
    s[k] = std::move(v);
  }
  return s;
}

/// Hirzebruch L-polynomials L_0..L_n in p1..pn: L = exp(Σ a_k s_k) with a_k
/// the log coefficients of √z/tanh √z and s_k the power sums. Memoized.
class LPolynomials {
 public:
  static const std::vector<Poly>& upto(std::size_t n) {
    static std::mutex mu;
    static std::map<std::size_t, std::vector<Poly>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    return cache.emplace(n, build(n)).first->second;
  }

 private:
  static std::vector<Poly> build(std::size_t n) {
    auto pv = pontrjagin_vars(std::max<std::size_t>(n, 1));
    auto a = l_log_series(n);
    auto s = power_sums_in_elementary(pv);
    std::vector<Poly> big_a(n + 1, Poly(pv));
    for (std::size_t k = 1; k <= n; ++k) big_a[k] = s[k] * a[k];
    std::vector<Poly> e(n + 1, Poly(pv));
    e[0] = Poly::constant(pv, 1);
    for (std::size_t m = 1; m <= n; ++m) {
      Poly v(pv);
      for (std::size_t k = 1; k <= m; ++k) v += big_a[k] * e[m - k] * Rational(long(k));
      e[m] = v * Rational(1, long(m));
    }
    return e;
  }
};

/// L_n in p1..pn.
inline Poly l_polynomial(std::size_t n) { return LPolynomials::upto(n)[n]; }

}  // namespace symspace
