#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "symspace/errors.hpp"

namespace symspace {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector over at most kMaxVariables variables. Unused slots are 0,
/// so divisibility and equality never need the variable count.
class Monomial {
 public:
  Monomial() = default;

  std::uint8_t operator[](std::size_t i) const { return exps_[i]; }

  void set(std::size_t i, unsigned e) {
    if (i >= kMaxVariables) throw IndexOutOfRange("monomial variable index out of range");
    if (e > 255) throw Error("monomial exponent overflow");
    exps_[i] = static_cast<std::uint8_t>(e);
  }

  static Monomial unit(std::size_t i, unsigned e = 1) {
    Monomial m;
    m.set(i, e);
    return m;
  }

  Monomial operator*(const Monomial& other) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      unsigned e = unsigned(exps_[i]) + other.exps_[i];
      if (e > 255) throw Error("monomial exponent overflow");
      r.exps_[i] = static_cast<std::uint8_t>(e);
    }
    return r;
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  /// other / *this; caller guarantees divides(other).
  Monomial cofactor_in(const Monomial& other) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = other.exps_[i] - exps_[i];
    return r;
  }

  Monomial lcm(const Monomial& other) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    return r;
  }

  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    }
    return true;
  }

  unsigned total_exponent() const {
    unsigned s = 0;
    for (auto e : exps_) s += e;
    return s;
  }

  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](std::uint8_t e) { return e == 0; });
  }

  bool operator==(const Monomial&) const = default;

  std::size_t hash() const {
    std::uint64_t a = 0, b = 0;
    std::memcpy(&a, exps_.data(), 8);
    std::memcpy(&b, exps_.data() + 8, 8);
    std::uint64_t h = a * 0x9E3779B97F4A7C15ULL;
    h ^= (b + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2));
    return static_cast<std::size_t>(h ^ (h >> 29));
  }

  /// Plain lexicographic comparison on the raw exponent vector (x0 > x1 > ...).
  bool lex_greater(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exps_[i] != other.exps_[i]) return exps_[i] > other.exps_[i];
    }
    return false;
  }

 private:
  std::array<std::uint8_t, kMaxVariables> exps_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.lex_greater(b); }
};

/// Named variables with topological degree weights. The monomial order used
/// everywhere is weighted graded reverse lexicographic.
class VarSet {
 public:
  VarSet(std::vector<std::string> names, std::vector<int> weights)
      : names_(std::move(names)), weights_(std::move(weights)) {
    if (names_.size() != weights_.size()) throw Error("VarSet: names/weights size mismatch");
    if (names_.size() > kMaxVariables) throw Error("VarSet: too many variables");
    for (int w : weights_) {
      if (w <= 0) throw Error("VarSet: weights must be positive");
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  int weight(std::size_t i) const { return weights_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }

  int degree(const Monomial& m) const {
    int d = 0;
    for (std::size_t i = 0; i < names_.size(); ++i) d += int(m[i]) * weights_[i];
    return d;
  }

  /// Weighted grevlex: higher degree first; ties broken by the smaller
  /// exponent in the last differing variable.
  bool greater(const Monomial& a, const Monomial& b) const {
    int da = degree(a), db = degree(b);
    if (da != db) return da > db;
    for (std::size_t i = names_.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }

  bool operator==(const VarSet& other) const {
    return names_ == other.names_ && weights_ == other.weights_;
  }

  std::string format(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += names_[i];
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

inline VarSetPtr make_vars(std::vector<std::string> names, std::vector<int> weights) {
  return std::make_shared<const VarSet>(std::move(names), std::move(weights));
}

/// n variables prefix0..prefix{n-1} (or with 1-based suffixes), all of weight w.
inline VarSetPtr make_uniform_vars(const std::string& prefix, std::size_t n, int weight = 2,
                                   int first_index = 1) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(first_index + int(i)));
  return make_vars(std::move(names), std::vector<int>(n, weight));
}

inline bool same_vars(const VarSetPtr& a, const VarSetPtr& b) {
  return a == b || (a && b && *a == *b);
}

struct GrevlexGreater {
  const VarSet* vars;
  bool operator()(const Monomial& a, const Monomial& b) const { return vars->greater(a, b); }
};

/// All monomials in `vars` of exact weighted degree `degree`.
inline std::vector<Monomial> monomials_of_degree(const VarSet& vars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  Monomial cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (i == vars.size()) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    int w = vars.weight(i);
    for (int e = remaining / w; e >= 0; --e) {
      cur.set(i, unsigned(e));
      rec(i + 1, remaining - e * w);
    }
    cur.set(i, 0);
  };
  rec(0, degree);
  return out;
}

}  // namespace symspace
