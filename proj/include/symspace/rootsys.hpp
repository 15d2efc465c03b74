#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "symspace/classification.hpp"
#include "symspace/errors.hpp"

namespace symspace {

enum class RootLabel { A, B, C, D, E6, E7, E8, F4, G2 };

using IntVec = std::vector<long long>;
using IntMatrix = std::vector<std::vector<int>>;

inline std::string to_string(RootLabel l) {
  switch (l) {
    case RootLabel::A: return "A";
    case RootLabel::B: return "B";
    case RootLabel::C: return "C";
    case RootLabel::D: return "D";
    case RootLabel::E6: return "E6";
    case RootLabel::E7: return "E7";
    case RootLabel::E8: return "E8";
    case RootLabel::F4: return "F4";
    case RootLabel::G2: return "G2";
  }
  return "?";
}

/// Accepts A, B, C, D, E6, E7, E8, F4, G2 (case-insensitive). "E", "F", "G"
/// alone are resolved by `rank`.
inline RootLabel parse_root_label(std::string text, int rank) {
  for (auto& ch : text) ch = char(std::toupper(static_cast<unsigned char>(ch)));
  if (text == "A") return RootLabel::A;
  if (text == "B") return RootLabel::B;
  if (text == "C") return RootLabel::C;
  if (text == "D") return RootLabel::D;
  if (text == "E6" || (text == "E" && rank == 6)) return RootLabel::E6;
  if (text == "E7" || (text == "E" && rank == 7)) return RootLabel::E7;
  if (text == "E8" || (text == "E" && rank == 8)) return RootLabel::E8;
  if (text == "F4" || (text == "F" && rank == 4)) return RootLabel::F4;
  if (text == "G2" || (text == "G" && rank == 2)) return RootLabel::G2;
  throw InvalidType("unknown root system label '" + text + "' with rank " + std::to_string(rank));
}

struct RootSystem {
  RootLabel label = RootLabel::A;
  int rank = 0;
  /// Simple and positive roots in ambient orthonormal coordinates, scaled to
  /// integers (scale factor recorded in `ambient_scale`).
  std::vector<IntVec> simple_roots;
  std::vector<IntVec> positive_roots;
  /// Positive roots as nonnegative integer combinations of simple roots.
  std::vector<IntVec> positive_roots_simple;
  std::uint64_t weyl_order = 1;
  std::vector<int> invariant_degrees;
  IntMatrix cartan_matrix;
  int ambient_scale = 1;

  int dimension() const { return rank + 2 * int(positive_roots.size()); }
  std::string name() const {
    std::string s = to_string(label);
    if (label == RootLabel::A || label == RootLabel::B || label == RootLabel::C || label == RootLabel::D) {
      s += std::to_string(rank);
    }
    return s;
  }
};

namespace detail {

inline long long dot(const IntVec& a, const IntVec& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline IntVec unit_vec(std::size_t dim, std::size_t i, long long v = 1) {
  IntVec e(dim, 0);
  e[i] = v;
  return e;
}

inline IntVec combo(std::size_t dim, std::initializer_list<std::pair<std::size_t, long long>> parts) {
  IntVec e(dim, 0);
  for (auto [i, v] : parts) e[i] += v;
  return e;
}

inline std::vector<IntVec> simple_roots_for(RootLabel label, int n, int& scale) {
  std::vector<IntVec> s;
  scale = 1;
  auto ediff = [](std::size_t dim, std::size_t i, std::size_t j) { return combo(dim, {{i, 1}, {j, -1}}); };
  switch (label) {
    case RootLabel::A:
      for (int i = 0; i < n; ++i) s.push_back(ediff(std::size_t(n + 1), std::size_t(i), std::size_t(i + 1)));
      break;
    case RootLabel::B:
    case RootLabel::C:
    case RootLabel::D: {
      auto dim = std::size_t(n);
      for (int i = 0; i + 1 < n; ++i) s.push_back(ediff(dim, std::size_t(i), std::size_t(i + 1)));
      if (label == RootLabel::B) s.push_back(unit_vec(dim, dim - 1));
      if (label == RootLabel::C) s.push_back(unit_vec(dim, dim - 1, 2));
      if (label == RootLabel::D) s.push_back(combo(dim, {{dim - 2, 1}, {dim - 1, 1}}));
      break;
    }
    case RootLabel::G2:
      s.push_back(IntVec{1, -1, 0});
      s.push_back(IntVec{-2, 1, 1});
      break;
    case RootLabel::F4:
      scale = 2;
      s.push_back(IntVec{0, 2, -2, 0});
      s.push_back(IntVec{0, 0, 2, -2});
      s.push_back(IntVec{0, 0, 0, 2});
      s.push_back(IntVec{1, -1, -1, -1});
      break;
    case RootLabel::E6:
    case RootLabel::E7:
    case RootLabel::E8: {
      scale = 2;
      std::vector<IntVec> e8;
      e8.push_back(IntVec{1, -1, -1, -1, -1, -1, -1, 1});
      e8.push_back(IntVec{2, 2, 0, 0, 0, 0, 0, 0});
      for (std::size_t i = 0; i < 6; ++i) e8.push_back(combo(8, {{i + 1, 2}, {i, -2}}));
      s.assign(e8.begin(), e8.begin() + n);
      break;
    }
  }
  return s;
}

inline bool valid_type(RootLabel label, int rank) {
  switch (label) {
    case RootLabel::A: return rank >= 1;
    case RootLabel::B:
    case RootLabel::C: return rank >= 2;
    case RootLabel::D: return rank >= 3;
    case RootLabel::E6: return rank == 6;
    case RootLabel::E7: return rank == 7;
    case RootLabel::E8: return rank == 8;
    case RootLabel::F4: return rank == 4;
    case RootLabel::G2: return rank == 2;
  }
  return false;
}

}  // namespace detail

/// Cartan matrix A_ij = 2(α_i, α_j)/(α_i, α_i) from simple roots.
inline IntMatrix cartan_from_simple(const std::vector<IntVec>& simple) {
  std::size_t n = simple.size();
  IntMatrix a(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = int(2 * detail::dot(simple[i], simple[j]) / detail::dot(simple[i], simple[i]));
    }
  }
  return a;
}

/// Positive roots in simple-root coordinates by closing {α_i} under simple
/// reflections s_i β = β - (Σ_j β_j A_ij) α_i, keeping positive images.
inline std::vector<IntVec> positive_roots_by_reflection(const IntMatrix& cartan) {
  std::size_t n = cartan.size();
  std::set<IntVec> seen;
  std::vector<IntVec> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const auto& b : frontier) {
      for (std::size_t i = 0; i < n; ++i) {
        long long pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += b[j] * cartan[i][j];
        IntVec r = b;
        r[i] -= pairing;
        bool positive = std::all_of(r.begin(), r.end(), [](long long v) { return v >= 0; });
        if (positive && seen.insert(r).second) next.push_back(r);
      }
    }
    frontier = std::move(next);
  }
  std::vector<IntVec> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const IntVec& a, const IntVec& b) {
    long long ha = 0, hb = 0;
    for (auto v : a) ha += v;
    for (auto v : b) hb += v;
    if (ha != hb) return ha < hb;
    return a > b;
  });
  return out;
}

/// Degrees of basic invariants from the height distribution of positive roots:
/// the number of exponents >= k equals the number of roots of height k.
inline std::vector<int> degrees_from_heights(const std::vector<IntVec>& positive_simple) {
  std::map<int, int> by_height;
  int max_h = 0;
  for (const auto& r : positive_simple) {
    int h = 0;
    for (auto v : r) h += int(v);
    ++by_height[h];
    max_h = std::max(max_h, h);
  }
  std::vector<int> degrees;
  for (int k = 1; k <= max_h; ++k) {
    int here = by_height[k];
    int above = by_height.count(k + 1) ? by_height[k + 1] : 0;
    for (int c = 0; c < here - above; ++c) degrees.push_back(k + 1);
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

inline RootSystem build_root_system(RootLabel label, int rank) {
  if (!detail::valid_type(label, rank)) {
    throw InvalidType("invalid root system " + to_string(label) + " of rank " + std::to_string(rank));
  }
  RootSystem rs;
  rs.label = label;
  rs.rank = rank;
  rs.simple_roots = detail::simple_roots_for(label, rank, rs.ambient_scale);
  rs.cartan_matrix = cartan_from_simple(rs.simple_roots);
  rs.positive_roots_simple = positive_roots_by_reflection(rs.cartan_matrix);
  std::size_t dim = rs.simple_roots[0].size();
  for (const auto& c : rs.positive_roots_simple) {
    IntVec v(dim, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t k = 0; k < dim; ++k) v[k] += c[i] * rs.simple_roots[i][k];
    }
    rs.positive_roots.push_back(v);
  }
  rs.invariant_degrees = degrees_from_heights(rs.positive_roots_simple);
  for (int d : rs.invariant_degrees) rs.weyl_order *= std::uint64_t(d);
  return rs;
}

inline RootSystem build_root_system(const std::string& label, int rank) {
  return build_root_system(parse_root_label(label, rank), rank);
}

struct DiagramAutomorphism {
  std::vector<int> permutation;  // 0-based image of each node
  int sign = 1;

  /// Disjoint-cycle notation with 1-based nodes, "id" for the identity.
  std::string cycles() const {
    std::string s;
    std::vector<bool> seen(permutation.size(), false);
    for (std::size_t i = 0; i < permutation.size(); ++i) {
      if (seen[i] || permutation[i] == int(i)) continue;
      s += "(";
      std::size_t j = i;
      bool first = true;
      while (!seen[j]) {
        seen[j] = true;
        s += (first ? "" : " ") + std::to_string(j + 1);
        first = false;
        j = std::size_t(permutation[j]);
      }
      s += ")";
    }
    return s.empty() ? "id" : s;
  }
};

inline int permutation_sign(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = std::size_t(perm[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

/// All node permutations π with A_{π(i)π(j)} = A_ij, found by backtracking.
inline std::vector<DiagramAutomorphism> diagram_automorphisms(const RootSystem& rs) {
  const auto& a = rs.cartan_matrix;
  std::size_t n = a.size();
  std::vector<DiagramAutomorphism> out;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.push_back({perm, permutation_sign(perm)});
      return;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c]) continue;
      bool ok = a[c][c] == a[i][i];
      for (std::size_t j = 0; j < i && ok; ++j) {
        auto pj = std::size_t(perm[j]);
        ok = a[c][pj] == a[i][j] && a[pj][c] == a[j][i];
      }
      if (!ok) continue;
      perm[i] = int(c);
      used[c] = true;
      self(self, i + 1);
      used[c] = false;
      perm[i] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

/// Type IV rule: the complexification of a compact simple 𝔨 admits an
/// orientation-reversing isometry iff dim 𝔨 is odd or some diagram
/// automorphism of 𝔨 is an odd permutation.
inline Classification classify_type4(RootLabel label, int rank) {
  RootSystem rs = build_root_system(label, rank);
  if (rs.dimension() % 2 == 1) {
    return {Verdict::OR, {JustificationKind::OddDimension, "dim " + std::to_string(rs.dimension()), {}}};
  }
  for (const auto& aut : diagram_automorphisms(rs)) {
    if (aut.sign < 0) return {Verdict::OR, {JustificationKind::DiagramParityOdd, aut.cycles(), {}}};
  }
  return {Verdict::OP, {JustificationKind::AllAutomorphismsPreserve, "even diagram automorphisms", {}}};
}

inline Classification classify_type4(const std::string& label, int rank) {
  return classify_type4(parse_root_label(label, rank), rank);
}

}  // namespace symspace
