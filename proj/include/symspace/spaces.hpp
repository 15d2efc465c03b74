#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "symspace/errors.hpp"
#include "symspace/rational.hpp"
#include "symspace/rootsys.hpp"

namespace symspace {

enum class Family { AI, AII, AIII, BDI, DIII, CI, CII, EIII, EVII, FII, G2SO4, TypeIV };

inline std::string family_tag(Family f) {
  switch (f) {
    case Family::AI: return "AI";
    case Family::AII: return "AII";
    case Family::AIII: return "AIII";
    case Family::BDI: return "BDI";
    case Family::DIII: return "DIII";
    case Family::CI: return "CI";
    case Family::CII: return "CII";
    case Family::EIII: return "EIII";
    case Family::EVII: return "EVII";
    case Family::FII: return "FII";
    case Family::G2SO4: return "G";
    case Family::TypeIV: return "TypeIV";
  }
  return "?";
}

inline int family_arity(Family f) {
  switch (f) {
    case Family::AI:
    case Family::AII:
    case Family::DIII:
    case Family::CI: return 1;
    case Family::AIII:
    case Family::BDI:
    case Family::CII: return 2;
    case Family::EIII:
    case Family::EVII:
    case Family::FII:
    case Family::G2SO4: return 0;
    case Family::TypeIV: return 2;
  }
  return 0;
}

struct SpaceId {
  Family family = Family::AI;
  int p = 0;
  int q = 0;
  RootLabel k_label = RootLabel::A;  // TypeIV only
  int k_rank = 0;                    // TypeIV only

  static SpaceId make(Family f, int p = 0, int q = 0) {
    SpaceId s;
    s.family = f;
    s.p = p;
    s.q = q;
    return s;
  }
  static SpaceId type4(RootLabel label, int rank) {
    SpaceId s;
    s.family = Family::TypeIV;
    s.k_label = label;
    s.k_rank = rank;
    return s;
  }

  std::string descriptor() const {
    std::string tag = family_tag(family);
    switch (family_arity(family)) {
      case 0: return tag;
      case 1: return tag + ":" + std::to_string(p);
      default: break;
    }
    if (family == Family::TypeIV) {
      std::string l = to_string(k_label);
      if (l.size() == 1) return tag + ":" + l + "," + std::to_string(k_rank);
      return tag + ":" + l;
    }
    return tag + ":" + std::to_string(p) + "," + std::to_string(q);
  }

  friend bool operator==(const SpaceId& a, const SpaceId& b) {
    return a.family == b.family && a.p == b.p && a.q == b.q &&
           (a.family != Family::TypeIV || (a.k_label == b.k_label && a.k_rank == b.k_rank));
  }

  /// Family order first, then numeric parameters.
  friend bool operator<(const SpaceId& a, const SpaceId& b) {
    if (a.family != b.family) return a.family < b.family;
    if (a.family == Family::TypeIV) {
      if (a.k_label != b.k_label) return a.k_label < b.k_label;
      return a.k_rank < b.k_rank;
    }
    if (a.p != b.p) return a.p < b.p;
    return a.q < b.q;
  }
};

namespace detail {

inline std::string upper(std::string s) {
  for (auto& c : s) c = char(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

inline int parse_int_param(const std::string& text) {
  std::string t = trim(text);
  if (t.empty()) throw ParseError("empty parameter");
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) throw ParseError("malformed parameter '" + t + "'");
  for (std::size_t k = i; k < t.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(t[k]))) throw ParseError("malformed parameter '" + t + "'");
  }
  if (t.size() > 9) throw InvalidParameters("parameter out of range '" + t + "'");
  return std::stoi(t);
}

}  // namespace detail

/// Grammar: FAMILY[:param[,param]], family tags case-insensitive.
inline SpaceId parse_space(const std::string& text) {
  std::string s = detail::trim(text);
  auto colon = s.find(':');
  std::string tag = detail::upper(detail::trim(s.substr(0, colon)));
  std::string rest = colon == std::string::npos ? "" : s.substr(colon + 1);
  std::vector<std::string> params;
  if (!detail::trim(rest).empty()) {
    std::size_t start = 0;
    while (true) {
      auto comma = rest.find(',', start);
      params.push_back(detail::trim(rest.substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  static const std::vector<std::pair<std::string, Family>> tags = {
      {"AI", Family::AI},       {"AII", Family::AII},     {"AIII", Family::AIII},    {"BDI", Family::BDI},
      {"DIII", Family::DIII},   {"CI", Family::CI},       {"CII", Family::CII},      {"EIII", Family::EIII},
      {"EVII", Family::EVII},   {"FII", Family::FII},     {"G", Family::G2SO4},      {"G2SO4", Family::G2SO4},
      {"G2/SO4", Family::G2SO4}, {"TYPEIV", Family::TypeIV}, {"IV", Family::TypeIV}};
  auto it = std::find_if(tags.begin(), tags.end(), [&](const auto& kv) { return kv.first == tag; });
  if (it == tags.end()) throw ParseError("unknown family '" + tag + "'");
  Family f = it->second;
  if (f == Family::TypeIV) {
    if (params.empty() || params.size() > 2) throw ParseError("TypeIV expects LABEL[,rank]");
    std::string label = detail::upper(params[0]);
    int rank = 0;
    if (params.size() == 2) {
      rank = detail::parse_int_param(params[1]);
    } else if (label.size() == 2 && std::isdigit(static_cast<unsigned char>(label[1]))) {
      rank = label[1] - '0';
    } else {
      throw ParseError("TypeIV expects a rank for label '" + label + "'");
    }
    static const std::set<std::string> known = {"A", "B", "C", "D", "E", "F", "G", "E6", "E7", "E8", "F4", "G2"};
    if (!known.count(label)) throw ParseError("unknown root system label '" + label + "'");
    try {
      RootLabel rl = parse_root_label(label, rank);
      if (!detail::valid_type(rl, rank)) throw InvalidType("bad rank");
      return SpaceId::type4(rl, rank);
    } catch (const InvalidType&) {
      throw InvalidParameters("no simple type " + label + " of rank " + std::to_string(rank));
    }
  }
  int arity = family_arity(f);
  if (int(params.size()) != arity) {
    throw ParseError(family_tag(f) + " expects " + std::to_string(arity) + " parameter(s), got " +
                     std::to_string(params.size()));
  }
  SpaceId id = SpaceId::make(f);
  if (arity >= 1) id.p = detail::parse_int_param(params[0]);
  if (arity >= 2) id.q = detail::parse_int_param(params[1]);
  return id;
}

/// Parameter ranges of the catalog; throws InvalidParameters naming the bound.
inline void check_catalog_ranges(const SpaceId& s) {
  auto fail = [&](const std::string& bound) {
    throw InvalidParameters(s.descriptor() + ": requires " + bound);
  };
  switch (s.family) {
    case Family::AI:
      if (s.p <= 2) fail("n > 2");
      break;
    case Family::AII:
      if (s.p < 2) fail("n >= 2");
      break;
    case Family::AIII:
    case Family::CII:
      if (s.p < 1 || s.q < 1) fail("p, q >= 1");
      break;
    case Family::BDI:
      if (s.p <= 1 || s.q <= 1) fail("p, q > 1");
      if (s.p + s.q <= 4) fail("p + q > 4");
      break;
    case Family::DIII:
      if (s.p < 4) fail("n >= 4");
      break;
    case Family::CI:
      if (s.p < 3) fail("n >= 3");
      break;
    case Family::TypeIV:
      if (!detail::valid_type(s.k_label, s.k_rank)) fail("a simple compact type");
      break;
    default: break;
  }
}

/// Looser ranges under which the (U, K) root model still makes sense; used for
/// small members (spheres, projective spaces) that the catalog excludes.
inline void check_structural_ranges(const SpaceId& s) {
  auto fail = [&](const std::string& bound) {
    throw InvalidParameters(s.descriptor() + ": requires " + bound);
  };
  switch (s.family) {
    case Family::AI:
      if (s.p < 2) fail("n >= 2");
      break;
    case Family::AII:
    case Family::DIII:
      if (s.p < 2) fail("n >= 2");
      break;
    case Family::CI:
      if (s.p < 1) fail("n >= 1");
      break;
    case Family::AIII:
    case Family::CII:
      if (s.p < 1 || s.q < 1) fail("p, q >= 1");
      break;
    case Family::BDI:
      if (s.p < 1 || s.q < 1 || s.p + s.q < 3) fail("p, q >= 1 and p + q >= 3");
      break;
    case Family::TypeIV:
      if (!detail::valid_type(s.k_label, s.k_rank)) fail("a simple compact type");
      break;
    default: break;
  }
}

/// Real dimension of the symmetric space (catalog ranges enforced).
inline int dimension(const SpaceId& s) {
  check_catalog_ranges(s);
  int n = s.p, p = s.p, q = s.q;
  switch (s.family) {
    case Family::AI: return (n + 2) * (n - 1) / 2;
    case Family::AII: return (n - 1) * (2 * n + 1);
    case Family::AIII: return 2 * p * q;
    case Family::BDI: return p * q;
    case Family::DIII: return n * (n - 1);
    case Family::CI: return n * (n + 1);
    case Family::CII: return 4 * p * q;
    case Family::EIII: return 32;
    case Family::EVII: return 54;
    case Family::FII: return 16;
    case Family::G2SO4: return 8;
    case Family::TypeIV: return build_root_system(s.k_label, s.k_rank).dimension();
  }
  return 0;
}

using LinearForm = std::vector<Rational>;

/// A Weyl-group factor acting on a subset of torus coordinates.
///   A: permutations (the unitary group U(n): invariants e_1..e_n)
///   B, C: signed permutations; D: evenly signed permutations
///   Torus: trivial group on one coordinate
///   Exceptional: the Weyl group of `label` acting on `coords`
enum class BlockKind { A, B, C, D, Torus, Exceptional };

struct WeylBlock {
  BlockKind kind = BlockKind::A;
  std::vector<std::size_t> coords;
  RootLabel label = RootLabel::G2;  // Exceptional only

  std::size_t size() const { return coords.size(); }

  std::vector<int> degrees() const {
    int n = int(coords.size());
    std::vector<int> d;
    switch (kind) {
      case BlockKind::A:
        for (int i = 1; i <= n; ++i) d.push_back(i);
        break;
      case BlockKind::B:
      case BlockKind::C:
        for (int i = 1; i <= n; ++i) d.push_back(2 * i);
        break;
      case BlockKind::D:
        for (int i = 1; i < n; ++i) d.push_back(2 * i);
        if (n >= 1) d.push_back(n);
        break;
      case BlockKind::Torus: d.push_back(1); break;
      case BlockKind::Exceptional: d = build_root_system(label, n).invariant_degrees; break;
    }
    std::sort(d.begin(), d.end());
    return d;
  }

  std::uint64_t weyl_order() const {
    std::uint64_t w = 1;
    for (int x : degrees()) w *= std::uint64_t(x);
    return w;
  }

  /// True if every permutation of `coords` lies in the group.
  bool permutes_freely() const {
    return kind == BlockKind::A || kind == BlockKind::B || kind == BlockKind::C || kind == BlockKind::D;
  }
};

/// Root-theoretic description of the compact dual U/K. For equal-rank members
/// with a torus model, roots are linear forms in the coordinates `coords`
/// (a basis of t*, orthogonal with squared lengths `gram`).
struct DualPair {
  SpaceId space;
  std::string u_description;
  std::string k_description;
  std::optional<RootSystem> u_root_system;
  int k_torus_factors = 0;
  bool equal_rank = false;
  bool hermitian = false;
  int real_dimension = 0;
  std::optional<int> complex_dimension;

  bool has_model = false;
  std::vector<std::string> coords;
  std::vector<Rational> gram;
  std::vector<WeylBlock> u_blocks;
  std::vector<WeylBlock> k_blocks;
  std::vector<LinearForm> u_positive_roots;
  std::vector<LinearForm> k_positive_roots;
  std::vector<LinearForm> complementary_roots;

  std::uint64_t u_weyl_order() const {
    std::uint64_t w = 1;
    for (const auto& b : u_blocks) w *= b.weyl_order();
    return w;
  }
  std::uint64_t k_weyl_order() const {
    std::uint64_t w = 1;
    for (const auto& b : k_blocks) w *= b.weyl_order();
    return w;
  }
  Rational inner(const LinearForm& a, const LinearForm& b) const {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i] * gram[i];
    return s;
  }
};

namespace detail {

inline LinearForm unit_form(std::size_t dim, std::size_t i, const Rational& v = 1) {
  LinearForm f(dim, 0);
  f[i] = v;
  return f;
}

inline LinearForm form_sum(std::size_t dim, std::size_t i, int si, std::size_t j, int sj) {
  LinearForm f(dim, 0);
  f[i] += si;
  f[j] += sj;
  return f;
}

/// Positive roots of a classical block in the standard realization.
inline std::vector<LinearForm> classical_positive_roots(const WeylBlock& b, std::size_t dim) {
  std::vector<LinearForm> out;
  const auto& c = b.coords;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      out.push_back(form_sum(dim, c[i], 1, c[j], -1));
      if (b.kind != BlockKind::A) out.push_back(form_sum(dim, c[i], 1, c[j], 1));
    }
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (b.kind == BlockKind::B) out.push_back(unit_form(dim, c[i]));
    if (b.kind == BlockKind::C) out.push_back(unit_form(dim, c[i], 2));
  }
  return out;
}

inline std::vector<std::size_t> iota(std::size_t from, std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = from + i;
  return v;
}

inline std::vector<std::string> names(const std::string& prefix, std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back(prefix + std::to_string(i));
  return v;
}

inline std::string group_name(BlockKind k, std::size_t n) {
  switch (k) {
    case BlockKind::A: return "U(" + std::to_string(n) + ")";
    case BlockKind::B: return "SO(" + std::to_string(2 * n + 1) + ")";
    case BlockKind::C: return "Sp(" + std::to_string(n) + ")";
    case BlockKind::D: return "SO(" + std::to_string(2 * n) + ")";
    default: return "?";
  }
}

/// Spinor-type roots ½(±x1 ± ... ± xn) with a prescribed parity of minus signs
/// (parity < 0 means any), each plus `extra`.
inline std::vector<LinearForm> half_spin_forms(std::size_t dim, const std::vector<std::size_t>& xs, int parity,
                                               const LinearForm& extra) {
  std::vector<LinearForm> out;
  std::size_t n = xs.size();
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    int minus = __builtin_popcount(mask);
    if (parity >= 0 && minus % 2 != parity) continue;
    LinearForm f = extra.empty() ? LinearForm(dim, 0) : extra;
    for (std::size_t i = 0; i < n; ++i) f[xs[i]] += Rational((mask >> i) & 1U ? -1 : 1, 2);
    out.push_back(f);
  }
  return out;
}

inline void finish_model(DualPair& d) {
  std::size_t dim = d.coords.size();
  std::set<LinearForm> kset;
  for (const auto& b : d.k_blocks) {
    if (b.kind == BlockKind::Exceptional || b.kind == BlockKind::Torus) continue;
    for (auto& r : classical_positive_roots(b, dim)) {
      if (kset.insert(r).second) d.k_positive_roots.push_back(r);
    }
  }
  for (const auto& b : d.u_blocks) {
    if (b.kind == BlockKind::Exceptional || b.kind == BlockKind::Torus) continue;
    for (auto& r : classical_positive_roots(b, dim)) d.u_positive_roots.push_back(r);
  }
  for (const auto& k : d.k_positive_roots) kset.insert(k);
  for (const auto& r : d.u_positive_roots) {
    if (!kset.count(r)) d.complementary_roots.push_back(r);
  }
  d.has_model = true;
}

}  // namespace detail

/// Root data of the compact dual with only structural range checks, so that
/// small members (ℂP¹, SO(6)/U(3), ...) are available to the cohomology code.
inline DualPair dual_pair(const SpaceId& s) {
  check_structural_ranges(s);
  using detail::iota;
  using detail::names;
  DualPair d;
  d.space = s;
  int p = s.p, q = s.q;
  auto set_u = [&](RootLabel l, int rank) {
    if (detail::valid_type(l, rank)) d.u_root_system = build_root_system(l, rank);
  };
  switch (s.family) {
    case Family::AI:
      d.u_description = "SU(" + std::to_string(p) + ")";
      d.k_description = "SO(" + std::to_string(p) + ")";
      set_u(RootLabel::A, p - 1);
      d.real_dimension = (p + 2) * (p - 1) / 2;
      d.equal_rank = false;
      break;
    case Family::AII:
      d.u_description = "SU(" + std::to_string(2 * p) + ")";
      d.k_description = "Sp(" + std::to_string(p) + ")";
      set_u(RootLabel::A, 2 * p - 1);
      d.real_dimension = (p - 1) * (2 * p + 1);
      d.equal_rank = false;
      break;
    case Family::AIII: {
      d.u_description = "U(" + std::to_string(p + q) + ")";
      d.k_description = "U(" + std::to_string(p) + ")xU(" + std::to_string(q) + ")";
      set_u(RootLabel::A, p + q - 1);
      d.real_dimension = 2 * p * q;
      d.complex_dimension = p * q;
      d.hermitian = true;
      d.equal_rank = true;
      d.k_torus_factors = 1;
      auto xs = names("x", std::size_t(p)), ys = names("y", std::size_t(q));
      d.coords = xs;
      d.coords.insert(d.coords.end(), ys.begin(), ys.end());
      d.gram.assign(d.coords.size(), 1);
      d.u_blocks = {{BlockKind::A, iota(0, std::size_t(p + q)), {}}};
      d.k_blocks = {{BlockKind::A, iota(0, std::size_t(p)), {}}, {BlockKind::A, iota(std::size_t(p), std::size_t(q)), {}}};
      detail::finish_model(d);
      break;
    }
    case Family::CII: {
      d.u_description = "Sp(" + std::to_string(p + q) + ")";
      d.k_description = "Sp(" + std::to_string(p) + ")xSp(" + std::to_string(q) + ")";
      set_u(RootLabel::C, p + q);
      d.real_dimension = 4 * p * q;
      d.equal_rank = true;
      auto xs = names("x", std::size_t(p)), ys = names("y", std::size_t(q));
      d.coords = xs;
      d.coords.insert(d.coords.end(), ys.begin(), ys.end());
      d.gram.assign(d.coords.size(), 1);
      d.u_blocks = {{BlockKind::C, iota(0, std::size_t(p + q)), {}}};
      d.k_blocks = {{BlockKind::C, iota(0, std::size_t(p)), {}}, {BlockKind::C, iota(std::size_t(p), std::size_t(q)), {}}};
      detail::finish_model(d);
      break;
    }
    case Family::DIII:
    case Family::CI: {
      bool diii = s.family == Family::DIII;
      d.u_description = diii ? "SO(" + std::to_string(2 * p) + ")" : "Sp(" + std::to_string(p) + ")";
      d.k_description = "U(" + std::to_string(p) + ")";
      set_u(diii ? RootLabel::D : RootLabel::C, p);
      d.real_dimension = diii ? p * (p - 1) : p * (p + 1);
      d.complex_dimension = d.real_dimension / 2;
      d.hermitian = true;
      d.equal_rank = true;
      d.k_torus_factors = 1;
      d.coords = names("x", std::size_t(p));
      d.gram.assign(d.coords.size(), 1);
      d.u_blocks = {{diii ? BlockKind::D : BlockKind::C, iota(0, std::size_t(p)), {}}};
      d.k_blocks = {{BlockKind::A, iota(0, std::size_t(p)), {}}};
      detail::finish_model(d);
      break;
    }
    case Family::BDI: {
      d.u_description = "SO(" + std::to_string(p + q) + ")";
      d.k_description = "SO(" + std::to_string(p) + ")xSO(" + std::to_string(q) + ")";
      int n = p + q;
      set_u(n % 2 ? RootLabel::B : RootLabel::D, n / 2);
      d.real_dimension = p * q;
      d.hermitian = p == 2 || q == 2;
      if (d.hermitian) d.complex_dimension = p == 2 ? q : p;
      d.equal_rank = !(p % 2 == 1 && q % 2 == 1);
      if (!d.equal_rank) break;
      std::size_t a = std::size_t(p / 2), b = std::size_t(q / 2);
      auto xs = names("x", a), ys = names("y", b);
      d.coords = xs;
      d.coords.insert(d.coords.end(), ys.begin(), ys.end());
      d.gram.assign(d.coords.size(), 1);
      d.u_blocks = {{n % 2 ? BlockKind::B : BlockKind::D, iota(0, a + b), {}}};
      if (a > 0) d.k_blocks.push_back({p % 2 ? BlockKind::B : BlockKind::D, iota(0, a), {}});
      if (b > 0) d.k_blocks.push_back({q % 2 ? BlockKind::B : BlockKind::D, iota(a, b), {}});
      if (p == 2) ++d.k_torus_factors;
      if (q == 2) ++d.k_torus_factors;
      detail::finish_model(d);
      break;
    }
    case Family::G2SO4: {
      d.u_description = "G2";
      d.k_description = "SO(4)";
      set_u(RootLabel::G2, 2);
      d.real_dimension = 8;
      d.equal_rank = true;
      // Basis (a, g) of t*: a short, g long, orthogonal.
      d.coords = {"a", "g"};
      d.gram = {2, 6};
      d.u_blocks = {{BlockKind::Exceptional, {0, 1}, RootLabel::G2}};
      d.k_blocks = {{BlockKind::B, {0}, {}}, {BlockKind::B, {1}, {}}};
      d.k_positive_roots = {{1, 0}, {0, 1}};
      d.u_positive_roots = {{1, 0}, {0, 1}, {Rational(1, 2), Rational(1, 2)}, {Rational(-1, 2), Rational(1, 2)},
                            {Rational(3, 2), Rational(1, 2)}, {Rational(-3, 2), Rational(1, 2)}};
      for (std::size_t i = 2; i < d.u_positive_roots.size(); ++i) d.complementary_roots.push_back(d.u_positive_roots[i]);
      d.has_model = true;
      break;
    }
    case Family::FII: {
      d.u_description = "F4";
      d.k_description = "Spin(9)";
      set_u(RootLabel::F4, 4);
      d.real_dimension = 16;
      d.equal_rank = true;
      d.coords = names("x", 4);
      d.gram.assign(4, 1);
      d.u_blocks = {{BlockKind::Exceptional, iota(0, 4), RootLabel::F4}};
      d.k_blocks = {{BlockKind::B, iota(0, 4), {}}};
      d.k_positive_roots = detail::classical_positive_roots(d.k_blocks[0], 4);
      d.u_positive_roots = d.k_positive_roots;
      LinearForm plus_x1 = detail::unit_form(4, 0, Rational(1, 2));
      for (auto& f : detail::half_spin_forms(4, {1, 2, 3}, -1, plus_x1)) {
        d.u_positive_roots.push_back(f);
        d.complementary_roots.push_back(f);
      }
      d.has_model = true;
      break;
    }
    case Family::EIII: {
      d.u_description = "E6";
      d.k_description = "Spin(10)xU(1)";
      set_u(RootLabel::E6, 6);
      d.real_dimension = 32;
      d.complex_dimension = 16;
      d.hermitian = true;
      d.equal_rank = true;
      d.k_torus_factors = 1;
      d.coords = names("x", 5);
      d.coords.push_back("t");
      d.gram = {1, 1, 1, 1, 1, Rational(3, 4)};
      d.u_blocks = {{BlockKind::Exceptional, iota(0, 6), RootLabel::E6}};
      d.k_blocks = {{BlockKind::D, iota(0, 5), {}}, {BlockKind::Torus, {5}, {}}};
      d.k_positive_roots = detail::classical_positive_roots(d.k_blocks[0], 6);
      d.u_positive_roots = d.k_positive_roots;
      for (auto& f : detail::half_spin_forms(6, iota(0, 5), 0, detail::unit_form(6, 5))) {
        d.u_positive_roots.push_back(f);
        d.complementary_roots.push_back(f);
      }
      d.has_model = true;
      break;
    }
    case Family::EVII:
      d.u_description = "E7";
      d.k_description = "E6xU(1)";
      set_u(RootLabel::E7, 7);
      d.real_dimension = 54;
      d.complex_dimension = 27;
      d.hermitian = true;
      d.equal_rank = true;
      d.k_torus_factors = 1;
      d.u_blocks = {{BlockKind::Exceptional, iota(0, 7), RootLabel::E7}};
      d.k_blocks = {{BlockKind::Exceptional, iota(0, 6), RootLabel::E6}, {BlockKind::Torus, {6}, {}}};
      break;
    case Family::TypeIV: {
      RootSystem k = build_root_system(s.k_label, s.k_rank);
      d.u_description = k.name() + " complexified";
      d.k_description = k.name();
      d.real_dimension = k.dimension();
      d.equal_rank = false;
      break;
    }
  }
  return d;
}

/// Catalog-range validation followed by the root description.
inline DualPair validate(const SpaceId& s) {
  check_catalog_ranges(s);
  return dual_pair(s);
}

inline long long euler_characteristic(const SpaceId& s) {
  DualPair d = dual_pair(s);
  if (!d.equal_rank) return 0;
  return (long long)(d.u_weyl_order() / d.k_weyl_order());
}

}  // namespace symspace
