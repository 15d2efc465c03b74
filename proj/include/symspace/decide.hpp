#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "symspace/classification.hpp"
#include "symspace/errors.hpp"
#include "symspace/rootsys.hpp"
#include "symspace/spaces.hpp"

namespace symspace {

/// Families whose verdict is flipped after the rule fires. Test fixture for
/// the golden-table mutation check; empty in normal use.
struct RuleOverrides {
  std::set<Family> inverted;
};

namespace detail {

inline Classification exists(JustificationKind k, std::string tag = {}) { return {Verdict::OR, {k, std::move(tag), {}}}; }

inline Classification obstructed(JustificationKind k, std::string tag = {}, std::vector<int> partition = {}) {
  return {Verdict::OP, {k, std::move(tag), std::move(partition)}};
}

inline Classification pontrjagin_obstruction(std::vector<int> partition) {
  return obstructed(JustificationKind::NonzeroPontrjaginNumber, {}, std::move(partition));
}

/// p_1^{d/4} with d the real dimension.
inline Classification p1_power_obstruction(int dim) { return pontrjagin_obstruction(std::vector<int>(std::size_t(dim / 4), 1)); }

/// Hermitian spaces: OR iff the complex dimension is odd.
inline Classification hermitian_rule(const DualPair& d, Classification obstruction) {
  if (*d.complex_dimension % 2 == 1) {
    return exists(JustificationKind::HermitianOddComplexDim, "dim_C " + std::to_string(*d.complex_dimension));
  }
  return obstruction;
}

inline Classification classify_rule(const SpaceId& s) {
  int p = s.p, q = s.q, n = s.p;
  int dim = dimension(s);
  bool odd_dim = dim % 2 == 1;
  auto odd_dimension = [&] { return exists(JustificationKind::OddDimension, "dim " + std::to_string(dim)); };
  switch (s.family) {
    case Family::AI:
      // X ↦ DXD reverses orientation iff n is even; the Cartan involution
      // does iff dim is odd; these generate the outer automorphisms.
      if (odd_dim) return odd_dimension();
      if (n % 2 == 0) return exists(JustificationKind::ExplicitIsometryRule, "D-conjugation");
      return obstructed(JustificationKind::AllAutomorphismsPreserve, "Out generated by the Cartan involution");
    case Family::AII:
      if (odd_dim) return odd_dimension();
      return obstructed(JustificationKind::AllAutomorphismsPreserve, "Out generated by the Cartan involution");
    case Family::AIII:
    case Family::DIII:
    case Family::CI: {
      DualPair d = dual_pair(s);
      if (s.family == Family::AIII) return hermitian_rule(d, obstructed(JustificationKind::NonzeroSignature));
      return hermitian_rule(d, p1_power_obstruction(dim));
    }
    case Family::BDI:
      if (odd_dim) return odd_dimension();
      if (p % 2 == 1 || q % 2 == 1) return exists(JustificationKind::ExplicitIsometryRule, "D-conjugation");
      if ((p * q) % 8 == 0) return obstructed(JustificationKind::NonzeroSignature);
      if (p == q) return exists(JustificationKind::ExplicitIsometryRule, "J-swap");
      return exists(JustificationKind::ExplicitIsometryRule, "table-row-otherwise");
    case Family::CII:
      if (p != q) return pontrjagin_obstruction(std::vector<int>(std::size_t(p * q), 1));
      if (p % 2 == 1) return exists(JustificationKind::ExplicitIsometryRule, "J-swap");
      return obstructed(JustificationKind::NonzeroSignature);
    case Family::EIII: return hermitian_rule(dual_pair(s), obstructed(JustificationKind::NonzeroSignature));
    case Family::EVII: return hermitian_rule(dual_pair(s), obstructed(JustificationKind::NonzeroSignature));
    case Family::FII: return pontrjagin_obstruction({4});
    case Family::G2SO4: return pontrjagin_obstruction({2});
    case Family::TypeIV: return classify_type4(s.k_label, s.k_rank);
  }
  throw InvalidType("unknown family");
}

}  // namespace detail

/// Orientation-reversal verdict with the clause that decides it.
inline Classification classify(const SpaceId& s, const RuleOverrides& overrides = {}) {
  check_catalog_ranges(s);
  Classification c = detail::classify_rule(s);
  if (overrides.inverted.count(s.family)) c.verdict = c.verdict == Verdict::OR ? Verdict::OP : Verdict::OR;
  return c;
}

/// One row of the reference table: a parameter predicate and its verdict.
struct TableRow {
  Family family;
  std::string condition;
  std::function<bool(const SpaceId&)> applies;
  Verdict verdict;
};

/// The reference table, transcribed row by row. Kept independent of the rule
/// logic in classify so that the two can be compared.
inline const std::vector<TableRow>& table1_rows() {
  static const std::vector<TableRow> rows = [] {
    auto mod = [](int v, int m) { return ((v % m) + m) % m; };
    std::vector<TableRow> r;
    r.push_back({Family::AI, "n = 0,2,3 mod 4", [=](const SpaceId& s) { return mod(s.p, 4) != 1; }, Verdict::OR});
    r.push_back({Family::AI, "n = 1 mod 4", [=](const SpaceId& s) { return mod(s.p, 4) == 1; }, Verdict::OP});
    r.push_back({Family::AII, "2 | n", [=](const SpaceId& s) { return mod(s.p, 2) == 0; }, Verdict::OR});
    r.push_back({Family::AII, "n odd", [=](const SpaceId& s) { return mod(s.p, 2) == 1; }, Verdict::OP});
    r.push_back({Family::AIII, "2 | pq", [=](const SpaceId& s) { return mod(s.p * s.q, 2) == 0; }, Verdict::OP});
    r.push_back({Family::AIII, "pq odd", [=](const SpaceId& s) { return mod(s.p * s.q, 2) == 1; }, Verdict::OR});
    auto bdi_op = [=](const SpaceId& s) { return mod(s.p, 2) == 0 && mod(s.q, 2) == 0 && mod(s.p * s.q, 8) == 0; };
    r.push_back({Family::BDI, "2|p, 2|q, 8|pq", bdi_op, Verdict::OP});
    r.push_back({Family::BDI, "otherwise", [=](const SpaceId& s) { return !bdi_op(s); }, Verdict::OR});
    r.push_back({Family::DIII, "n = 2,3 mod 4", [=](const SpaceId& s) { return mod(s.p, 4) >= 2; }, Verdict::OR});
    r.push_back({Family::DIII, "n = 0,1 mod 4", [=](const SpaceId& s) { return mod(s.p, 4) < 2; }, Verdict::OP});
    r.push_back({Family::CI, "n = 1,2 mod 4", [=](const SpaceId& s) { return mod(s.p, 4) == 1 || mod(s.p, 4) == 2; },
                 Verdict::OR});
    r.push_back({Family::CI, "n = 0,3 mod 4", [=](const SpaceId& s) { return mod(s.p, 4) == 0 || mod(s.p, 4) == 3; },
                 Verdict::OP});
    auto cii_or = [=](const SpaceId& s) { return s.p == s.q && mod(s.p, 2) == 1; };
    r.push_back({Family::CII, "2|pq or p != q", [=](const SpaceId& s) { return !cii_or(s); }, Verdict::OP});
    r.push_back({Family::CII, "p = q odd", cii_or, Verdict::OR});
    r.push_back({Family::EIII, "", [](const SpaceId&) { return true; }, Verdict::OP});
    r.push_back({Family::EVII, "", [](const SpaceId&) { return true; }, Verdict::OR});
    r.push_back({Family::FII, "", [](const SpaceId&) { return true; }, Verdict::OP});
    r.push_back({Family::G2SO4, "", [](const SpaceId&) { return true; }, Verdict::OP});
    // Type IV: OR iff dim K is odd, or 𝔨 = su(n) with n = 0,3 mod 4, or 𝔨 = so(2n) with n >= 4.
    auto type4_or = [=](const SpaceId& s) {
      int r = s.k_rank;
      if (dimension(s) % 2 == 1) return true;
      if (s.k_label == RootLabel::A && (mod(r + 1, 4) == 0 || mod(r + 1, 4) == 3)) return true;
      return s.k_label == RootLabel::D && r >= 4;
    };
    r.push_back({Family::TypeIV, "dim odd, su(4k), su(4k+3) or so(2n), n >= 4", type4_or, Verdict::OR});
    r.push_back({Family::TypeIV, "otherwise", [=](const SpaceId& s) { return !type4_or(s); }, Verdict::OP});
    return r;
  }();
  return rows;
}

/// Reference verdict for a space; throws if no row or several rows apply.
inline Verdict golden_verdict(const SpaceId& s) {
  const TableRow* hit = nullptr;
  for (const auto& row : table1_rows()) {
    if (row.family != s.family || !row.applies(s)) continue;
    if (hit) throw Error("overlapping table rows for " + s.descriptor());
    hit = &row;
  }
  if (!hit) throw Error("no table row for " + s.descriptor());
  return hit->verdict;
}

/// Default sweep per family: the catalog ranges up to the bounds used by the
/// regression table (n <= 13 for AI/AII, p, q <= 6, n <= 9 for DIII/CI,
/// rank <= 8 for Type IV).
inline std::vector<SpaceId> table1_sweep(Family f) {
  std::vector<SpaceId> out;
  auto add = [&](SpaceId s) {
    try {
      check_catalog_ranges(s);
      out.push_back(s);
    } catch (const InvalidParameters&) {
    }
  };
  switch (family_arity(f)) {
    case 0: add(SpaceId::make(f)); break;
    case 1: {
      int hi = (f == Family::AI || f == Family::AII) ? 13 : 9;
      for (int n = 1; n <= hi; ++n) add(SpaceId::make(f, n));
      break;
    }
    default:
      if (f == Family::TypeIV) {
        for (RootLabel l : {RootLabel::A, RootLabel::B, RootLabel::C, RootLabel::D, RootLabel::E6, RootLabel::E7,
                            RootLabel::E8, RootLabel::F4, RootLabel::G2}) {
          for (int r = 1; r <= 8; ++r) {
            if (detail::valid_type(l, r)) out.push_back(SpaceId::type4(l, r));
          }
        }
        break;
      }
      for (int p = 1; p <= 6; ++p) {
        for (int q = 1; q <= 6; ++q) add(SpaceId::make(f, p, q));
      }
  }
  return out;
}

inline const std::vector<Family>& all_families() {
  static const std::vector<Family> f{Family::AI,   Family::AII,  Family::AIII, Family::BDI,
                                     Family::DIII, Family::CI,   Family::CII,  Family::EIII,
                                     Family::EVII, Family::FII,  Family::G2SO4, Family::TypeIV};
  return f;
}

enum class DegreeSigns { Both, OneIndeterminate, ZeroOnly };

inline std::string to_string(DegreeSigns s) {
  switch (s) {
    case DegreeSigns::Both: return "Both";
    case DegreeSigns::OneIndeterminate: return "OneIndeterminate";
    case DegreeSigns::ZeroOnly: return "ZeroOnly";
  }
  return "?";
}

/// Possible degrees of maps between the two locally symmetric spaces.
struct DegreeSet {
  long long delta = 0;
  DegreeSigns signs = DegreeSigns::ZeroOnly;

  /// Degrees known to occur; OneIndeterminate lists only 0 here.
  std::vector<long long> known() const {
    if (signs == DegreeSigns::Both) return {0, delta, -delta};
    return {0};
  }

  /// {0}, {0,+d,-d} or {0,e*d} with e = ±1 unknown.
  std::string format() const {
    std::string d = std::to_string(delta);
    switch (signs) {
      case DegreeSigns::ZeroOnly: return "{0}";
      case DegreeSigns::Both: return "{0,+" + d + ",-" + d + "}";
      case DegreeSigns::OneIndeterminate: return "{0,e*" + d + "}";
    }
    return "";
  }

  friend bool operator==(const DegreeSet&, const DegreeSet&) = default;
};

inline DegreeSet degree_set(long long delta, Verdict status) {
  if (delta < 0) throw InvalidParameters("delta must be nonnegative");
  if (delta == 0) return {0, DegreeSigns::ZeroOnly};
  return {delta, status == Verdict::OR ? DegreeSigns::Both : DegreeSigns::OneIndeterminate};
}

/// χ(Γ)/χ(Λ) when it is a positive integer (the only possible index of a
/// subgroup of Λ isomorphic to Γ), else 0.
inline long long minimal_index_candidate(long long chi_gamma, long long chi_lambda) {
  if (chi_gamma == 0 || chi_lambda == 0) throw ZeroEulerCharacteristic("Euler characteristics must be nonzero");
  if (chi_gamma % chi_lambda != 0) return 0;
  long long r = chi_gamma / chi_lambda;
  return r > 0 ? r : 0;
}

enum class FixedPointStatus { HasFPP, AdmitsFixedPointFreeDiffeo, Unknown };

inline std::string to_string(FixedPointStatus s) {
  switch (s) {
    case FixedPointStatus::HasFPP: return "HasFPP";
    case FixedPointStatus::AdmitsFixedPointFreeDiffeo: return "AdmitsFixedPointFreeDiffeo";
    case FixedPointStatus::Unknown: return "Unknown";
  }
  return "?";
}

/// Fixed-point property of Γ\G/K from caller-supplied group hypotheses.
/// normalizer_equals_lattice = false is taken with N_Γ torsion-free.
inline FixedPointStatus fixed_point_certificate(const SpaceId& s, bool rank_at_least_2, bool out_trivial,
                                                bool cocompact, bool normalizer_equals_lattice) {
  check_catalog_ranges(s);
  long long chi = euler_characteristic(s);
  if (chi == 0 || !normalizer_equals_lattice) return FixedPointStatus::AdmitsFixedPointFreeDiffeo;
  if (rank_at_least_2 && out_trivial && cocompact) return FixedPointStatus::HasFPP;
  return FixedPointStatus::Unknown;
}

}  // namespace symspace
