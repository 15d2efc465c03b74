#pragma once

#include <string>
#include <vector>

namespace symspace {

enum class Verdict { OR, OP };

inline std::string to_string(Verdict v) { return v == Verdict::OR ? "OR" : "OP"; }

enum class JustificationKind {
  OddDimension,
  HermitianOddComplexDim,
  DiagramParityOdd,
  ExplicitIsometryRule,
  NonzeroPontrjaginNumber,
  NonzeroSignature,
  AllAutomorphismsPreserve,
};

inline std::string to_string(JustificationKind k) {
  switch (k) {
    case JustificationKind::OddDimension: return "OddDimension";
    case JustificationKind::HermitianOddComplexDim: return "HermitianOddComplexDim";
    case JustificationKind::DiagramParityOdd: return "DiagramParityOdd";
    case JustificationKind::ExplicitIsometryRule: return "ExplicitIsometryRule";
    case JustificationKind::NonzeroPontrjaginNumber: return "NonzeroPontrjaginNumber";
    case JustificationKind::NonzeroSignature: return "NonzeroSignature";
    case JustificationKind::AllAutomorphismsPreserve: return "AllAutomorphismsPreserve";
  }
  return "?";
}

/// Existence-type justifications support OR; the rest are obstructions.
inline bool is_existence(JustificationKind k) {
  return k == JustificationKind::OddDimension || k == JustificationKind::HermitianOddComplexDim ||
         k == JustificationKind::DiagramParityOdd || k == JustificationKind::ExplicitIsometryRule;
}

struct Justification {
  JustificationKind kind = JustificationKind::OddDimension;
  std::string tag;            // rule name or automorphism description
  std::vector<int> partition;  // for NonzeroPontrjaginNumber

  std::string label() const {
    std::string s = to_string(kind);
    if (kind == JustificationKind::NonzeroPontrjaginNumber) {
      s += "(";
      for (std::size_t i = 0; i < partition.size(); ++i) s += (i ? "," : "") + std::to_string(partition[i]);
      s += ")";
    } else if (!tag.empty()) {
      s += "(" + tag + ")";
    }
    return s;
  }
};

struct Classification {
  Verdict verdict = Verdict::OP;
  Justification justification;
};

}  // namespace symspace
