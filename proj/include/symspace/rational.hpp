#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "symspace/errors.hpp"

namespace symspace {

using Rational = mpq_class;
using Integer = mpz_class;

/// Always "num/den", also for integers ("3/1").
inline std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Accepts "n", "-n" or "n/d".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

/// Exact conversion from a 64-bit integer (mpq_class has no long long ctor).
inline Rational to_rational(long long v) { return Rational(Integer(std::to_string(v))); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline long long to_int64(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p()) {
    throw Error("rational " + to_fraction_string(q) + " is not a machine integer");
  }
  return q.get_num().get_si();
}

}  // namespace symspace
