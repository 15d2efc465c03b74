#pragma once

#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "symspace/rational.hpp"

namespace symspace {

struct PontrjaginEntry {
  std::vector<int> partition;
  Rational value;

  friend bool operator==(const PontrjaginEntry&, const PontrjaginEntry&) = default;
};

/// One output record. Integers stay integers; rationals are "num/den" strings.
struct Report {
  std::string space;
  std::string verdict;
  std::string justification;
  std::optional<long long> dimension;
  std::optional<long long> euler_characteristic;
  std::optional<Rational> signature;
  std::optional<Rational> closed_form_signature;
  std::optional<bool> closed_form_nonzero;
  std::vector<PontrjaginEntry> pontrjagin;
  std::optional<std::vector<long long>> poincare;
  std::optional<long long> degree_delta;
  std::string degree_signs;
  std::string degree_set;
  std::string golden;
  std::string error;

  friend bool operator==(const Report&, const Report&) = default;
};

namespace detail {

inline std::string join_partition(const std::vector<int>& p, char sep) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(p[i]);
  return s;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto k = s.find(sep, start);
    out.push_back(s.substr(start, k - start));
    if (k == std::string::npos) break;
    start = k + 1;
  }
  return out;
}

inline std::vector<int> parse_partition(const std::string& s, char sep) {
  std::vector<int> out;
  for (const auto& t : split(s, sep)) {
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos || t.size() > 6) {
      throw ParseError("malformed partition '" + s + "'");
    }
    out.push_back(std::stoi(t));
  }
  if (out.empty()) throw ParseError("empty partition");
  return out;
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["space"] = r.space;
  j["verdict"] = r.verdict;
  j["justification"] = r.justification;
  if (r.dimension) j["dimension"] = *r.dimension;
  if (r.euler_characteristic) j["euler_characteristic"] = *r.euler_characteristic;
  if (r.signature) j["signature"] = to_fraction_string(*r.signature);
  if (r.closed_form_signature) j["closed_form_signature"] = to_fraction_string(*r.closed_form_signature);
  if (r.closed_form_nonzero) j["closed_form_nonzero"] = *r.closed_form_nonzero;
  if (!r.pontrjagin.empty()) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& e : r.pontrjagin) {
      arr.push_back({{"partition", e.partition}, {"value", to_fraction_string(e.value)}});
    }
    j["pontrjagin"] = arr;
  }
  if (r.poincare) j["poincare"] = *r.poincare;
  if (r.degree_delta) {
    j["degree_set"] = {{"delta", *r.degree_delta}, {"signs", r.degree_signs}, {"members", r.degree_set}};
  }
  if (!r.golden.empty()) j["golden"] = r.golden;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

inline Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.space = j.at("space").get<std::string>();
  r.verdict = j.at("verdict").get<std::string>();
  r.justification = j.at("justification").get<std::string>();
  if (j.contains("dimension")) r.dimension = j["dimension"].get<long long>();
  if (j.contains("euler_characteristic")) r.euler_characteristic = j["euler_characteristic"].get<long long>();
  if (j.contains("signature")) r.signature = parse_rational(j["signature"].get<std::string>());
  if (j.contains("closed_form_signature")) {
    r.closed_form_signature = parse_rational(j["closed_form_signature"].get<std::string>());
  }
  if (j.contains("closed_form_nonzero")) r.closed_form_nonzero = j["closed_form_nonzero"].get<bool>();
  if (j.contains("pontrjagin")) {
    for (const auto& e : j["pontrjagin"]) {
      r.pontrjagin.push_back({e.at("partition").get<std::vector<int>>(), parse_rational(e.at("value").get<std::string>())});
    }
  }
  if (j.contains("poincare")) r.poincare = j["poincare"].get<std::vector<long long>>();
  if (j.contains("degree_set")) {
    const auto& d = j["degree_set"];
    r.degree_delta = d.at("delta").get<long long>();
    r.degree_signs = d.at("signs").get<std::string>();
    r.degree_set = d.at("members").get<std::string>();
  }
  if (j.contains("golden")) r.golden = j["golden"].get<std::string>();
  if (j.contains("error")) r.error = j["error"].get<std::string>();
  return r;
}

/// CSV column order. Pontrjagin numbers are "k1.k2=num/den" joined by ';';
/// Poincaré coefficients are joined by ';'.
inline const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols{
      "space",     "verdict",    "justification", "dimension",    "euler_characteristic", "signature",
      "closed_form_signature",   "closed_form_nonzero",           "pontrjagin", "poincare", "degree_delta",
      "degree_signs", "degree_set", "golden",      "error"};
  return cols;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw ParseError("unterminated quote in CSV row");
  out.push_back(cur);
  return out;
}

template <class T>
std::string opt_str(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, Rational>) return to_fraction_string(*v);
  else if constexpr (std::is_same_v<T, bool>) return *v ? "true" : "false";
  else return std::to_string(*v);
}

}  // namespace detail

inline std::string csv_header() {
  std::string s;
  for (const auto& c : csv_columns()) s += (s.empty() ? "" : ",") + c;
  return s;
}

inline std::string to_csv_row(const Report& r) {
  std::string pont;
  for (const auto& e : r.pontrjagin) {
    pont += (pont.empty() ? "" : ";") + detail::join_partition(e.partition, '.') + "=" + to_fraction_string(e.value);
  }
  std::string poin;
  if (r.poincare) {
    for (std::size_t i = 0; i < r.poincare->size(); ++i) poin += (i ? ";" : "") + std::to_string((*r.poincare)[i]);
  }
  std::vector<std::string> f{r.space,
                             r.verdict,
                             r.justification,
                             detail::opt_str(r.dimension),
                             detail::opt_str(r.euler_characteristic),
                             detail::opt_str(r.signature),
                             detail::opt_str(r.closed_form_signature),
                             detail::opt_str(r.closed_form_nonzero),
                             pont,
                             poin,
                             detail::opt_str(r.degree_delta),
                             r.degree_signs,
                             r.degree_set,
                             r.golden,
                             r.error};
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + detail::csv_field(f[i]);
  return s;
}

inline Report report_from_csv_row(const std::string& line) {
  auto f = detail::csv_split(line);
  if (f.size() != csv_columns().size()) throw ParseError("CSV row has " + std::to_string(f.size()) + " fields");
  Report r;
  r.space = f[0];
  r.verdict = f[1];
  r.justification = f[2];
  auto as_int = [](const std::string& s) -> std::optional<long long> {
    if (s.empty()) return std::nullopt;
    return std::stoll(s);
  };
  r.dimension = as_int(f[3]);
  r.euler_characteristic = as_int(f[4]);
  if (!f[5].empty()) r.signature = parse_rational(f[5]);
  if (!f[6].empty()) r.closed_form_signature = parse_rational(f[6]);
  if (!f[7].empty()) r.closed_form_nonzero = f[7] == "true";
  for (const auto& item : detail::split(f[8], ';')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("malformed Pontrjagin entry '" + item + "'");
    r.pontrjagin.push_back({detail::parse_partition(item.substr(0, eq), '.'), parse_rational(item.substr(eq + 1))});
  }
  if (!f[9].empty()) {
    std::vector<long long> c;
    for (const auto& t : detail::split(f[9], ';')) c.push_back(std::stoll(t));
    r.poincare = c;
  }
  r.degree_delta = as_int(f[10]);
  r.degree_signs = f[11];
  r.degree_set = f[12];
  r.golden = f[13];
  r.error = f[14];
  return r;
}

}  // namespace symspace
