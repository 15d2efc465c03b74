#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "symspace/charclass.hpp"
#include "symspace/decide.hpp"
#include "symspace/report.hpp"

namespace symspace {

enum ExitCode { kOk = 0, kGoldenMismatch = 1, kParseError = 2, kInvalidParameters = 3, kUnsupported = 4 };

namespace detail {

inline Family parse_family_tag(const std::string& text) {
  std::string t = upper(trim(text));
  for (Family f : all_families()) {
    if (upper(family_tag(f)) == t) return f;
  }
  if (t == "G2SO4") return Family::G2SO4;
  throw ParseError("unknown family '" + text + "'");
}

inline Report base_report(const SpaceId& s, const RuleOverrides& overrides = {}) {
  Classification c = classify(s, overrides);
  Report r;
  r.space = s.descriptor();
  r.verdict = to_string(c.verdict);
  r.justification = c.justification.label();
  r.dimension = dimension(s);
  r.euler_characteristic = euler_characteristic(s);
  return r;
}

inline void add_closed_form(Report& r, const SpaceId& s) {
  auto cf = signature_closed_form(s);
  if (cf.value) r.closed_form_signature = to_rational(*cf.value);
  r.closed_form_nonzero = cf.nonzero;
}

inline void emit(std::ostream& out, const std::string& format, const std::vector<Report>& rows) {
  if (format == "csv") {
    out << csv_header() << "\n";
    for (const auto& r : rows) out << to_csv_row(r) << "\n";
    return;
  }
  if (rows.size() == 1) {
    out << to_json(rows[0]).dump(2) << "\n";
    return;
  }
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  out << arr.dump(2) << "\n";
}

}  // namespace detail

/// Runs one CLI invocation (args exclude the program name) and returns the
/// exit code: 0 ok, 1 golden mismatch, 2 parse error, 3 invalid parameters,
/// 4 unsupported space.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orientation-reversing isometries of symmetric spaces"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  std::string space_text;
  auto* classify_cmd = app.add_subcommand("classify", "verdict, justification, dimension and Euler characteristic");
  classify_cmd->add_option("space", space_text, "space descriptor, e.g. DIII:6")->required();

  bool golden = false;
  std::vector<std::string> inverted;
  auto* table_cmd = app.add_subcommand("table1", "classify the default sweep of every family");
  table_cmd->add_flag("--golden", golden, "compare against the reference table");
  table_cmd->add_option("--invert-rule", inverted, "flip one family's verdict (mutation testing)")->group("");

  bool want_signature = false, want_poincare = false;
  std::vector<std::string> partitions;
  auto* report_cmd = app.add_subcommand("report", "cohomology and characteristic-class data");
  report_cmd->add_option("space", space_text)->required();
  report_cmd->add_flag("--signature", want_signature, "L-genus signature");
  report_cmd->add_flag("--poincare", want_poincare, "Poincare polynomial coefficients");
  report_cmd->add_option("--pontrjagin", partitions, "Pontrjagin number for a partition such as 1,1,2")
      ->allow_extra_args(false);

  long long delta = 0;
  auto* degree_cmd = app.add_subcommand("degreeset", "possible degrees of maps from delta and the verdict");
  degree_cmd->add_option("delta", delta)->required();
  degree_cmd->add_option("space", space_text)->required();

  for (auto* sub : {classify_cmd, table_cmd, report_cmd, degree_cmd}) {
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  }

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (*table_cmd) {
      RuleOverrides overrides;
      for (const auto& f : inverted) overrides.inverted.insert(detail::parse_family_tag(f));
      std::vector<std::pair<Family, std::vector<Report>>> blocks;
      std::vector<std::string> mismatches;
      std::size_t checked = 0;
      for (Family f : all_families()) {
        auto sweep = table1_sweep(f);
        std::sort(sweep.begin(), sweep.end());
        std::vector<Report> rows;
        for (const auto& s : sweep) {
          Report r = detail::base_report(s, overrides);
          if (golden) {
            r.golden = to_string(golden_verdict(s));
            ++checked;
            if (r.golden != r.verdict) mismatches.push_back(r.space + ": got " + r.verdict + ", table " + r.golden);
          }
          rows.push_back(std::move(r));
        }
        blocks.push_back({f, std::move(rows)});
      }
      if (format == "csv") {
        std::vector<Report> flat;
        for (auto& b : blocks) flat.insert(flat.end(), b.second.begin(), b.second.end());
        detail::emit(out, format, flat);
      } else {
        nlohmann::ordered_json j;
        j["blocks"] = nlohmann::ordered_json::array();
        for (const auto& [f, rows] : blocks) {
          nlohmann::ordered_json b;
          b["family"] = family_tag(f);
          b["rows"] = nlohmann::ordered_json::array();
          for (const auto& r : rows) b["rows"].push_back(to_json(r));
          j["blocks"].push_back(b);
        }
        if (golden) j["golden"] = {{"checked", checked}, {"mismatches", mismatches}};
        out << j.dump(2) << "\n";
      }
      for (const auto& m : mismatches) err << "golden mismatch: " << m << "\n";
      return mismatches.empty() ? kOk : kGoldenMismatch;
    }

    SpaceId s = parse_space(space_text);
    Report r = detail::base_report(s);

    if (*degree_cmd) {
      DegreeSet d = degree_set(delta, classify(s).verdict);
      r.degree_delta = d.delta;
      r.degree_signs = to_string(d.signs);
      r.degree_set = d.format();
    }

    int code = kOk;
    if (*report_cmd) {
      detail::add_closed_form(r, s);
      try {
        if (want_poincare) r.poincare = hirsch_poincare(s);
        if (want_signature || !partitions.empty()) {
          auto pres = presentation(s);
          if (want_signature) r.signature = lgenus_signature_exact(pres);
          for (const auto& text : partitions) {
            auto part = detail::parse_partition(text, ',');
            r.pontrjagin.push_back({part, pontrjagin_number(pres, part)});
          }
        }
      } catch (const UnsupportedSpace& e) {
        r.error = e.what();
        code = kUnsupported;
      } catch (const NotEqualRank& e) {
        r.error = e.what();
        code = kUnsupported;
      } catch (const DimensionNotDivisibleBy4& e) {
        r.error = e.what();
        code = kInvalidParameters;
      }
    }
    detail::emit(out, format, {r});
    if (!r.error.empty()) err << "error: " << r.error << "\n";
    return code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const InvalidParameters& e) {
    err << "invalid parameters: " << e.what() << "\n";
    return kInvalidParameters;
  } catch (const InvalidType& e) {
    err << "invalid parameters: " << e.what() << "\n";
    return kInvalidParameters;
  } catch (const UnsupportedSpace& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const NotEqualRank& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  }
}

}  // namespace symspace
