#include "cli.hpp"

#include "twoloop/closed_forms.hpp"
#include "twoloop/errors.hpp"
#include "twoloop/graph_signs.hpp"
#include "twoloop/homology.hpp"
#include "twoloop/serialization.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace twoloop::cli {

namespace {

struct Options {
  std::string case_name = "all";
  unsigned max_hodge = 23;
  unsigned hodge = 1;
  std::string mode = "crosscheck";
  std::string which = "all";
  unsigned terms = 20;
  unsigned max_exponent = 6;
  std::string format = "text";
  std::string out_path;
  bool serial = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<ParityCase> selected_cases(const std::string& name, bool allow_all) {
  if (name == "all") {
    if (!allow_all) throw UsageError("--case all is not allowed for this command");
    return {kAllCases.begin(), kAllCases.end()};
  }
  const auto c = parse_case(name);
  if (!c) throw UsageError("unknown case '" + name + "' (expected oo, ee, eo, oe or all)");
  return {*c};
}

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
      p = std::filesystem::path(dir) / p;
    }
  }
  return p;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  const auto path = resolve_output(o.out_path);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

std::string render_rows(const Options& o, const std::vector<TableRow>& rows, bool multi) {
  if (o.format == "csv") return rows_to_csv(rows, multi);
  if (o.format == "json") return rows_to_json(rows);
  return rows_to_text(rows, multi);
}

std::vector<TableRow> closed_form_rows(ParityCase c, unsigned max_t) {
  const CaseFormulas f = case_formulas(c);
  const auto a = series_coefficients(f.h0, max_t);
  const auto b = series_coefficients(f.h1, max_t);
  const auto chi = series_coefficients(f.chi, max_t);
  std::vector<TableRow> rows;
  for (unsigned t = 1; t <= max_t; ++t) rows.push_back({c, t, a[t], b[t], chi[t], std::nullopt});
  return rows;
}

int run_table(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.max_hodge < 1) throw UsageError("--max-hodge must be at least 1");
  if (o.mode != "bruteforce" && o.mode != "closedform" && o.mode != "crosscheck") {
    throw UsageError("--mode must be bruteforce, closedform or crosscheck");
  }
  const auto cases = selected_cases(o.case_name, true);
  std::vector<TableRow> rows;
  std::size_t mismatches = 0;
  for (ParityCase c : cases) {
    if (o.mode == "closedform") {
      const auto cf = closed_form_rows(c, o.max_hodge);
      rows.insert(rows.end(), cf.begin(), cf.end());
      continue;
    }
    const auto ranks = o.serial ? rank_rows_serial(c, o.max_hodge) : rank_rows_parallel(c, o.max_hodge);
    const auto cf = o.mode == "crosscheck" ? closed_form_rows(c, o.max_hodge) : std::vector<TableRow>{};
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      const TableRow brute = table_row(c, ranks[i]);
      rows.push_back(brute);
      if (o.mode != "crosscheck") continue;
      const TableRow& g = cf[i];
      const auto fa = static_cast<std::int64_t>(rank_formula(c, RankKind::A, brute.t));
      const auto fb = static_cast<std::int64_t>(rank_formula(c, RankKind::B, brute.t));
      auto check = [&](const char* field, std::int64_t bf, std::int64_t series,
                       std::optional<std::int64_t> formula) {
        if (bf == series && (!formula || *formula == bf)) return;
        ++mismatches;
        err << "mismatch case=" << case_name(c) << " t=" << brute.t << ' ' << field
            << " bruteforce=" << bf << " series=" << series;
        if (formula) err << " formula=" << *formula;
        err << '\n';
      };
      check("a", brute.a, g.a, fa);
      check("b", brute.b, g.b, fb);
      check("chi", brute.chi, g.chi, std::nullopt);
    }
  }
  emit(o, render_rows(o, rows, cases.size() > 1), out);
  if (mismatches != 0) {
    err << mismatches << " mismatching cell(s)\n";
    return kMismatch;
  }
  return kOk;
}

int run_series(const Options& o, std::ostream& out) {
  const auto cases = selected_cases(o.case_name, true);
  std::vector<std::string> which;
  if (o.which == "all") {
    which = {"h0", "h1", "chi"};
  } else if (o.which == "h0" || o.which == "h1" || o.which == "chi") {
    which = {o.which};
  } else {
    throw UsageError("--which must be h0, h1, chi or all");
  }
  std::ostringstream os;
  if (o.format == "csv") os << "case,series,k,coefficient\n";
  nlohmann::ordered_json root = nlohmann::ordered_json::array();
  for (ParityCase c : cases) {
    const CaseFormulas f = case_formulas(c);
    for (const std::string& w : which) {
      const RationalGeneratingFunction& g = w == "h0" ? f.h0 : (w == "h1" ? f.h1 : f.chi);
      const auto coeffs = series_coefficients(g, o.terms);
      if (o.format == "csv") {
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
          os << case_name(c) << ',' << w << ',' << k << ',' << coeffs[k] << '\n';
        }
      } else if (o.format == "json") {
        root.push_back({{"case", case_name(c)}, {"series", w}, {"formula", g.display},
                        {"coefficients", coeffs}});
      } else {
        os << case_name(c) << ' ' << w << " = " << g.display << '\n';
        for (std::size_t k = 0; k < coeffs.size(); ++k) os << "  t^" << k << ": " << coeffs[k] << '\n';
      }
    }
  }
  if (o.format == "json") os << root.dump(2) << '\n';
  emit(o, os.str(), out);
  return kOk;
}

int run_signs(const Options& o, std::ostream& out, std::ostream& err) {
  const auto cells = sign_verification_grid(o.max_exponent);
  std::ostringstream os;
  std::size_t failures = 0;
  nlohmann::ordered_json root = nlohmann::ordered_json::array();
  if (o.format == "csv") os << "case,defect,op,k1,k2,k3,computed,closed_form,status\n";
  for (const SignGridCell& cell : cells) {
    const bool pass = cell.pass();
    if (!pass) ++failures;
    const char* status = pass ? "PASS" : "FAIL";
    if (o.format == "csv") {
      os << case_name(cell.parity_case) << ',' << cell.defect << ',' << cell.op.to_string() << ','
         << cell.hairs[0] << ',' << cell.hairs[1] << ',' << cell.hairs[2] << ',' << cell.computed
         << ',' << cell.closed_form << ',' << status << '\n';
    } else if (o.format == "json") {
      root.push_back({{"case", case_name(cell.parity_case)},
                      {"defect", cell.defect},
                      {"op", cell.op.to_string()},
                      {"hairs", {cell.hairs[0], cell.hairs[1], cell.hairs[2]}},
                      {"computed", cell.computed},
                      {"closed_form", cell.closed_form},
                      {"status", status}});
    } else {
      os << case_name(cell.parity_case) << " defect=" << cell.defect << ' ' << cell.op.to_string()
         << ' ' << cell.hairs.to_string() << " computed=" << cell.computed
         << " closed_form=" << cell.closed_form << ' ' << status << '\n';
    }
  }
  if (o.format == "json") os << root.dump(2) << '\n';
  if (o.format == "text") os << cells.size() - failures << '/' << cells.size() << " cells PASS\n";
  emit(o, os.str(), out);
  if (failures != 0) {
    err << failures << " sign cell(s) FAIL\n";
    return kMismatch;
  }
  return kOk;
}

int run_basis(const Options& o, std::ostream& out) {
  const auto cases = selected_cases(o.case_name, false);
  if (o.hodge < 1) throw UsageError("--hodge must be at least 1");
  emit(o, slice_to_json(build_slice(cases.front(), o.hodge)), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homology of two-loop hairy graph complexes"};
  app.require_subcommand(1);
  Options o;

  auto* table = app.add_subcommand("table", "Ranks a_t, b_t and chi_t per Hodge degree");
  table->add_option("--case", o.case_name, "oo, ee, eo, oe (m parity then N parity) or all");
  table->add_option("--max-hodge", o.max_hodge, "Largest Hodge degree")->check(CLI::PositiveNumber);
  table->add_option("--mode", o.mode, "bruteforce, closedform or crosscheck")
      ->check(CLI::IsMember({"bruteforce", "closedform", "crosscheck"}));
  table->add_option("--format", o.format)->check(CLI::IsMember({"text", "csv", "json"}));
  table->add_option("--out", o.out_path, "Output file");
  table->add_flag("--serial", o.serial, "Use the single-threaded reference path");

  auto* series = app.add_subcommand("series", "Power-series coefficients of h0, h1, chi");
  series->add_option("--case", o.case_name);
  series->add_option("--which", o.which, "h0, h1, chi or all")
      ->check(CLI::IsMember({"h0", "h1", "chi", "all"}));
  series->add_option("--terms", o.terms, "Highest power of t");
  series->add_option("--format", o.format)->check(CLI::IsMember({"text", "csv", "json"}));
  series->add_option("--out", o.out_path);

  auto* signs = app.add_subcommand("signs", "Orientation-sign verification grid");
  signs->add_option("--max-exponent", o.max_exponent, "Largest hair count per edge");
  signs->add_option("--format", o.format)->check(CLI::IsMember({"text", "csv", "json"}));
  signs->add_option("--out", o.out_path);

  auto* basis = app.add_subcommand("basis", "JSON dump of one Hodge slice");
  basis->add_option("--case", o.case_name)->required();
  basis->add_option("--hodge", o.hodge, "Hodge degree")->required()->check(CLI::PositiveNumber);
  basis->add_option("--out", o.out_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  try {
    if (table->parsed()) return run_table(o, out, err);
    if (series->parsed()) return run_series(o, out);
    if (signs->parsed()) return run_signs(o, out, err);
    if (basis->parsed()) return run_basis(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConsistencyError& e) {
    err << "consistency error: " << e.what() << '\n';
    return kConsistency;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kConsistency;
  }
  return kUsage;
}

}  // namespace twoloop::cli
