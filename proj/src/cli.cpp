#include "vfs/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vfs/algebra.hpp"
#include "vfs/family_io.hpp"
#include "vfs/fields.hpp"
#include "vfs/james.hpp"
#include "vfs/rho.hpp"
#include "vfs/verify.hpp"

namespace vfs {

namespace {

using ordered_json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string field;
  std::string n;
  std::string range;
  std::int64_t m = -1;
  std::int64_t m_max = 200;
  std::int64_t trials = 1000;
  std::uint64_t seed = 42;
  std::string format = "text";
  std::string input;
  std::string output;
  bool all_methods = false;
  std::string method;
  std::int64_t points = 48;
  std::string n_list;
  std::string check;
  std::string what;
  std::string direction;
  std::string unit;
  std::string target = "none";
};

OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  throw UsageError("--format must be text, csv or json");
}

FieldTag require_field(const std::string& s) {
  const auto f = parse_field(s);
  if (!f) throw UsageError("--field must be one of r, c, h");
  return *f;
}

Integer parse_positive(const std::string& s, const char* what) {
  const bool digits = !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  if (!digits) throw UsageError(std::string(what) + " must be a positive integer");
  Integer v(s);
  if (v < 1) throw UsageError(std::string(what) + " must be a positive integer");
  return v;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s, std::int64_t min_lo) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw UsageError("--range must look like A:B");
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  try {
    std::size_t used = 0;
    lo = std::stoll(s.substr(0, colon), &used);
    if (used != colon) throw UsageError("--range must look like A:B");
    const std::string rest = s.substr(colon + 1);
    hi = std::stoll(rest, &used);
    if (used != rest.size()) throw UsageError("--range must look like A:B");
  } catch (const std::logic_error&) {
    throw UsageError("--range must look like A:B");
  }
  if (lo < min_lo || lo > hi) {
    throw UsageError("--range needs " + std::to_string(min_lo) + " <= A <= B");
  }
  return {lo, hi};
}

std::vector<Integer> parse_n_list(const std::string& s) {
  std::vector<Integer> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_positive(item, "--n-list entry"));
  if (out.empty()) throw UsageError("--n-list is empty");
  return out;
}

std::string method_label(FieldTag f) { return f == FieldTag::R ? "adams_closed_form" : "theorem8"; }

// ---------------------------------------------------------------- rho

int cmd_rho(const Options& o, std::ostream& out, std::ostream& err) {
  const FieldTag field = require_field(o.field);
  const OutputFormat fmt = parse_format(o.format);
  if (o.n.empty() == o.range.empty()) throw UsageError("rho needs exactly one of --n or --range");

  std::vector<Integer> ns;
  if (!o.n.empty()) {
    ns.push_back(parse_positive(o.n, "--n"));
  } else {
    const auto [lo, hi] = parse_range(o.range, 1);
    for (std::int64_t n = lo; n <= hi; ++n) ns.emplace_back(n);
  }

  std::vector<RhoMethod> methods;
  if (o.all_methods) {
    if (!o.method.empty()) throw UsageError("--method and --all-methods are exclusive");
    methods = applicable_methods(field);
  } else {
    const auto m = parse_method(o.method.empty() ? method_label(field) : o.method);
    if (!m) throw UsageError("--method must be adams_closed_form, theorem8 or oracle");
    const auto allowed = applicable_methods(field);
    if (std::find(allowed.begin(), allowed.end(), *m) == allowed.end()) {
      throw UsageError(std::string(to_string(*m)) + " does not apply to field " + std::string(to_string(field)));
    }
    methods = {*m};
  }

  int status = kExitOk;
  ordered_json rows = ordered_json::array();
  if (fmt == OutputFormat::Csv) {
    out << "n";
    if (methods.size() == 1) {
      out << ",value";
    } else {
      for (auto m : methods) out << ',' << to_string(m);
    }
    out << '\n';
  }
  for (const Integer& n : ns) {
    std::vector<std::int64_t> values;
    for (auto m : methods) values.push_back(rho(field, n, m).value);
    const bool agree = std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end();
    if (!agree) {
      status = kExitCounterexample;
      err << "methods disagree at n = " << n << '\n';
    }
    switch (fmt) {
      case OutputFormat::Text: {
        if (ns.size() > 1) out << n << ' ';
        out << values.front();
        if (methods.size() > 1) {
          out << " (";
          for (std::size_t k = 0; k < methods.size(); ++k) {
            out << (k ? ", " : "") << to_string(methods[k]) << '=' << values[k];
          }
          out << ')';
        }
        out << '\n';
        break;
      }
      case OutputFormat::Csv:
        out << n;
        for (auto v : values) out << ',' << v;
        out << '\n';
        break;
      case OutputFormat::Json: {
        ordered_json row;
        row["field"] = std::string(to_string(field));
        row["n"] = n.str();
        row["value"] = values.front();
        if (methods.size() == 1) {
          row["method"] = std::string(to_string(methods.front()));
        } else {
          ordered_json by_method;
          for (std::size_t k = 0; k < methods.size(); ++k) by_method[std::string(to_string(methods[k]))] = values[k];
          row["methods"] = std::move(by_method);
        }
        rows.push_back(std::move(row));
        break;
      }
    }
    if (!agree) break;
  }
  if (fmt == OutputFormat::Json) out << (ns.size() == 1 && !rows.empty() ? rows.front() : rows).dump() << '\n';
  return status;
}

// ---------------------------------------------------------------- james

int cmd_james(const Options& o, std::ostream& out) {
  const FieldTag field = require_field(o.field);
  const OutputFormat fmt = parse_format(o.format);
  if (o.m < 0) throw UsageError("james needs --m >= 0");
  const JamesProfile c = profile(field, o.m);
  switch (fmt) {
    case OutputFormat::Text:
      out << to_string(c) << '\n';
      break;
    case OutputFormat::Csv:
      out << "field,m,prime,valuation\n";
      for (const auto& [p, v] : c.valuations) out << to_string(field) << ',' << o.m << ',' << p << ',' << v << '\n';
      break;
    case OutputFormat::Json: {
      ordered_json j;
      j["field"] = std::string(to_string(field));
      j["m"] = o.m;
      ordered_json vals = ordered_json::object();
      for (const auto& [p, v] : c.valuations) vals[std::to_string(p)] = v;
      j["valuations"] = std::move(vals);
      out << j.dump() << '\n';
      break;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- table

int cmd_table(const Options& o, std::ostream& out, std::ostream& err) {
  const OutputFormat fmt = parse_format(o.format);
  std::vector<Integer> ns = o.n_list.empty()
                                ? std::vector<Integer>{1, 2, 4, 6, 12, 24, 1440}
                                : parse_n_list(o.n_list);
  struct Row {
    Integer n;
    std::int64_t real, complex, quat;
  };
  std::vector<Row> rows;
  for (const auto& n : ns) {
    Row r{n, rho_real_adams(4 * n), rho_theorem8(FieldTag::C, 2 * n), rho_theorem8(FieldTag::H, n)};
    if (r.real != rho_oracle(FieldTag::R, 4 * n) || r.complex != rho_oracle(FieldTag::C, 2 * n) ||
        r.quat != rho_oracle(FieldTag::H, n)) {
      err << "closed forms disagree with the divisibility oracle at n = " << n << '\n';
      return kExitCounterexample;
    }
    rows.push_back(r);
  }
  switch (fmt) {
    case OutputFormat::Text:
      out << std::left << std::setw(8) << "n" << std::right << std::setw(14) << "rho_R(R^4n)" << std::setw(14)
          << "rho_C(C^2n)" << std::setw(14) << "rho_H(H^n)" << '\n';
      for (const auto& r : rows) {
        out << std::left << std::setw(8) << r.n.str() << std::right << std::setw(14) << r.real << std::setw(14)
            << r.complex << std::setw(14) << r.quat << '\n';
      }
      break;
    case OutputFormat::Csv:
      out << "n,rho_R_4n,rho_C_2n,rho_H_n\n";
      for (const auto& r : rows) out << r.n << ',' << r.real << ',' << r.complex << ',' << r.quat << '\n';
      break;
    case OutputFormat::Json: {
      ordered_json arr = ordered_json::array();
      for (const auto& r : rows) {
        ordered_json j;
        j["n"] = r.n.str();
        j["rho_R_4n"] = r.real;
        j["rho_C_2n"] = r.complex;
        j["rho_H_n"] = r.quat;
        arr.push_back(std::move(j));
      }
      out << arr.dump() << '\n';
      break;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct CheckOutcome {
  std::string name;
  bool passed;
  std::string message;
};

CheckOutcome from_sweep(const SweepReport& r, const std::string& index_name, const std::string& extra = {}) {
  std::ostringstream os;
  if (r.passed()) {
    os << "pass (" << index_name << " in [" << r.lo << ", " << r.hi << "], " << r.checked << " checked" << extra << ')';
  } else {
    os << "FAIL at " << index_name << " = " << *r.counterexample << ": " << r.detail;
  }
  return {r.name, r.passed(), os.str()};
}

CheckOutcome from_relation(const std::string& name, const RelationReport& r, const std::string& index_name) {
  std::ostringstream os;
  if (r.passed()) {
    os << "pass (" << index_name << " in [" << r.lo << ", " << r.hi << "], " << r.checked << " checked)";
  } else {
    os << "FAIL at " << index_name << " = " << *r.counterexample << ": " << r.detail;
  }
  return {name, r.passed(), os.str()};
}

std::vector<CheckOutcome> run_checks(const std::string& check, const Options& o) {
  static const std::vector<std::string> known = {"lemma7",     "theorem8", "theorem9",   "ss73",
                                                 "aw-parity",  "corollary6", "adams", "identities"};
  if (check != "all" && std::find(known.begin(), known.end(), check) == known.end()) {
    throw UsageError("unknown check \"" + check + "\"");
  }
  const bool all = check == "all";
  auto range_or = [&](std::int64_t lo, std::int64_t hi, std::int64_t min_lo) {
    return (o.range.empty() || all) ? std::make_pair(lo, hi) : parse_range(o.range, min_lo);
  };

  std::vector<CheckOutcome> outcomes;
  auto wants = [&](const std::string& name) { return all || check == name; };

  if (wants("lemma7")) {
    if (o.m_max < 1) throw UsageError("--m-max must be positive");
    outcomes.push_back(from_sweep(lemma7_sweep(all ? 200 : o.m_max), "m"));
  }
  if (wants("theorem8")) {
    const auto [lo, hi] = range_or(1, 100000, 1);
    outcomes.push_back(from_sweep(theorem8_sweep(lo, hi), "n"));
  }
  if (wants("theorem9")) {
    const auto [lo, hi] = range_or(1, 100000, 1);
    const SweepReport r = theorem9_sweep(lo, hi);
    std::ostringstream hist;
    hist << "; d histogram:";
    for (const auto& [d, count] : r.histogram) hist << " d=" << d << ':' << count;
    outcomes.push_back(from_sweep(r, "n", hist.str()));
  }
  if (wants("ss73")) {
    const auto [lo, hi] = range_or(0, 100, 0);
    outcomes.push_back(from_relation("ss73", relation_check(RelationKind::Ss73, lo, hi), "m"));
  }
  if (wants("aw-parity")) {
    const auto [lo, hi] = range_or(1, 100, 1);
    outcomes.push_back(from_relation("aw-parity", relation_check(RelationKind::AwOddEven, lo, hi), "k"));
  }
  if (wants("corollary6")) {
    const auto [lo, hi] = range_or(1, 100000, 1);
    outcomes.push_back(from_relation("corollary6", relation_check(RelationKind::Corollary6, lo, hi), "n"));
  }
  if (wants("adams")) {
    const auto [lo, hi] = range_or(1, 100000, 1);
    outcomes.push_back(from_relation("adams", relation_check(RelationKind::AdamsConsistency, lo, hi), "n"));
  }
  if (wants("identities")) {
    const std::int64_t trials = all ? 1000 : o.trials;
    if (trials < 1) throw UsageError("--trials must be positive");
    for (Identity id : all_identities()) {
      const auto r = run_identity_trials(id, trials, o.seed);
      std::ostringstream os;
      if (r.passed()) {
        os << "pass (" << r.trials << " exact random trials, seed " << o.seed << ')';
      } else {
        os << "FAIL at trial " << *r.failed_trial << " (seed " << o.seed << ')';
      }
      outcomes.push_back({"identities/" + std::string(to_string(id)), r.passed(), os.str()});
    }
  }
  return outcomes;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const OutputFormat fmt = parse_format(o.format);
  const auto outcomes = run_checks(o.check, o);
  const bool ok = std::all_of(outcomes.begin(), outcomes.end(), [](const auto& c) { return c.passed; });
  switch (fmt) {
    case OutputFormat::Text:
      for (const auto& c : outcomes) out << c.name << ": " << c.message << '\n';
      break;
    case OutputFormat::Csv:
      out << "check,passed,message\n";
      for (const auto& c : outcomes) out << c.name << ',' << (c.passed ? "true" : "false") << ",\"" << c.message << "\"\n";
      break;
    case OutputFormat::Json: {
      ordered_json arr = ordered_json::array();
      for (const auto& c : outcomes) {
        ordered_json j;
        j["check"] = c.name;
        j["passed"] = c.passed;
        j["message"] = c.message;
        arr.push_back(std::move(j));
      }
      out << arr.dump() << '\n';
      break;
    }
  }
  return ok ? kExitOk : kExitCounterexample;
}

// ---------------------------------------------------------------- construct / check-family

FieldFamily load_family(const std::string& path) {
  if (path.empty()) throw UsageError("--input is required");
  try {
    auto family = read_family(path);
    family.validate();
    return family;
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

void print_certificates(const FieldFamily& family, std::ostream& out, bool& all_fields, bool& hr_ok) {
  all_fields = true;
  for (const auto& f : family.members) {
    const auto cert = is_vector_field(f);
    out << "  " << f.name << ": " << cert.describe() << '\n';
    all_fields = all_fields && cert.passed();
  }
  const auto hr = hurwitz_radon_check(family);
  hr_ok = hr.passed();
  out << "  hurwitz-radon: " << (hr.passed() ? "pass" : "fail") << " (" << hr.describe() << ")\n";
}

int cmd_construct(const Options& o, std::ostream& out, std::ostream& err) {
  FieldFamily family;
  bool expect_certified = true;
  if (o.what == "example4") {
    if (o.n.empty()) throw UsageError("construct example4 needs --n");
    const Integer n = parse_positive(o.n, "--n");
    if (n > 4096) throw UsageError("--n too large for an explicit matrix");
    try {
      family = example4(n.convert_to<Eigen::Index>());
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  } else if (o.what == "lift") {
    const auto dir = parse_lift_direction(o.direction);
    if (!dir) throw UsageError("--direction must be C_to_R, H_to_C or H_to_R");
    std::optional<Unit> only;
    if (!o.unit.empty()) {
      if (o.unit == "i") only = Unit::I;
      else if (o.unit == "j") only = Unit::J;
      else if (o.unit == "k") only = Unit::K;
      else throw UsageError("--unit must be i, j or k");
    }
    const FieldFamily input = load_family(o.input);
    try {
      family = lift(input, *dir, only);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    // A lift is only as good as its input; report, do not insist.
    expect_certified = false;
  } else {
    throw UsageError("construct expects example4 or lift");
  }

  std::ostream& report = o.output.empty() ? err : out;
  if (!o.output.empty()) {
    write_family(family, o.output);
  } else {
    out << format_family(family);
  }
  report << "constructed " << family.members.size() << " field(s) on R^" << family.dim << " claimed over "
         << to_string(family.claimed_field) << '\n';
  bool all_fields = false;
  bool hr_ok = false;
  print_certificates(real_expansion(family), report, all_fields, hr_ok);
  if (expect_certified && !(all_fields && hr_ok)) {
    err << "internal error: constructed family failed its own certificate\n";
    return kExitCounterexample;
  }
  return kExitOk;
}

int cmd_check_family(const Options& o, std::ostream& out) {
  const FieldFamily family = load_family(o.input);
  const auto target = parse_theorem10_target(o.target);
  if (!target) throw UsageError("--target must be none, C, H_via_c or H_via_r");
  if (o.points < 0) throw UsageError("--points must be >= 0");

  const auto points = default_sample_points(family.dim, static_cast<std::size_t>(o.points), o.seed);
  Theorem10Report report;
  try {
    report = theorem10_check(family, *target, points);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  out << "family: " << family.members.size() << " field(s) on R^" << family.dim << " claimed over "
      << to_string(family.claimed_field) << ", target " << to_string(*target) << '\n';
  for (std::size_t l = 0; l < report.expanded.members.size(); ++l) {
    out << "  " << report.expanded.members[l].name << ": " << report.member_certificates[l].describe() << '\n';
  }
  out << "  hurwitz-radon: " << (report.hurwitz_radon.passed() ? "pass" : "fail") << " ("
      << report.hurwitz_radon.describe() << ")\n";
  out << "  sampled independence: " << (report.independence.independent ? "pass" : "fail") << " ("
      << report.independence.points_checked << " of " << points.size() << " points checked)\n";
  if (report.independence.witness) {
    const auto& x = points[*report.independence.witness].coords();
    out << "  witness point " << *report.independence.witness << ": (";
    for (Eigen::Index m = 0; m < x.size(); ++m) out << (m ? ", " : "") << format_rational(x(m));
    out << ")\n";
  }
  out << "certificate: " << to_string(report.level) << " - " << report.summary << '\n';
  return report.passed() ? kExitOk : kExitCounterexample;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vector fields on spheres: rho^F(F^n), James numbers and explicit field certificates", "vfs"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* cmd) { cmd->add_option("--format", o.format, "text, csv or json"); };

  auto* rho_cmd = app.add_subcommand("rho", "maximal number of independent F-vector fields on S(F^n)");
  rho_cmd->add_option("--field", o.field, "r, c or h")->required();
  rho_cmd->add_option("--n", o.n, "dimension n of F^n");
  rho_cmd->add_option("--range", o.range, "A:B, every n in the interval");
  rho_cmd->add_option("--method", o.method, "adams_closed_form, theorem8 or oracle");
  rho_cmd->add_flag("--all-methods", o.all_methods, "run every route and require agreement");
  add_format(rho_cmd);

  auto* james_cmd = app.add_subcommand("james", "prime valuations of the James number c_m^F");
  james_cmd->add_option("--field", o.field, "r, c or h")->required();
  james_cmd->add_option("--m", o.m, "index m >= 0")->required();
  add_format(james_cmd);

  auto* table_cmd = app.add_subcommand("table", "rho^R(R^4n), rho^C(C^2n), rho^H(H^n) for a list of n");
  table_cmd->add_option("--n-list", o.n_list, "comma-separated n (default 1,2,4,6,12,24,1440)");
  add_format(table_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "exact verification sweeps");
  verify_cmd->add_option("check", o.check, "lemma7, theorem8, theorem9, ss73, aw-parity, corollary6, adams, identities, all")
      ->required();
  verify_cmd->add_option("--range", o.range, "A:B sweep range");
  verify_cmd->add_option("--m-max", o.m_max, "largest m for lemma7");
  verify_cmd->add_option("--trials", o.trials, "random trials per identity");
  verify_cmd->add_option("--seed", o.seed, "seed for random trials");
  add_format(verify_cmd);

  auto* construct_cmd = app.add_subcommand("construct", "build a field family file");
  construct_cmd->add_option("what", o.what, "example4 or lift")->required();
  construct_cmd->add_option("--n", o.n, "complex dimension for example4 (even)");
  construct_cmd->add_option("--input", o.input, "family file to lift");
  construct_cmd->add_option("--direction", o.direction, "C_to_R, H_to_C or H_to_R");
  construct_cmd->add_option("--unit", o.unit, "restrict H_to_R to one of i, j, k");
  construct_cmd->add_option("--output", o.output, "write the family here instead of stdout");

  auto* check_cmd = app.add_subcommand("check-family", "certify a family file");
  check_cmd->add_option("--input", o.input, "family file")->required();
  check_cmd->add_option("--target", o.target, "none, C, H_via_c or H_via_r");
  check_cmd->add_option("--points", o.points, "random sample points in addition to +-e_m");
  check_cmd->add_option("--seed", o.seed, "seed for sample points");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*rho_cmd) return cmd_rho(o, out, err);
    if (*james_cmd) return cmd_james(o, out);
    if (*table_cmd) return cmd_table(o, out, err);
    if (*verify_cmd) return cmd_verify(o, out);
    if (*construct_cmd) return cmd_construct(o, out, err);
    if (*check_cmd) return cmd_check_family(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace vfs
