#include "plh/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "plh/harness.hpp"
#include "plh/json_io.hpp"
#include "plh/pgroup.hpp"
#include "plh/sampling.hpp"

namespace plh {

namespace {

// Reads named files, falling back to successive JSON documents on stdin.
class ElementSource {
public:
  explicit ElementSource(std::istream& in) : in_(in) {}

  PLHomeo read(const std::string& path) {
    if (!path.empty() && path != "-") {
      std::ifstream file(path);
      if (!file) throw Error(ErrorCode::usage, "cannot open '" + path + "'");
      std::ostringstream text;
      text << file.rdbuf();
      return element_from_text(text.str());
    }
    nlohmann::json doc;
    try {
      in_ >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::parse, std::string("stdin: ") + e.what());
    }
    return element_from_json(doc);
  }

private:
  std::istream& in_;
};

GroupKind resolve_mode(const std::string& mode, const std::string& base,
                       const std::string& fallback) {
  const std::string m = mode.empty() ? fallback : mode;
  if (m == "Pa") {
    if (base.empty()) throw Error(ErrorCode::usage, "--base is required with --mode Pa");
    return GroupKind::Pa(Rational::parse(base));
  }
  if (!base.empty()) throw Error(ErrorCode::usage, "--base is only valid with --mode Pa");
  if (m == "F") return GroupKind::F();
  if (m == "PQ") return GroupKind::PQ();
  if (m == "P") return GroupKind::P();
  throw Error(ErrorCode::usage, "unknown mode '" + m + "' (expected F, Pa, PQ or P)");
}

void emit(std::ostream& out, const PLHomeo& f) { out << to_json(f).dump() << '\n'; }

struct Settings {
  std::string file_a;
  std::string file_b;
  std::string mode;
  std::string base;
  std::string at;
  std::string which;
  std::string k;
  std::string xi;
  std::string target;
  std::string suite = "all";
  std::uint64_t seed = 42;
  long cases = 200;
  bool json = false;
  bool serial = false;
  int points = 1024;
  int precision = 12;
  std::string csv;
};

void add_mode(CLI::App* cmd, Settings& s) {
  cmd->add_option("--mode", s.mode, "Group: F (default), Pa, PQ or P");
  cmd->add_option("--base", s.base, "Slope base a > 1, required iff --mode Pa");
}

int do_invariant(const Settings& s, ElementSource& src, std::ostream& out) {
  const GroupKind kind = resolve_mode(s.mode, s.base, "F");
  if (kind.tag != GroupTag::F && kind.tag != GroupTag::Pa)
    throw Error(ErrorCode::usage, "invariants are defined for --mode F and --mode Pa only");
  const PLHomeo f = src.read(s.file_a);
  if (kind.tag == GroupTag::F && !member(kind, f))
    throw Error(ErrorCode::precondition, "element is not in F");
  if (s.which == "alpha") {
    out << end_exponents(f, kind.a).str() << '\n';
  } else if (kind.tag == GroupTag::F) {
    if (s.which == "beta")
      out << thompson::beta(f).get_str() << '\n';
    else
      emit(out, thompson::gamma(f));
  } else {
    const pa::PaContext ctx(kind.a);
    if (s.which == "beta")
      out << pa::beta_a(ctx, f).str() << '\n';
    else
      emit(out, pa::gamma_a(ctx, f));
  }
  return kExitOk;
}

int do_construct(const Settings& s, ElementSource& src, std::ostream& out) {
  if (s.which == "beta") {
    const GroupKind kind = resolve_mode(s.mode, s.base, "F");
    if (kind.tag == GroupTag::F) {
      if (s.k.empty()) throw Error(ErrorCode::usage, "construct beta needs --k");
      mpz_class k;
      if (k.set_str(s.k, 10) != 0) throw Error(ErrorCode::parse, "--k is not an integer: " + s.k);
      emit(out, thompson::realize_beta(k));
    } else if (kind.tag == GroupTag::Pa) {
      if (s.xi.empty()) throw Error(ErrorCode::usage, "construct beta --mode Pa needs --xi");
      emit(out, pa::realize_beta_a(pa::PaContext(kind.a), Rational::parse(s.xi)));
    } else {
      throw Error(ErrorCode::usage, "construct beta supports --mode F and --mode Pa");
    }
    return kExitOk;
  }
  const PLHomeo target = src.read(s.target);
  if (s.which == "gamma") {
    const GroupKind kind = resolve_mode(s.mode, s.base, "F");
    if (kind.tag == GroupTag::F)
      emit(out, thompson::realize_gamma(target));
    else if (kind.tag == GroupTag::Pa)
      emit(out, pa::realize_gamma_a(pa::PaContext(kind.a), target));
    else
      throw Error(ErrorCode::usage, "construct gamma supports --mode F and --mode Pa");
    return kExitOk;
  }
  const GroupKind kind = resolve_mode(s.mode, s.base, "P");
  const pgroup::Realized r = pgroup::realize_info(target, kind);
  nlohmann::json doc = to_json(r.g);
  doc["basepoint"] = r.basepoint.str();
  out << doc.dump() << '\n';
  return kExitOk;
}

int do_verify(const Settings& s, std::ostream& out) {
  harness::Options options;
  options.seed = s.seed;
  options.cases = s.cases;
  options.execution = s.serial ? harness::Execution::serial : harness::Execution::parallel;
  const harness::SuiteReport report = harness::run_suite(s.suite, options);
  if (s.json)
    out << harness::to_json(report).dump(2) << '\n';
  else
    out << harness::to_text(report);
  return report.failures == 0 ? kExitOk : kExitVerification;
}

int do_sample(const Settings& s, ElementSource& src, std::ostream& out) {
  const PLHomeo f = src.read(s.file_a);
  const std::vector<Sample> samples =
      s.serial ? sample_serial(f, s.points) : sample_parallel(f, s.points);
  const std::string csv = samples_to_csv(samples, s.precision);
  if (s.csv.empty() || s.csv == "-") {
    out << csv;
  } else {
    std::ofstream file(s.csv);
    if (!file) throw Error(ErrorCode::usage, "cannot write '" + s.csv + "'");
    file << csv;
  }
  return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Settings s;
  CLI::App app{"Exact arithmetic for groups of piecewise-linear homeomorphisms of [0,1]", "plh"};
  app.require_subcommand(1);

  auto* compose_cmd = app.add_subcommand("compose", "Print f o g");
  compose_cmd->add_option("f.json", s.file_a, "Element file (stdin if omitted)");
  compose_cmd->add_option("g.json", s.file_b, "Element file (stdin if omitted)");

  auto* invert_cmd = app.add_subcommand("invert", "Print f^-1");
  invert_cmd->add_option("f.json", s.file_a, "Element file (stdin if omitted)");

  auto* conjugate_cmd = app.add_subcommand("conjugate", "Print h^g = g h g^-1");
  conjugate_cmd->add_option("h.json", s.file_a, "Element file (stdin if omitted)");
  conjugate_cmd->add_option("g.json", s.file_b, "Element file (stdin if omitted)");

  auto* eval_cmd = app.add_subcommand("eval", "Print f(p/q)");
  eval_cmd->add_option("f.json", s.file_a, "Element file (stdin if omitted)");
  eval_cmd->add_option("--at", s.at, "Point p/q in [0,1]")->required();

  auto* invariant_cmd = app.add_subcommand("invariant", "Print alpha, beta or gamma");
  invariant_cmd->add_option("which", s.which)
      ->required()
      ->check(CLI::IsMember({"alpha", "beta", "gamma"}));
  invariant_cmd->add_option("f.json", s.file_a, "Element file (stdin if omitted)");
  add_mode(invariant_cmd, s);

  auto* construct_cmd = app.add_subcommand("construct", "Build an element with a given invariant");
  construct_cmd->add_option("what", s.which)
      ->required()
      ->check(CLI::IsMember({"beta", "gamma", "info"}));
  construct_cmd->add_option("--k", s.k, "Odd k >= 1 for beta in F");
  construct_cmd->add_option("--xi", s.xi, "xi in (1/a, 1] for beta in Pa");
  construct_cmd->add_option("--target", s.target, "Target element file (stdin if omitted)");
  add_mode(construct_cmd, s);

  auto* verify_cmd = app.add_subcommand("verify", "Run property suites");
  verify_cmd->add_option("--suite", s.suite, "Suite name or 'all'");
  verify_cmd->add_option("--seed", s.seed, "Master seed");
  verify_cmd->add_option("--cases", s.cases, "Cases per property")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", s.json, "Emit the report as JSON");
  verify_cmd->add_flag("--serial", s.serial, "Run cases on one thread");

  auto* sample_cmd = app.add_subcommand("sample", "Evaluate f on a uniform grid");
  sample_cmd->add_option("f.json", s.file_a, "Element file (stdin if omitted)");
  sample_cmd->add_option("--points", s.points, "Grid size (>= 2)");
  sample_cmd->add_option("--csv", s.csv, "Output file (stdout if omitted)");
  sample_cmd->add_option("--precision", s.precision, "Decimal digits")
      ->check(CLI::NonNegativeNumber);
  sample_cmd->add_flag("--serial", s.serial, "Use the serial kernel");

  auto* member_cmd = app.add_subcommand("check-member", "Test membership in a group");
  member_cmd->add_option("f.json", s.file_a, "Element file (stdin if omitted)");
  add_mode(member_cmd, s);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << code_name(ErrorCode::usage) << ": " << e.what() << '\n';
    return kExitDomain;
  }

  ElementSource src(in);
  try {
    if (*compose_cmd) {
      const PLHomeo f = src.read(s.file_a);
      emit(out, compose(f, src.read(s.file_b)));
    } else if (*invert_cmd) {
      emit(out, invert(src.read(s.file_a)));
    } else if (*conjugate_cmd) {
      const PLHomeo h = src.read(s.file_a);
      emit(out, conjugate(h, src.read(s.file_b)));
    } else if (*eval_cmd) {
      const Rational at = Rational::parse(s.at);
      out << src.read(s.file_a).evaluate(at).str() << '\n';
    } else if (*invariant_cmd) {
      return do_invariant(s, src, out);
    } else if (*construct_cmd) {
      return do_construct(s, src, out);
    } else if (*verify_cmd) {
      return do_verify(s, out);
    } else if (*sample_cmd) {
      return do_sample(s, src, out);
    } else if (*member_cmd) {
      const GroupKind kind = resolve_mode(s.mode, s.base, "F");
      const bool in_group = member(kind, src.read(s.file_a));
      out << (in_group ? "true" : "false") << '\n';
      return in_group ? kExitOk : kExitVerification;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << code_name(e.code()) << ": " << e.what() << '\n';
    return e.code() == ErrorCode::verification ? kExitVerification : kExitDomain;
  }
}

} // namespace plh
