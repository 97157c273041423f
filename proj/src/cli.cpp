#include <kirby/cli.hpp>

#include <kirby/certificate.hpp>
#include <kirby/decomposition_io.hpp>
#include <kirby/plumbing.hpp>
#include <kirby/report.hpp>
#include <kirby/script.hpp>
#include <kirby/surgery.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace kirby::cli {

namespace {

struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Integer parse_integer(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size() || !std::all_of(s.begin() + i, s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw UsageFailure("not an integer: '" + s + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

std::vector<Integer> parse_integers(const std::vector<std::string>& words) {
  std::vector<Integer> out;
  for (const auto& w : words) out.push_back(parse_integer(w));
  return out;
}

int parse_small(const std::string& s, const char* what) {
  const Integer v = parse_integer(s);
  if (v < 2 || v > 100000) throw UsageFailure(std::string(what) + " must be in [2, 100000]");
  return v.convert_to<int>();
}

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) out += (out.empty() ? "" : " ") + w;
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Format, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Format, "cannot write '" + path + "'");
  out << text;
}

// Envelope shared by every machine-readable output.
Certificate envelope(std::string construction, const HandleDecomposition& x) {
  Certificate c;
  c.construction = std::move(construction);
  c.counts = counts(x);
  c.chi = euler_characteristic(x);
  return c;
}

struct Options {
  bool json = false;

  std::string build_kind;
  std::vector<std::string> build_args;
  std::string build_output;

  std::string invariants_file;

  std::string lens_kind;
  std::vector<std::string> lens_args;

  std::string script_path;
  std::string report_path;

  std::string verify_kind;
  int n = 1, p = 2, q = 3;
  bool all_proved = false;
  bool allow_unsupported = false;
};

int cmd_build(const Options& o, std::ostream& out) {
  HandleDecomposition x;
  Certificate c;
  const std::string what = o.build_kind + (o.build_args.empty() ? "" : " " + join(o.build_args));
  if (o.build_kind == "cp" || o.build_kind == "bp") {
    if (o.build_args.size() != 1) throw UsageFailure("build " + o.build_kind + " takes one argument P");
    const int p = parse_small(o.build_args[0], "P");
    const Integer p2 = Integer(p) * p;
    if (o.build_kind == "cp") {
      x = c_p(p);
      c = envelope(what, x);
      c.expect("|det| of the chain", p2.str(), abs(determinant(known_linking(x))).str(), Basis::Derived);
      const auto lens = boundary_lens_space(x);
      c.expect("boundary lens space", LensSpace(p2, p - 1).to_string(),
               lens ? lens->to_string() : "none", Basis::Published);
    } else {
      x = b_p(p);
      c = envelope(what, x);
      c.expect("H_1", AbelianGroup(0, {Integer(p)}).to_string(), homology_h1(x).to_string(),
               Basis::Published);
    }
  } else if (o.build_kind == "chain") {
    if (o.build_args.empty()) throw UsageFailure("build chain takes at least one weight");
    x = from_plumbing(PlumbingGraph::chain(parse_integers(o.build_args)));
    c = envelope(what, x);
  } else {
    throw UsageFailure("build: expected cp, bp or chain, got '" + o.build_kind + "'");
  }
  c.move("build " + what);

  const std::string file = write_decomposition(x);
  if (!o.build_output.empty()) write_file(o.build_output, file);
  if (o.json) {
    auto j = c.to_json();
    j["decomposition"] = to_json(x);
    out << j.dump(2) << "\n";
  } else if (!o.build_output.empty()) {
    out << c.to_text();
  } else {
    out << file;
  }
  return c.passed() ? Ok : CheckFailed;
}

int cmd_invariants(const Options& o, std::ostream& out) {
  const HandleDecomposition x = load_decomposition_file(o.invariants_file);
  const InvariantsReport r = compute_invariants(x);
  if (o.json) {
    auto j = envelope("invariants " + std::filesystem::path(o.invariants_file).filename().string(), x).to_json();
    j["invariants"] = r.to_json();
    out << j.dump(2) << "\n";
  } else {
    out << r.to_text();
  }
  return Ok;
}

int cmd_lens(const Options& o, std::ostream& out) {
  if (o.lens_kind != "chain") throw UsageFailure("lens: expected 'chain', got '" + o.lens_kind + "'");
  if (o.lens_args.empty()) throw UsageFailure("lens chain takes at least one weight");
  const auto weights = parse_integers(o.lens_args);
  const LensSpace lens = lens_space_of_chain(weights);
  if (o.json) {
    const auto x = from_plumbing(PlumbingGraph::chain(weights));
    auto j = envelope("lens chain " + join(o.lens_args), x).to_json();
    j["lens"] = lens.to_string();
    j["p"] = integer_to_json(lens.p());
    j["q"] = integer_to_json(lens.q());
    out << j.dump(2) << "\n";
  } else {
    out << lens.to_string() << "\n";
  }
  return Ok;
}

Certificate transcript_certificate(const std::string& name, const script::Transcript& t) {
  Certificate c;
  c.construction = "script " + name;
  if (!t.entries.empty()) {
    c.counts = t.entries.back().counts;
    c.chi = t.entries.back().chi;
  }
  for (const auto& e : t.entries) {
    c.move(e.echo);
    if (e.certificate) {
      for (auto check : e.certificate->checks) {
        check.name = e.echo + ": " + check.name;
        c.checks.push_back(std::move(check));
      }
      c.conjectural = c.conjectural || e.certificate->conjectural;
    }
    if (e.assertion && !e.certificate)
      c.checks.push_back({e.echo, *e.assertion ? CheckStatus::Pass : CheckStatus::Fail, e.expected,
                          e.actual, Basis::Derived});
  }
  // A failed assertion is already listed above; runtime errors are not.
  if (t.failure && (t.entries.empty() || t.entries.back().assertion != false))
    c.checks.push_back({"line " + std::to_string(t.failure->pos.line) + ", column " +
                            std::to_string(t.failure->pos.column),
                        CheckStatus::Fail, "no error", t.failure->message, Basis::Derived});
  return c;
}

int cmd_run(const Options& o, std::ostream& out) {
  const auto parsed = script::parse(read_file(o.script_path));
  script::ExecuteOptions exec;
  exec.base_dir = std::filesystem::path(o.script_path).parent_path();
  if (exec.base_dir.empty()) exec.base_dir = ".";
  const auto t = script::execute(parsed, std::nullopt, exec);

  auto structured = [&] {
    auto j = transcript_certificate(std::filesystem::path(o.script_path).filename().string(), t).to_json();
    j["passed"] = t.ok() && j["passed"].get<bool>();
    j["transcript"] = t.to_json();
    return j;
  };
  if (!o.report_path.empty()) write_file(o.report_path, structured().dump(2) + "\n");
  if (o.json)
    out << structured().dump(2) << "\n";
  else
    out << t.to_text();
  return t.ok() ? Ok : CheckFailed;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.verify_kind != "enpq") throw UsageFailure("verify: expected 'enpq', got '" + o.verify_kind + "'");
  if (o.all_proved) {
    if (o.n < 1) throw UsageFailure("--n must be at least 1");
    const auto certs = verify_all_proved(o.n);
    const bool passed = std::all_of(certs.begin(), certs.end(), [](const Certificate& c) { return c.passed(); });
    if (o.json) {
      nlohmann::ordered_json j;
      j["construction"] = "E(n)_{p,q} for n = 1.." + std::to_string(o.n) + " and the proved pairs";
      j["certificates"] = nlohmann::ordered_json::array();
      for (const auto& c : certs) j["certificates"].push_back(c.to_json());
      j["passed"] = passed;
      out << j.dump(2) << "\n";
    } else {
      for (const auto& c : certs)
        out << (c.passed() ? "PASS  " : "FAIL  ") << c.construction << "  "
            << c.counts.union_expression() << "\n";
      out << (passed ? "all certificates passed" : "some certificates FAILED") << " (" << certs.size()
          << ")\n";
    }
    return passed ? Ok : CheckFailed;
  }
  if (o.n < 1 || o.p < 2 || o.q < 2) throw UsageFailure("--n must be >= 1 and --p, --q >= 2");
  const Certificate c = verify_main_theorem(o.n, o.p, o.q, o.allow_unsupported);
  out << (o.json ? c.to_json().dump(2) + "\n" : c.to_text());
  return c.passed() ? Ok : CheckFailed;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
  Options o;
  CLI::App app{"Kirby calculus bookkeeping for handle decompositions of 4-manifolds", "kirby"};
  app.require_subcommand(1, 1);
  app.add_flag("--json", o.json, "Machine-readable output");

  auto* build = app.add_subcommand("build", "Emit a decomposition file: cp P | bp P | chain W...");
  build->add_option("kind", o.build_kind, "cp, bp or chain")->required();
  build->add_option("args", o.build_args, "P or chain weights");
  build->add_option("-o,--output", o.build_output, "Write the decomposition here");

  auto* invariants = app.add_subcommand("invariants", "Invariants of a decomposition file");
  invariants->add_option("file", o.invariants_file)->required();

  auto* lens = app.add_subcommand("lens", "Boundary lens space: chain W...");
  lens->add_option("kind", o.lens_kind, "chain")->required();
  lens->add_option("weights", o.lens_args)->required();

  auto* run = app.add_subcommand("run", "Execute a move script");
  run->add_option("script", o.script_path)->required();
  run->add_option("--report", o.report_path, "Also write a JSON report here");

  auto* repl = app.add_subcommand("repl", "Interactive move script session");

  auto* verify = app.add_subcommand("verify", "Certificates for E(n)_{p,q}");
  verify->add_option("kind", o.verify_kind, "enpq")->required();
  verify->add_option("--n", o.n, "n (or the largest n with --all-proved)");
  verify->add_option("--p", o.p);
  verify->add_option("--q", o.q);
  verify->add_flag("--all-proved", o.all_proved, "Sweep n = 1..N over the proved pairs");
  verify->add_flag("--allow-unsupported", o.allow_unsupported,
                   "Allow (p, q) outside the proved pairs (conjectural certificate)");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "kirby: " << e.what() << "\n" << "run 'kirby --help' for usage\n";
    return UsageError;
  }

  try {
    if (build->parsed()) return cmd_build(o, out);
    if (invariants->parsed()) return cmd_invariants(o, out);
    if (lens->parsed()) return cmd_lens(o, out);
    if (run->parsed()) return cmd_run(o, out);
    if (repl->parsed()) return script::run_repl(in, out) == 0 ? Ok : CheckFailed;
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const UsageFailure& e) {
    err << "kirby: " << e.what() << "\n";
    return UsageError;
  } catch (const script::ParseError& e) {
    err << "kirby: " << o.script_path << ": syntax error: " << e.what() << "\n";
    return InputError;
  } catch (const Error& e) {
    err << "kirby: " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
    return InputError;
  }
  return UsageError;
}

}  // namespace kirby::cli
