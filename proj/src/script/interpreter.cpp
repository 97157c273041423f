#include <kirby/script.hpp>

#include <kirby/decomposition_io.hpp>
#include <kirby/plumbing.hpp>
#include <kirby/report.hpp>
#include <kirby/surgery.hpp>

#include <istream>
#include <ostream>
#include <sstream>

namespace kirby::script {

namespace {

int small_int(const Integer& v, const char* what, int min, int max = 100000) {
  if (v < min || v > max)
    throw Error(ErrorKind::Domain, std::string(what) + " must be in [" + std::to_string(min) +
                                       ", " + std::to_string(max) + "], got " + v.str());
  return v.convert_to<int>();
}

std::string outcome(bool pass, const std::string& expected, const std::string& actual) {
  return std::string("assert ") + (pass ? "pass" : "FAIL") + ": expected " + expected + ", got " +
         actual;
}

std::string inertia_text(const Inertia& i) {
  return "(" + std::to_string(i.positive) + ", " + std::to_string(i.zero) + ", " +
         std::to_string(i.negative) + ")";
}

std::string certificate_summary(const Certificate& c) {
  std::size_t passed = 0;
  for (const auto& check : c.checks) passed += check.status == CheckStatus::Pass;
  return "certificate " + std::string(c.passed() ? "PASS" : "FAIL") + " (" +
         std::to_string(passed) + "/" + std::to_string(c.checks.size()) + " checks): " +
         c.counts.union_expression();
}

}  // namespace

Session::Session(HandleDecomposition initial, ExecuteOptions options)
    : state_(std::move(initial)), options_(std::move(options)) {}

TranscriptEntry Session::apply(const Statement& s) {
  TranscriptEntry entry;
  entry.pos = s.pos;
  entry.echo = format(s.command);
  HandleDecomposition& x = state_;

  auto assertion = [&](bool pass, const std::string& expected, const std::string& actual) {
    entry.assertion = pass;
    entry.expected = expected;
    entry.actual = actual;
    entry.report = outcome(pass, expected, actual);
  };

  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, LoadCp>) {
          x = c_p(small_int(c.p, "p", 2));
        } else if constexpr (std::is_same_v<T, LoadBp>) {
          x = b_p(small_int(c.p, "p", 2));
        } else if constexpr (std::is_same_v<T, LoadChain>) {
          x = from_plumbing(PlumbingGraph::chain(c.weights));
        } else if constexpr (std::is_same_v<T, LoadFile>) {
          x = load_decomposition_file((options_.base_dir / c.path).string());
        } else if constexpr (std::is_same_v<T, LoadEnp>) {
          x = elliptic_en_p(small_int(c.n, "n", 1, 1000), small_int(c.p, "p", 2), c.conjectural).host;
        } else if constexpr (std::is_same_v<T, Slide>) {
          x = handle_slide(x, c.handle, c.over, c.sign);
        } else if constexpr (std::is_same_v<T, BlowUp>) {
          x = blow_up(x, c.sign);
          entry.report = "new handle " + x.two_handle_labels().back();
        } else if constexpr (std::is_same_v<T, BlowDown>) {
          x = blow_down(x, c.handle, c.strict);
        } else if constexpr (std::is_same_v<T, Cancel12>) {
          x = cancel_12(x, c.dotted, c.meridian);
        } else if constexpr (std::is_same_v<T, Add3>) {
          x = add_three_handles(x, static_cast<std::size_t>(small_int(c.k, "k", 0)));
        } else if constexpr (std::is_same_v<T, Add4>) {
          x = add_four_handle(x);
        } else if constexpr (std::is_same_v<T, RationalBlowdown>) {
          const int p = small_int(c.p, "p", 2);
          for (const auto& shape : find_cp_chains(x, p)) {
            if (c.attachment && shape.attachment != *c.attachment) continue;
            auto out = rational_blowdown(shape);
            entry.report = certificate_summary(out.certificate);
            if (!out.certificate.passed()) entry.assertion = false;
            entry.certificate = std::move(out.certificate);
            x = std::move(out.result);
            return;
          }
          throw Error(ErrorKind::ShapeViolation,
                      "no copy of C_" + std::to_string(p) + " with a valid attachment" +
                          (c.attachment ? " '" + *c.attachment + "'" : std::string()));
        } else if constexpr (std::is_same_v<T, LogTransform>) {
          const int p = small_int(c.p, "multiplicity", 2);
          for (const auto& shape : find_cusps(x)) {
            if (c.cusp && (shape.cusp != *c.cusp || shape.attachment != *c.attachment)) continue;
            auto out = log_transform(shape, p);
            entry.report = certificate_summary(out.certificate);
            if (!out.certificate.passed()) entry.assertion = false;
            entry.certificate = std::move(out.certificate);
            x = std::move(out.result);
            return;
          }
          throw Error(ErrorKind::ShapeViolation, "no cusp neighborhood with an attachment");
        } else if constexpr (std::is_same_v<T, Invariants>) {
          entry.report = compute_invariants(x).to_text();
        } else if constexpr (std::is_same_v<T, Counts>) {
          entry.report = counts(x).union_expression();
        } else if constexpr (std::is_same_v<T, AssertCounts>) {
          const HandleCounts expected{
              static_cast<std::size_t>(small_int(c.counts[0], "h0", 0, 1 << 30)),
              static_cast<std::size_t>(small_int(c.counts[1], "h1", 0, 1 << 30)),
              static_cast<std::size_t>(small_int(c.counts[2], "h2", 0, 1 << 30)),
              static_cast<std::size_t>(small_int(c.counts[3], "h3", 0, 1 << 30)),
              static_cast<std::size_t>(small_int(c.counts[4], "h4", 0, 1 << 30))};
          assertion(expected == counts(x), expected.to_string(), counts(x).to_string());
        } else if constexpr (std::is_same_v<T, AssertChi>) {
          const Integer actual(euler_characteristic(x));
          assertion(c.chi == actual, c.chi.str(), actual.str());
        } else if constexpr (std::is_same_v<T, AssertH1>) {
          std::vector<Integer> torsion = c.torsion;
          const AbelianGroup expected(static_cast<std::size_t>(small_int(c.free_rank, "rank", 0, 1 << 30)),
                                      std::move(torsion));
          const AbelianGroup actual = homology_h1(x);
          assertion(expected == actual, expected.to_string(), actual.to_string());
        } else if constexpr (std::is_same_v<T, AssertLens>) {
          const LensSpace expected(c.p, c.q);
          const auto actual = boundary_lens_space(x);
          if (!actual)
            throw Error(ErrorKind::Domain, "boundary is not recognized as a lens space");
          assertion(lens_equivalent(expected, *actual), expected.to_string(), actual->to_string());
        } else if constexpr (std::is_same_v<T, AssertDet>) {
          const Integer actual = determinant(known_linking(x));
          assertion(c.det == actual, c.det.str(), actual.str());
        } else if constexpr (std::is_same_v<T, AssertSignature>) {
          const Inertia actual = signature(known_linking(x));
          const std::string expected =
              "(" + c.positive.str() + ", " + c.zero.str() + ", " + c.negative.str() + ")";
          assertion(expected == inertia_text(actual), expected, inertia_text(actual));
        } else if constexpr (std::is_same_v<T, Save>) {
          save_decomposition_file(x, (options_.base_dir / c.path).string());
        }
      },
      s.command);

  entry.counts = counts(x);
  entry.chi = euler_characteristic(x);
  return entry;
}

Transcript execute(const MoveScript& s, std::optional<HandleDecomposition> initial,
                   ExecuteOptions options) {
  Transcript t;
  Session session(initial ? std::move(*initial) : HandleDecomposition(), std::move(options));
  for (const auto& st : s.statements) {
    try {
      t.entries.push_back(session.apply(st));
    } catch (const Error& e) {
      t.failure = Failure{st.pos, std::string(error_kind_name(e.kind())) + ": " + e.what()};
      break;
    }
    const auto& last = t.entries.back();
    if (last.assertion == false) {
      t.failure = Failure{st.pos, last.report};
      break;
    }
  }
  return t;
}

std::string Transcript::to_text() const {
  std::ostringstream out;
  for (const auto& e : entries) {
    out << "[" << e.pos.line << ":" << e.pos.column << "] " << e.echo << "\n";
    out << "    counts " << e.counts.to_string() << "  chi " << e.chi << "\n";
    if (!e.report.empty()) {
      std::istringstream lines(e.report);
      for (std::string line; std::getline(lines, line);) out << "    " << line << "\n";
    }
  }
  if (failure)
    out << "error at line " << failure->pos.line << ", column " << failure->pos.column << ": "
        << failure->message << "\n";
  out << (ok() ? "OK" : "FAILED") << " (" << entries.size() << " statements)\n";
  return out.str();
}

nlohmann::ordered_json Transcript::to_json() const {
  nlohmann::ordered_json out;
  out["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json j;
    j["line"] = e.pos.line;
    j["column"] = e.pos.column;
    j["statement"] = e.echo;
    j["counts"] = counts_to_json(e.counts);
    j["chi"] = e.chi;
    j["report"] = e.report;
    j["assertion"] = e.assertion ? nlohmann::ordered_json(*e.assertion ? "pass" : "fail")
                                 : nlohmann::ordered_json(nullptr);
    out["entries"].push_back(std::move(j));
  }
  if (failure)
    out["failure"] = {{"line", failure->pos.line},
                      {"column", failure->pos.column},
                      {"message", failure->message}};
  else
    out["failure"] = nullptr;
  out["ok"] = ok();
  return out;
}

int run_repl(std::istream& in, std::ostream& out, ExecuteOptions options) {
  Session session({}, std::move(options));
  bool failed = false;
  std::size_t line_no = 0;
  auto prompt = [&] {
    out << counts(session.state()).to_string() << " chi " << euler_characteristic(session.state())
        << "> " << std::flush;
  };
  prompt();
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    try {
      for (const auto& st : parse(line, line_no).statements) {
        const auto entry = session.apply(st);
        if (!entry.report.empty()) out << entry.report << (entry.report.back() == '\n' ? "" : "\n");
        failed = failed || entry.assertion == false;
      }
    } catch (const ParseError& e) {
      out << "syntax error: " << e.what() << "\n";
    } catch (const Error& e) {
      out << "error: " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
    }
    prompt();
  }
  out << "\n";
  return failed ? 1 : 0;
}

}  // namespace kirby::script
