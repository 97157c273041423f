#include <kirby/certificate.hpp>

#include <algorithm>
#include <sstream>

namespace kirby {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

const char* to_string(Basis b) { return b == Basis::Published ? "published" : "derived"; }

const Check& Certificate::expect(std::string name, const std::string& expected,
                                 const std::string& actual, Basis basis) {
  checks.push_back({std::move(name), expected == actual ? CheckStatus::Pass : CheckStatus::Fail,
                    expected, actual, basis});
  return checks.back();
}

void Certificate::absorb(const Certificate& other) {
  moves.insert(moves.end(), other.moves.begin(), other.moves.end());
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  conjectural = conjectural || other.conjectural;
}

bool Certificate::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.status == CheckStatus::Pass; }) &&
         chi == counts.euler_characteristic();
}

nlohmann::ordered_json counts_to_json(const HandleCounts& c) {
  return {{"h0", c.h0}, {"h1", c.h1}, {"h2", c.h2}, {"h3", c.h3}, {"h4", c.h4}};
}

nlohmann::ordered_json Certificate::to_json() const {
  nlohmann::ordered_json out;
  out["construction"] = construction;
  out["counts"] = counts_to_json(counts);
  out["chi"] = chi;
  out["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    out["checks"].push_back({{"name", c.name},
                             {"status", to_string(c.status)},
                             {"expected", c.expected},
                             {"actual", c.actual},
                             {"basis", to_string(c.basis)}});
  out["moves"] = moves;
  out["conjectural"] = conjectural;
  out["passed"] = passed();
  return out;
}

std::string Certificate::to_text() const {
  std::ostringstream out;
  out << "construction: " << construction << "\n";
  if (conjectural) out << "shape: conjectural (outside the proved cases)\n";
  out << "decomposition: " << counts.union_expression() << "\n";
  out << "counts (h0..h4): " << counts.to_string() << "\n";
  out << "euler characteristic: " << chi << "\n";
  out << "moves:\n";
  for (std::size_t i = 0; i < moves.size(); ++i) out << "  " << i + 1 << ". " << moves[i] << "\n";
  out << "checks:\n";
  for (const auto& c : checks)
    out << "  [" << to_string(c.status) << "] " << c.name << ": expected " << c.expected
        << ", got " << c.actual << " (" << to_string(c.basis) << ")\n";
  out << "result: " << (passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace kirby
