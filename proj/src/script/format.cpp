#include <kirby/script.hpp>

namespace kirby::script {

namespace {

std::string ints(const std::vector<Integer>& v) {
  std::string out;
  for (const auto& x : v) out += " " + x.str();
  return out;
}

std::string sign_text(Sign s) { return s == Sign::Plus ? "+" : "-"; }

struct Formatter {
  std::string operator()(const LoadCp& c) const { return "load cp " + c.p.str(); }
  std::string operator()(const LoadBp& c) const { return "load bp " + c.p.str(); }
  std::string operator()(const LoadChain& c) const { return "load chain" + ints(c.weights); }
  std::string operator()(const LoadFile& c) const { return "load file \"" + c.path + "\""; }
  std::string operator()(const LoadEnp& c) const {
    return "load en_p " + c.n.str() + " " + c.p.str() + (c.conjectural ? " conjectural" : "");
  }
  std::string operator()(const Slide& c) const {
    return "slide " + c.handle + " over " + c.over + " " + sign_text(c.sign);
  }
  std::string operator()(const BlowUp& c) const { return "blowup " + sign_text(c.sign); }
  std::string operator()(const BlowDown& c) const {
    return "blowdown " + c.handle + (c.strict ? " strict" : "");
  }
  std::string operator()(const Cancel12& c) const { return "cancel12 " + c.dotted + " " + c.meridian; }
  std::string operator()(const Add3& c) const { return "add3 " + c.k.str(); }
  std::string operator()(const Add4&) const { return "add4"; }
  std::string operator()(const RationalBlowdown& c) const {
    return "rbd " + c.p.str() + (c.attachment ? " " + *c.attachment : "");
  }
  std::string operator()(const LogTransform& c) const {
    std::string out = "logt " + c.p.str();
    if (c.cusp && c.attachment) out += " " + *c.cusp + " " + *c.attachment;
    return out;
  }
  std::string operator()(const Invariants&) const { return "invariants"; }
  std::string operator()(const Counts&) const { return "counts"; }
  std::string operator()(const AssertCounts& c) const { return "assert counts" + ints(c.counts); }
  std::string operator()(const AssertChi& c) const { return "assert chi " + c.chi.str(); }
  std::string operator()(const AssertH1& c) const {
    return "assert h1 " + c.free_rank.str() + ints(c.torsion);
  }
  std::string operator()(const AssertLens& c) const {
    return "assert lens " + c.p.str() + " " + c.q.str();
  }
  std::string operator()(const AssertDet& c) const { return "assert det " + c.det.str(); }
  std::string operator()(const AssertSignature& c) const {
    return "assert signature " + c.positive.str() + " " + c.zero.str() + " " + c.negative.str();
  }
  std::string operator()(const Save& c) const { return "save \"" + c.path + "\""; }
};

}  // namespace

std::string format(const Command& c) { return std::visit(Formatter{}, c); }

std::string format(const MoveScript& s) {
  std::string out;
  for (const auto& st : s.statements) out += format(st.command) + "\n";
  return out;
}

}  // namespace kirby::script
