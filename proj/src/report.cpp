#include <kirby/report.hpp>

#include <kirby/certificate.hpp>
#include <kirby/decomposition_io.hpp>

#include <algorithm>
#include <sstream>

namespace kirby {

std::optional<LensSpace> boundary_lens_space(const HandleDecomposition& x) {
  auto weights = linear_chain_weights(x);
  if (!weights) return std::nullopt;
  if (std::all_of(weights->begin(), weights->end(), [](const Integer& w) { return w >= 2; }))
    for (auto& w : *weights) w = -w;
  if (!std::all_of(weights->begin(), weights->end(), [](const Integer& w) { return w <= -2; }))
    return std::nullopt;
  return lens_space_of_chain(*weights);
}

InvariantsReport compute_invariants(const HandleDecomposition& x) {
  InvariantsReport r;
  r.counts = counts(x);
  r.chi = euler_characteristic(x);
  r.h1 = homology_h1(x);
  if (all_known(x.linking())) {
    const IntMatrix l = to_int_matrix(x.linking());
    r.det = determinant(l);
    r.inertia = signature(l);
  }
  try {
    const auto order = boundary_h1_order(x);
    r.boundary_order = order ? order->str() : "indeterminate";
  } catch (const Error& e) {
    r.boundary_order = std::string("n/a (") + error_kind_name(e.kind()) + ")";
  }
  r.boundary_lens = boundary_lens_space(x);
  return r;
}

nlohmann::ordered_json InvariantsReport::to_json() const {
  nlohmann::ordered_json out;
  out["counts"] = counts_to_json(counts);
  out["chi"] = chi;
  out["h1"] = h1.to_string();
  out["det"] = det ? integer_to_json(*det) : nlohmann::ordered_json("?");
  if (inertia)
    out["signature"] = {inertia->positive, inertia->zero, inertia->negative};
  else
    out["signature"] = "?";
  out["boundary_h1_order"] = boundary_order;
  out["boundary_lens"] = boundary_lens ? nlohmann::ordered_json(boundary_lens->to_string())
                                       : nlohmann::ordered_json(nullptr);
  return out;
}

std::string InvariantsReport::to_text() const {
  std::ostringstream out;
  out << "decomposition: " << counts.union_expression() << "\n";
  out << "counts (h0..h4): " << counts.to_string() << "\n";
  out << "euler characteristic: " << chi << "\n";
  out << "H1: " << h1.to_string() << "\n";
  out << "det: " << (det ? det->str() : "? (Unknown linking entries)") << "\n";
  out << "signature (n+, n0, n-): ";
  if (inertia)
    out << "(" << inertia->positive << ", " << inertia->zero << ", " << inertia->negative << ")";
  else
    out << "? (Unknown linking entries)";
  out << "\n";
  out << "boundary |H1|: " << boundary_order << "\n";
  out << "boundary lens space: " << (boundary_lens ? boundary_lens->to_string() : "n/a") << "\n";
  return out.str();
}

}  // namespace kirby
