#pragma once

#include <kirby/handlebody.hpp>
#include <kirby/plumbing.hpp>

#include <json.hpp>

#include <optional>
#include <string>

namespace kirby {

/// Boundary lens space of a linear plumbing whose weights are all <= -2 (or
/// all >= 2; orientation is not tracked).
std::optional<LensSpace> boundary_lens_space(const HandleDecomposition& x);

struct InvariantsReport {
  HandleCounts counts;
  long long chi = 0;
  AbelianGroup h1;
  std::optional<Integer> det;       // absent when the linking matrix has Unknown entries
  std::optional<Inertia> inertia;   // likewise
  std::string boundary_order;       // "9", "indeterminate" or "n/a (...)"
  std::optional<LensSpace> boundary_lens;

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

InvariantsReport compute_invariants(const HandleDecomposition& x);

}  // namespace kirby
