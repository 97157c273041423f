#pragma once

#include <kirby/handlebody.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kirby {

struct PlumbingVertex {
  std::string label;
  Integer weight;
};

/// Weighted simple graph describing a plumbing of disk bundles over spheres.
class PlumbingGraph {
 public:
  PlumbingGraph() = default;
  /// Throws Error(Domain) on duplicate labels, loops, multi-edges or edges
  /// naming unknown vertices.
  PlumbingGraph(std::vector<PlumbingVertex> vertices,
                std::vector<std::pair<std::string, std::string>> edges);

  /// Linear chain k1 - k2 - ... with the given weights.
  static PlumbingGraph chain(const std::vector<Integer>& weights);

  const std::vector<PlumbingVertex>& vertices() const { return vertices_; }
  const std::vector<std::pair<std::string, std::string>>& edges() const { return edges_; }

 private:
  std::vector<PlumbingVertex> vertices_;
  std::vector<std::pair<std::string, std::string>> edges_;
};

PlumbingGraph disjoint_union(const PlumbingGraph& a, const PlumbingGraph& b);

/// Reads either the one-line form "chain -5 -2" or a vertex/edge list:
///
///   vertex a -5
///   vertex b -2
///   edge a b
///
/// '#' starts a comment. Throws Error(Format).
PlumbingGraph parse_plumbing(const std::string& text);

/// One unknotted 2-handle per vertex (framing = weight), linking 1 along
/// edges and 0 elsewhere.
HandleDecomposition from_plumbing(const PlumbingGraph& g);

/// Weights -(p+2), -2, ..., -2 (p-1 entries).
std::vector<Integer> c_p_weights(int p);
/// The negative-definite chain C_p, p >= 2. Its boundary is checked to be
/// L(p^2, p-1) before returning.
HandleDecomposition c_p(int p);
/// Algebraic model of the rational ball B_p: one dotted circle, one 2-handle
/// running over it p times with Unknown framing and knot type.
HandleDecomposition b_p(int p);

/// Lens space L(p, q) up to orientation-insensitive diffeomorphism. q is
/// stored as the least element of {±q, ±q^-1} mod p.
class LensSpace {
 public:
  /// Requires p >= 2, 0 < q < p, gcd(p, q) = 1.
  LensSpace(const Integer& p, const Integer& q);

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  std::string to_string() const;  // "L(9,2)"

  friend bool operator==(const LensSpace&, const LensSpace&) = default;

 private:
  Integer p_;
  Integer q_;
};

bool lens_equivalent(const LensSpace& a, const LensSpace& b);

/// Boundary of the linear plumbing with the given weights, all <= -2.
LensSpace lens_space_of_chain(const std::vector<Integer>& weights);

/// Weights in chain order when the decomposition is a linear plumbing (no
/// 1-handles, known entries, path-shaped linking graph with ±1 links).
std::optional<std::vector<Integer>> linear_chain_weights(const HandleDecomposition& x);

/// Inverse of a modulo m; requires gcd(a, m) = 1.
Integer mod_inverse(const Integer& a, const Integer& m);

}  // namespace kirby
