#pragma once

// Functional graph of theta_alpha on P^1(GF(2^s)).
//
// Vertices are indexed by the element's bit pattern (0 .. 2^s - 1) with
// infinity at index 2^s, which is also the canonical vertex order.

#include <compare>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "qalpha/field.hpp"
#include "qalpha/poly.hpp"

namespace qalpha {

inline constexpr unsigned kGraphDegreeCap = 20;
/// Largest s * deg f for which has_periodic_roots realizes the roots.
inline constexpr unsigned kPeriodicRootScaleCap = 16;

struct ComponentSignature {
  std::uint64_t cycle_length = 0;
  /// Maximum distance from a vertex of the component to its cycle.
  unsigned tree_depth = 0;
  std::uint64_t vertex_count = 0;
  bool contains_infinity = false;
  /// Depth of the shallowest tree hanging off the cycle; equals tree_depth
  /// when all trees of the component have the same depth.
  unsigned min_tree_depth = 0;

  friend bool operator==(const ComponentSignature& a, const ComponentSignature& b) noexcept {
    return a.cycle_length == b.cycle_length && a.tree_depth == b.tree_depth && a.vertex_count == b.vertex_count &&
           a.contains_infinity == b.contains_infinity;
  }
  friend auto operator<=>(const ComponentSignature& a, const ComponentSignature& b) noexcept {
    return std::tie(a.cycle_length, a.tree_depth, a.vertex_count, a.contains_infinity) <=>
           std::tie(b.cycle_length, b.tree_depth, b.vertex_count, b.contains_infinity);
  }
};

class DynamicsGraph {
 public:
  using Vertex = std::uint64_t;

  const FieldSpec& spec() const noexcept { return spec_; }
  const FieldElement& alpha() const noexcept { return alpha_; }
  std::uint64_t vertex_count() const noexcept { return successor_.size(); }
  Vertex infinity() const noexcept { return successor_.size() - 1; }

  Vertex successor(Vertex v) const { return successor_.at(v); }
  ProjectivePoint successor(const ProjectivePoint& p) const { return point(successor(index(p))); }
  std::size_t component_of(Vertex v) const { return component_.at(v); }
  bool on_cycle(Vertex v) const { return distance_.at(v) == 0; }
  /// Distance from v to its component's cycle.
  unsigned distance_to_cycle(Vertex v) const { return distance_.at(v); }
  std::vector<Vertex> predecessors(Vertex v) const;

  /// Components ordered by their smallest vertex.
  const std::vector<ComponentSignature>& components() const noexcept { return components_; }
  /// The signatures as a sorted multiset.
  std::vector<ComponentSignature> signature_multiset() const;

  ProjectivePoint point(Vertex v) const;
  Vertex index(const ProjectivePoint& p) const;
  /// "zero", "inf", the dlog exponent of the field generator, or hex when
  /// the field has no generator.
  std::string label(Vertex v) const;

 private:
  friend DynamicsGraph build_graph(const FieldSpec& spec, const FieldElement& alpha);
  DynamicsGraph(FieldSpec spec, FieldElement alpha) : spec_(std::move(spec)), alpha_(std::move(alpha)) {}

  FieldSpec spec_;
  FieldElement alpha_;
  std::vector<Vertex> successor_;
  std::vector<std::uint32_t> component_;
  std::vector<unsigned> distance_;
  std::vector<ComponentSignature> components_;
};

DynamicsGraph build_graph(const FieldSpec& spec, const FieldElement& alpha);

bool is_periodic(const ProjectivePoint& p, const DynamicsGraph& g);

/// Whether the roots of the irreducible f (all or none, by Frobenius) are
/// theta_alpha-periodic, decided inside an explicit GF(2^(s*deg f)).
bool has_periodic_roots(const Polynomial& f, const FieldElement& alpha);

/// Deterministic DOT digraph; edges sorted by source label order.
std::string export_dot(const DynamicsGraph& g);

/// {"s", "alpha", "components": [{"cycle","depth","vertices","infinity"}]}
/// with components sorted by (cycle, depth, vertices) descending.
std::string export_json(const DynamicsGraph& g, int indent = 2);

/// Structural checks on one graph: vertex census, equal tree depths per
/// component, the depth dichotomy for components without infinity and the
/// binary-tree fiber shape. Returns human-readable violations (empty = ok).
std::vector<std::string> check_structure(const DynamicsGraph& g);

/// Counts vertices p of `base` (theta_1) for which
/// psi_gamma(theta_1(p)) != theta_alpha(psi_gamma(p)) in `target`,
/// gamma = sqrt(alpha).
std::uint64_t conjugation_mismatches(const DynamicsGraph& base, const DynamicsGraph& target);

}  // namespace qalpha
