#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qf/algebra/group_ring.hpp"
#include "qf/extensions/abelian.hpp"
#include "qf/homology/chain.hpp"
#include "qf/invariants/colorings.hpp"

namespace qf {

/// Exponent of B(tau, C) in Z_q: phi(in, over) at a positive crossing and
/// -phi(out, over) at a negative one.
std::uint64_t weight(const Crossing& tau, const Coloring& c, const Cochain& phi);

/// Per-component sums of weights over T_1, ..., T_r.
std::vector<std::uint64_t> contribution(const LinkDiagram& d, const Coloring& c, const Cochain& phi);

enum class InvariantShape { Scalar, Vector, Family };

struct InvariantValue {
  std::uint64_t q = 1;
  /// One exponent vector per coloring, sorted.
  std::vector<std::vector<std::uint64_t>> family;
  /// Per-component group-ring sums.
  std::vector<GroupRingValue> vector;
  /// Sum over colorings of t^(total exponent).
  GroupRingValue scalar{1};

  /// Per-component multisets of exponents (vector alignment forgotten).
  std::vector<std::vector<std::uint64_t>> per_component_multisets() const;
};

/// Builds every shape at once from the colorings of d by x.
InvariantValue psi(const LinkDiagram& d, const FiniteQuandle& x, const Cochain& phi,
                   const EnumerationOptions& opts = {});

/// Same from an explicit coloring list.
InvariantValue psi_from_colorings(const LinkDiagram& d, const std::vector<Coloring>& colorings, const Cochain& phi);

struct LiftResult {
  bool lifted = false;
  /// Holonomy per component; all zero exactly when lifted.
  std::vector<std::uint64_t> obstruction;
  /// Coloring by ext.total when lifted (base arcs get fibre 0).
  Coloring lift;
};

/// Walks each component from its base arc carrying the fibre coordinate
/// through the extension's crossing rule.
LiftResult extends_coloring(const LinkDiagram& d, const Coloring& c, const AbelianExtension& ext);

/// Reference: does any of the |A|^arcs assignments lift c?
bool lift_exists_brute_force(const LinkDiagram& d, const Coloring& c, const AbelianExtension& ext);

}  // namespace qf
