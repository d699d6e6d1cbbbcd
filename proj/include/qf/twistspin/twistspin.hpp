#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qf/invariants/colorings.hpp"
#include "qf/link/diagram.hpp"
#include "qf/quandle/quandle.hpp"

namespace qf {

/// One full twist: every color b becomes b * a.
Coloring twist_action(const FiniteQuandle& x, const Coloring& c, FiniteQuandle::Element a);

/// Smallest j >= 1 with twist_action^j(c) = c.
std::size_t twist_orbit_length(const FiniteQuandle& x, const Coloring& c, FiniteQuandle::Element a);

struct TwistSpinResult {
  /// Knot colorings fixed by k twists about the axis color, sorted.
  std::vector<Coloring> fixed;
  std::size_t constant = 0;
  /// A non-constant fixed coloring exists.
  bool nontrivial = false;
};

/// k = 0 keeps every knot coloring.
TwistSpinResult twist_spin_colorings(const Tangle& tangle, const FiniteQuandle& x, unsigned k,
                                     const EnumerationOptions& opts = {});

}  // namespace qf
