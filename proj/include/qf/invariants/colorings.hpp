#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qf/link/diagram.hpp"
#include "qf/quandle/quandle.hpp"

namespace qf {

/// Arc index -> quandle element.
using Coloring = std::vector<FiniteQuandle::Element>;

/// out = in * over at positive crossings, in = out * over at negative ones.
bool is_coloring(const LinkDiagram& d, const FiniteQuandle& x, const Coloring& c);

struct EnumerationOptions {
  /// 0 = std::thread::hardware_concurrency().
  unsigned threads = 1;
  /// Search nodes before SizeLimitExceeded; 0 = 100 x enumeration_cap().
  std::uint64_t node_cap = 0;
};

/// Every coloring of d by x, sorted lexicographically. Backtracks over arcs
/// in canonical order, propagating forced colors through * and \bar{*}.
std::vector<Coloring> enumerate_colorings(const LinkDiagram& d, const FiniteQuandle& x,
                                          const EnumerationOptions& opts = {});

/// Reference enumerator: tries all |X|^arcs assignments.
std::vector<Coloring> brute_force_colorings(const LinkDiagram& d, const FiniteQuandle& x);

bool is_constant(const Coloring& c);

}  // namespace qf
