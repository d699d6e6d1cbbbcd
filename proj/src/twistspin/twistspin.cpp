#include "qf/twistspin/twistspin.hpp"

#include "qf/error.hpp"

namespace qf {

Coloring twist_action(const FiniteQuandle& x, const Coloring& c, FiniteQuandle::Element a) {
  Coloring out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = x.op(c[i], a);
  return out;
}

std::size_t twist_orbit_length(const FiniteQuandle& x, const Coloring& c, FiniteQuandle::Element a) {
  Coloring cur = twist_action(x, c, a);
  std::size_t len = 1;
  while (cur != c) {
    cur = twist_action(x, cur, a);
    if (++len > x.size() * x.size() + 1) fail(ErrorCode::InvalidArgument, "twist orbit did not close");
  }
  return len;
}

TwistSpinResult twist_spin_colorings(const Tangle& tangle, const FiniteQuandle& x, unsigned k,
                                     const EnumerationOptions& opts) {
  TwistSpinResult r;
  for (const auto& c : enumerate_colorings(tangle.diagram, x, opts)) {
    const auto a = c[tangle.axis_arc];
    // b (*a)^k = b on every arc; powers of a right translation act per element.
    bool fixed = true;
    for (auto b : c) {
      auto y = b;
      for (unsigned i = 0; i < k; ++i) y = x.op(y, a);
      if (y != b) {
        fixed = false;
        break;
      }
    }
    if (!fixed) continue;
    if (is_constant(c)) {
      ++r.constant;
    } else {
      r.nontrivial = true;
    }
    r.fixed.push_back(c);
  }
  return r;
}

}  // namespace qf
