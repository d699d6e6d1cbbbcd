#include "qf/invariants/state_sum.hpp"

#include <algorithm>

#include "qf/algebra/modular.hpp"
#include "qf/error.hpp"

namespace qf {

std::uint64_t weight(const Crossing& tau, const Coloring& c, const Cochain& phi) {
  const std::uint64_t q = phi.modulus();
  if (tau.sign > 0) return phi({c[tau.in], c[tau.over]});
  return (q - phi({c[tau.out], c[tau.over]})) % q;
}

std::vector<std::uint64_t> contribution(const LinkDiagram& d, const Coloring& c, const Cochain& phi) {
  std::vector<std::uint64_t> v(d.components().size(), 0);
  for (const auto& t : d.crossings()) {
    auto& slot = v[d.component_of_arc(t.out)];
    slot = (slot + weight(t, c, phi)) % phi.modulus();
  }
  return v;
}

std::vector<std::vector<std::uint64_t>> InvariantValue::per_component_multisets() const {
  std::vector<std::vector<std::uint64_t>> out(vector.size());
  for (const auto& f : family) {
    for (std::size_t i = 0; i < f.size(); ++i) out[i].push_back(f[i]);
  }
  for (auto& o : out) std::sort(o.begin(), o.end());
  return out;
}

InvariantValue psi_from_colorings(const LinkDiagram& d, const std::vector<Coloring>& colorings, const Cochain& phi) {
  const std::uint64_t q = phi.modulus();
  InvariantValue v;
  v.q = q;
  v.vector.assign(d.components().size(), GroupRingValue(q));
  v.scalar = GroupRingValue(q);
  for (const auto& c : colorings) {
    auto e = contribution(d, c, phi);
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      v.vector[i].add_term(static_cast<std::int64_t>(e[i]));
      total = (total + e[i]) % q;
    }
    v.scalar.add_term(static_cast<std::int64_t>(total));
    v.family.push_back(std::move(e));
  }
  std::sort(v.family.begin(), v.family.end());
  return v;
}

InvariantValue psi(const LinkDiagram& d, const FiniteQuandle& x, const Cochain& phi, const EnumerationOptions& opts) {
  if (phi.degree() != 2 || phi.base_size() != x.size()) fail(ErrorCode::InvalidArgument, "phi must be a 2-cochain on X");
  return psi_from_colorings(d, enumerate_colorings(d, x, opts), phi);
}

LiftResult extends_coloring(const LinkDiagram& d, const Coloring& c, const AbelianExtension& ext) {
  const std::uint64_t q = ext.q;
  LiftResult r;
  r.obstruction.assign(d.components().size(), 0);
  std::vector<std::uint64_t> fibre(d.arc_count(), 0);
  for (std::size_t k = 0; k < d.components().size(); ++k) {
    const auto& arcs = d.components()[k].arcs;
    std::uint64_t a = 0;
    // Arc arcs[i] ends at the crossing whose outgoing arc is arcs[i+1].
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      fibre[arcs[i]] = a;
      const std::size_t next = arcs[(i + 1) % arcs.size()];
      const std::size_t x = d.crossing_out_of(next);
      if (x == LinkDiagram::npos) continue;
      const Crossing& t = d.crossings()[x];
      // a_out = a_in + phi(in, over) (positive) or a_in - phi(out, over) (negative).
      a = (a + weight(t, c, ext.phi)) % q;
    }
    r.obstruction[k] = a;  // coordinate carried back onto the base arc
  }
  r.lifted = std::all_of(r.obstruction.begin(), r.obstruction.end(), [](std::uint64_t v) { return v == 0; });
  if (r.lifted) {
    for (std::size_t i = 0; i < d.arc_count(); ++i) r.lift.push_back(ext.pair(fibre[i], c[i]));
  }
  return r;
}

bool lift_exists_brute_force(const LinkDiagram& d, const Coloring& c, const AbelianExtension& ext) {
  const std::size_t n = d.arc_count();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= ext.q;
    if (total > (std::uint64_t{1} << 26)) fail(ErrorCode::SizeLimitExceeded, "lift search space too large");
  }
  std::vector<std::uint64_t> a(n, 0);
  Coloring lift(n);
  for (std::uint64_t k = 0; k < total; ++k) {
    for (std::size_t i = 0; i < n; ++i) lift[i] = ext.pair(a[i], c[i]);
    if (is_coloring(d, ext.total, lift)) return true;
    for (std::size_t i = n; i-- > 0;) {
      if (++a[i] < ext.q) break;
      a[i] = 0;
    }
  }
  return false;
}

}  // namespace qf
