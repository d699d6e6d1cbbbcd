#include "qf/extensions/abelian.hpp"

#include "qf/algebra/matrix.hpp"
#include "qf/error.hpp"
#include "qf/homology/cohomology.hpp"

namespace qf {

using Element = FiniteQuandle::Element;

AbelianExtension abelian_extension(const FiniteQuandle& x, std::uint64_t q, const Cochain& phi) {
  if (phi.modulus() != q) fail(ErrorCode::InvalidArgument, "cocycle modulus does not match q");
  if (const auto check = is_2cocycle(phi, x); !check) {
    fail(ErrorCode::NotACocycle, "phi is not a quandle 2-cocycle", check.witness);
  }
  const std::size_t n = x.size();
  const std::size_t total = n * q;
  if (total > FiniteQuandle::kMaxSize) fail(ErrorCode::SizeLimitExceeded, "extension above 4096 elements");
  AbelianExtension ext{x, q, phi, {}, {}, {}};
  std::vector<std::string> labels(total);
  std::vector<Element> op(total * total);
  for (Element e = 0; e < total; ++e) {
    labels[e] = "(" + std::to_string(ext.fiber_coord(e)) + "," + x.label(ext.base_coord(e)) + ")";
  }
  for (Element e1 = 0; e1 < total; ++e1) {
    const Element x1 = ext.base_coord(e1);
    for (Element e2 = 0; e2 < total; ++e2) {
      const Element x2 = ext.base_coord(e2);
      op[e1 * total + e2] = ext.pair(ext.fiber_coord(e1) + phi({x1, x2}), x.op(x1, x2));
    }
  }
  ext.total = validate_quandle(std::move(labels), std::move(op));
  for (Element e = 0; e < total; ++e) ext.projection.push_back(ext.base_coord(e));
  for (Element b = 0; b < n; ++b) ext.section.push_back(ext.pair(0, b));
  return ext;
}

FiniteRing family_ring(SectionFamily family, std::uint64_t q, unsigned m) {
  return family == SectionFamily::W ? FiniteRing::w(q, m) : FiniteRing::u(q, m);
}

Cochain cocycle_from_section(SectionFamily family, std::uint64_t q, unsigned m) {
  if (m == 0) fail(ErrorCode::InvalidArgument, "section cocycles need m >= 1");
  const FiniteRing xr = family_ring(family, q, m);
  const FiniteRing er = family_ring(family, q, m + 1);
  const auto tx = xr.t().index(), ux = (xr.one() - xr.t()).index();
  const auto te = er.t().index(), ue = (er.one() - er.t()).index();
  // With coefficient coordinates the section keeps the index: the lift of
  // sum_{j<m} c_j X^j is the same sum in the bigger ring.
  Cochain phi(2, q, xr.size());
  for (FiniteRing::Index a = 0; a < xr.size(); ++a) {
    for (FiniteRing::Index b = 0; b < xr.size(); ++b) {
      const auto lifted = er.add(er.mul(te, a), er.mul(ue, b));
      const auto below = xr.add(xr.mul(tx, a), xr.mul(ux, b));
      const RingElement diff = er.element(er.sub(lifted, below));
      const std::uint64_t v = family == SectionFamily::W ? strip_ideal_factor(diff, IdealKind::OneMinusTPower, m)
                                                         : strip_ideal_factor(diff, IdealKind::QPower, m, q);
      phi.set({a, b}, static_cast<std::int64_t>(v));
    }
  }
  return phi;
}

FiniteQuandle alexander_extension(const FiniteQuandle& x, const FiniteRing& a, const Cochain& phi) {
  if (phi.degree() != 2 || phi.base_size() != x.size() || phi.modulus() != a.size()) {
    fail(ErrorCode::InvalidArgument, "phi must be a 2-cochain on X with values in A");
  }
  const std::size_t na = a.size(), total = na * x.size();
  if (total > FiniteQuandle::kMaxSize) fail(ErrorCode::SizeLimitExceeded, "extension above 4096 elements");
  const auto t = a.t().index(), u = (a.one() - a.t()).index();
  std::vector<std::string> labels(total);
  std::vector<Element> op(total * total);
  for (Element e = 0; e < total; ++e) labels[e] = "(" + a.label(e % na) + "," + x.label(e / na) + ")";
  for (Element e1 = 0; e1 < total; ++e1) {
    for (Element e2 = 0; e2 < total; ++e2) {
      const Element x1 = e1 / na, x2 = e2 / na;
      const auto a1 = e1 % na, a2 = e2 % na;
      const auto f = static_cast<FiniteRing::Index>(phi({x1, x2}));
      const auto value = a.add(a.add(a.mul(t, a1), a.mul(u, a2)), f);
      op[e1 * total + e2] = static_cast<Element>(x.op(x1, x2) * na + value);
    }
  }
  return validate_quandle(std::move(labels), std::move(op));
}

std::optional<Cochain> search_alexander_extension(const FiniteQuandle& x, const FiniteRing& a,
                                                  const FiniteQuandle& target) {
  if (target.size() != x.size() * a.size()) return std::nullopt;
  std::vector<std::size_t> slots;
  Cochain phi(2, a.size(), x.size());
  for (std::size_t k = 0; k < phi.tuple_count(); ++k) {
    const Tuple t = phi.tuple(k);
    if (t[0] != t[1]) slots.push_back(k);
  }
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    total *= a.size();
    if (total > enumeration_cap()) fail(ErrorCode::SizeLimitExceeded, "too many candidate cochains");
  }
  std::vector<std::uint64_t> digits(slots.size(), 0);
  for (std::uint64_t it = 0; it < total; ++it) {
    for (std::size_t k = 0; k < slots.size(); ++k) phi.set_flat(slots[k], static_cast<std::int64_t>(digits[k]));
    try {
      const FiniteQuandle e = alexander_extension(x, a, phi);
      if (find_isomorphism(e, target)) return phi;
    } catch (const Error& err) {
      const auto c = err.code();
      if (c != ErrorCode::AxiomIViolation && c != ErrorCode::AxiomIIViolation && c != ErrorCode::AxiomIIIViolation) throw;
    }
    for (std::size_t k = slots.size(); k-- > 0;) {
      if (++digits[k] < a.size()) break;
      digits[k] = 0;
    }
  }
  return std::nullopt;
}

}  // namespace qf
