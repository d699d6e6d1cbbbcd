#include "qf/alexander/alexander.hpp"

#include <algorithm>

#include "qf/algebra/modular.hpp"
#include "qf/error.hpp"
#include "qf/invariants/state_sum.hpp"
#include "qf/quandle/quandle.hpp"

namespace qf {

AlexanderMatrix alexander_matrix(const LinkDiagram& d) {
  AlexanderMatrix a{LaurentMatrix(d.arc_count(), d.crossing_count()), {}};
  for (std::size_t i = 0; i < d.arc_count(); ++i) a.matrix.row_labels[i] = d.arcs()[i];
  for (std::size_t k = 0; k < d.crossing_count(); ++k) {
    const Crossing& c = d.crossings()[k];
    a.matrix.col_labels[k] = c.id;
    const IntLaurent te = IntLaurent::monomial(1, c.sign);
    a.matrix.at(c.in, k) += te;
    a.matrix.at(c.over, k) += IntLaurent(1) - te;
    a.matrix.at(c.out, k) -= IntLaurent(1);
    a.signs.push_back(c.sign);
  }
  return a;
}

std::vector<Coloring> kernel_colorings(const LinkDiagram& d, const FiniteRing& ring, std::uint64_t cap) {
  const RingMatrix m = specialize(alexander_matrix(d).matrix, ring);
  std::vector<Coloring> out;
  for (const auto& v : kernel(m, cap)) out.emplace_back(v.begin(), v.end());
  return out;
}

std::vector<RingElement> lifted_relations(const LinkDiagram& d, const Coloring& c, SectionFamily family,
                                          std::uint64_t q, unsigned m) {
  const FiniteRing xr = family_ring(family, q, m);
  const FiniteRing er = family_ring(family, q, m + 1);
  const LaurentMatrix a = alexander_matrix(d).matrix;
  if (c.size() != d.arc_count()) fail(ErrorCode::NotAKernelVector, "coloring has the wrong length");
  for (auto e : c) {
    if (e >= xr.size()) fail(ErrorCode::NotAKernelVector, "coloring entry outside the ring");
  }
  std::vector<FiniteRing::Index> w(c.begin(), c.end());
  for (auto z : left_multiply(w, specialize(a, xr))) {
    if (z != 0) fail(ErrorCode::NotAKernelVector, "w A != 0 over the coloring ring");
  }
  // s keeps coefficient coordinates, so the lifted vector has the same indices.
  std::vector<RingElement> out;
  for (auto z : left_multiply(w, specialize(a, er))) out.push_back(er.element(z));
  return out;
}

std::vector<std::uint64_t> matrix_contribution(const LinkDiagram& d, const Coloring& c, SectionFamily family,
                                               std::uint64_t q, unsigned m) {
  const auto z = lifted_relations(d, c, family, q, m);
  std::vector<std::uint64_t> out(d.components().size(), 0);
  for (std::size_t j = 0; j < z.size(); ++j) {
    const Crossing& t = d.crossings()[j];
    const RingElement eta_z = t.sign > 0 ? z[j] : z[j].ring().t() * z[j];
    const std::uint64_t v = family == SectionFamily::W ? strip_ideal_factor(eta_z, IdealKind::OneMinusTPower, m)
                                                       : strip_ideal_factor(eta_z, IdealKind::QPower, m, q);
    auto& slot = out[d.component_of_arc(t.out)];
    slot = (slot + v) % q;
  }
  return out;
}

namespace {

// Calls f(subset) for each k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

LaurentMatrix deleted_matrix(const LinkDiagram& d, std::size_t j) {
  const LaurentMatrix a = alexander_matrix(d).matrix;
  if (a.rows != a.cols) fail(ErrorCode::InvalidArgument, "diagram has free loops; the Alexander matrix is not square");
  if (a.rows == 0) return a;
  if (j >= a.rows) fail(ErrorCode::InvalidArgument, "deleted index out of range");
  return a.minor(j, j);
}

std::uint64_t module_size(const PolyFp& f) {
  return checked_pow(f.prime(), static_cast<unsigned>(f.degree()));
}

}  // namespace

std::vector<PolyFp> elementary_divisors(const LinkDiagram& d, std::uint64_t p) {
  if (!is_prime(p)) fail(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  const LaurentMatrix m = deleted_matrix(d, 0);
  const std::size_t n = m.rows;
  // delta[i] = gcd of (n-i)-minors, delta[n] = 1.
  std::vector<PolyFp> delta(n + 1, PolyFp(p, {1}));
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = n - i;
    PolyFp g(p, {});
    for_each_subset(n, k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
        LaurentMatrix sub(k, k);
        for (std::size_t r = 0; r < k; ++r) {
          for (std::size_t c = 0; c < k; ++c) sub.at(r, c) = m.at(rows[r], cols[c]);
        }
        g = PolyFp::gcd(g, PolyFp::from_laurent(laurent_det(sub), p));
      });
    });
    delta[i] = g;
  }
  std::vector<PolyFp> e;
  for (std::size_t i = 0; i < n; ++i) {
    if (delta[i].is_zero()) {
      e.push_back(PolyFp(p, {}));
    } else {
      e.push_back(PolyFp::quotient(delta[i], delta[i + 1]).unit_normalized().monic());
    }
  }
  return e;
}

std::optional<std::uint64_t> inoue_count(const LinkDiagram& d, std::uint64_t p, const std::vector<IntLaurent>& j) {
  if (!d.is_knot()) fail(ErrorCode::NotAKnot, "the coloring-count formula is for knots");
  PolyFp g(p, {});
  for (const auto& f : j) g = PolyFp::gcd(g, PolyFp::from_laurent(f, p));
  if (g.is_zero()) return std::nullopt;  // Lambda_p / (0) is infinite
  std::uint64_t count = module_size(g);
  if (d.crossing_count() == 0) return count;
  for (const auto& e : elementary_divisors(d, p)) count = count * module_size(PolyFp::gcd(e, g));
  return count;
}

ConwayData conway_min_degree(const LinkDiagram& d, std::size_t j) {
  ConwayData out;
  out.deleted = j;
  if (d.crossing_count() == 0) {
    if (d.components().size() > 1) {
      out.f = IntLaurent();
      return out;  // split: zero determinant
    }
    out.f = IntLaurent(1);
    out.nabla = {1};
    out.min_degree = 0;
    return out;
  }
  out.f = laurent_det(deleted_matrix(d, j));
  if (out.f.is_zero()) return out;
  out.mu = out.f.max_degree();
  out.nu = out.f.min_degree();
  out.half_integer = (out.mu + out.nu) % 2 != 0;
  // Delta in s = T^{1/2}: T^d sits at s^{2d - (mu + nu)}.
  const int shift = out.mu + out.nu;
  const int top = 2 * out.mu - shift;
  std::vector<std::int64_t> delta(2 * top + 1, 0);  // exponents -top..top
  for (int dgr = out.nu; dgr <= out.mu; ++dgr) delta[2 * dgr - shift + top] = out.f.coeff(dgr);
  // z^k = (s^-1 - s)^k, expanded over exponents -k..k.
  auto z_power = [](int k) {
    std::vector<std::int64_t> c{1};
    for (int i = 0; i < k; ++i) {
      std::vector<std::int64_t> n(c.size() + 2, 0);
      for (std::size_t a = 0; a < c.size(); ++a) {
        n[a] += c[a];       // * s^-1
        n[a + 2] -= c[a];   // * -s
      }
      c = std::move(n);
    }
    return c;
  };
  out.nabla.assign(static_cast<std::size_t>(top) + 1, 0);
  for (int k = top; k >= 0; --k) {
    const std::int64_t lead = delta[k + top];
    if (lead == 0) continue;
    const std::int64_t ck = k % 2 == 0 ? lead : -lead;  // z^k has top coefficient (-1)^k
    out.nabla[k] = ck;
    const auto zk = z_power(k);
    for (int e = -k; e <= k; e += 1) delta[e + top] -= ck * zk[e + k];
  }
  if (std::any_of(delta.begin(), delta.end(), [](std::int64_t v) { return v != 0; })) {
    fail(ErrorCode::InvalidArgument, "determinant is not a polynomial in z = T^-1/2 - T^1/2");
  }
  while (!out.nabla.empty() && out.nabla.back() == 0) out.nabla.pop_back();
  // the determinant is only defined up to sign; knots have Nabla(0) = 1
  if (d.is_knot() && !out.nabla.empty() && out.nabla[0] < 0) {
    for (auto& c : out.nabla) c = -c;
  }
  for (std::size_t k = 0; k < out.nabla.size(); ++k) {
    if (out.nabla[k] != 0) {
      out.min_degree = static_cast<int>(k);
      break;
    }
  }
  return out;
}

std::optional<unsigned> smallest_nontrivial_m(const LinkDiagram& d, std::uint64_t q, unsigned max_m,
                                              SectionFamily family) {
  for (unsigned m = 1; m <= max_m; ++m) {
    const FiniteQuandle x = alexander_quandle(family_ring(family, q, m));
    const Cochain phi = cocycle_from_section(family, q, m);
    for (const auto& c : enumerate_colorings(d, x)) {
      const auto v = contribution(d, c, phi);
      if (std::any_of(v.begin(), v.end(), [](std::uint64_t e) { return e != 0; })) return m;
    }
  }
  return std::nullopt;
}

}  // namespace qf
