#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qf/algebra/laurent.hpp"
#include "qf/algebra/matrix.hpp"
#include "qf/algebra/poly_fp.hpp"
#include "qf/algebra/ring.hpp"
#include "qf/extensions/abelian.hpp"
#include "qf/invariants/colorings.hpp"

namespace qf {

/// Rows are arcs, columns crossings. Column i carries T^e in the incoming
/// under-arc row, 1 - T^e in the over-arc row and -1 in row i, summed where
/// rows coincide; e is the crossing sign.
struct AlexanderMatrix {
  LaurentMatrix matrix;
  std::vector<int> signs;
};

AlexanderMatrix alexander_matrix(const LinkDiagram& d);

/// Left kernel of the matrix specialized to `ring`, as colorings of
/// alexander_quandle(ring).
std::vector<Coloring> kernel_colorings(const LinkDiagram& d, const FiniteRing& ring, std::uint64_t cap = 0);

/// Contribution of a coloring by W_m (U_m) computed from the matrix over
/// W_{m+1} (U_{m+1}): z = s(w) A, then per component the sum of
/// (eta_j z_j) / (1-T)^m (resp. / q^m) with eta = 1 at positive and T at
/// negative crossings. NotAKernelVector when c is not a coloring.
std::vector<std::uint64_t> matrix_contribution(const LinkDiagram& d, const Coloring& c, SectionFamily family,
                                               std::uint64_t q, unsigned m);

/// The raw vector z = s(w) A^(E) as ring elements of the (m+1) ring.
std::vector<RingElement> lifted_relations(const LinkDiagram& d, const Coloring& c, SectionFamily family,
                                          std::uint64_t q, unsigned m);

/// Size of Lambda_p/J + sum_i Lambda_p/(e_i, J), the predicted number of
/// colorings by the Alexander quandle Lambda_p/J, using the deleted
/// (n-1) x (n-1) matrix as presentation matrix. nullopt when the module is
/// infinite. NotAKnot for links.
std::optional<std::uint64_t> inoue_count(const LinkDiagram& d, std::uint64_t p, const std::vector<IntLaurent>& j);

/// Elementary divisors e_0, ..., e_{N-1} of the deleted matrix over F_p
/// (unit-normalized, e_i = 0 when the minor gcd vanishes).
std::vector<PolyFp> elementary_divisors(const LinkDiagram& d, std::uint64_t p);

struct ConwayData {
  std::size_t deleted = 0;
  IntLaurent f;
  int mu = 0;
  int nu = 0;
  /// True when mu + nu is odd and Delta needs half-integer powers of T.
  bool half_integer = false;
  /// Coefficients of Nabla in z^0, z^1, ... (empty for a zero determinant).
  std::vector<std::int64_t> nabla;
  /// nullopt stands for +infinity (zero determinant).
  std::optional<int> min_degree;
};

/// Deletes row and column j of the Alexander matrix, takes f = det and
/// rewrites T^{-(mu+nu)/2} f in powers of z = T^{-1/2} - T^{1/2}.
/// An empty (crossing-free) diagram gives Nabla = 1. The sign of f is
/// whatever the determinant gives; for knots Nabla is flipped to Nabla(0) = 1.
ConwayData conway_min_degree(const LinkDiagram& d, std::size_t j = 0);

/// Smallest m in [1, max_m] for which some coloring by W_m (q) has a nonzero
/// section-cocycle contribution; nullopt if none.
std::optional<unsigned> smallest_nontrivial_m(const LinkDiagram& d, std::uint64_t q, unsigned max_m,
                                              SectionFamily family = SectionFamily::W);

}  // namespace qf
