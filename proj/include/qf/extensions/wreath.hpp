#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qf/quandle/quandle.hpp"

namespace qf {

/// Q(v): monomial n x n matrices over {0} u {x^j : j in Z_v} lying over a
/// conjugation-closed set Q of permutations, with the single diagonal entry
/// equal to 1. Element e is the matrix whose row r has x^{exponents[e][r]} in
/// column columns[e][r]; the operation is A * B = B^-1 A B.
struct WreathQuandle {
  FiniteQuandle quandle;
  FiniteQuandle base;
  std::size_t n = 0;
  std::uint32_t v = 1;
  std::vector<Permutation> columns;
  std::vector<std::vector<std::uint32_t>> exponents;
  std::vector<FiniteQuandle::Element> projection;

  /// Element with the given permutation (base element) and exponent vector;
  /// the entry at the fixed point is ignored. UnknownName if absent.
  FiniteQuandle::Element find(FiniteQuandle::Element base_element, const std::vector<std::int64_t>& exps) const;
};

/// R_n(v) over the reflections sigma_i (i = 0..n-1, sigma_i fixes vertex i).
/// For n = 3 elements are labelled a_{j,k}, b_{i,k}, c_{i,j}; otherwise
/// s<i>(e_1,...,e_n with the fixed slot dropped), 1-based. EvenN for even n.
WreathQuandle wreath_dihedral(std::size_t n, std::uint32_t v);

/// QS_4(u) over {(123), (142), (134), (243)}; labels "(243)[0,j,k,l]" with the
/// zero in the fixed slot.
WreathQuandle wreath_qs4(std::uint32_t u);

}  // namespace qf
