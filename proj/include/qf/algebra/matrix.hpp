#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qf/algebra/laurent.hpp"
#include "qf/algebra/ring.hpp"

namespace qf {

/// Dense row-major matrix over Z[T, T^-1] with row and column labels.
struct LaurentMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<IntLaurent> entries;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

  LaurentMatrix() = default;
  LaurentMatrix(std::size_t r, std::size_t c);

  IntLaurent& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const IntLaurent& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

  /// Removes row i and column j.
  LaurentMatrix minor(std::size_t i, std::size_t j) const;

  friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) = default;
};

/// Dense row-major matrix over a FiniteRing; entries are ring indices.
struct RingMatrix {
  FiniteRing ring;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<FiniteRing::Index> entries;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

  RingMatrix(FiniteRing r, std::size_t nr, std::size_t nc);

  FiniteRing::Index& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  FiniteRing::Index at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

/// Image of every entry in the ring.
RingMatrix specialize(const LaurentMatrix& m, const FiniteRing& ring);

/// v * M for a row vector v of length rows.
std::vector<FiniteRing::Index> left_multiply(const std::vector<FiniteRing::Index>& v, const RingMatrix& m);

/// Default cap on candidate vectors in kernel(); QF_MAX_ENUM overrides it.
std::uint64_t enumeration_cap();

/// All row vectors v with v * M = 0, sorted lexicographically by index.
/// Unit pivots are eliminated in lexicographic order first; the remaining
/// free variables are enumerated exhaustively. Throws SizeLimitExceeded when
/// |ring|^free exceeds `cap` (0 means enumeration_cap()).
std::vector<std::vector<FiniteRing::Index>> kernel(const RingMatrix& m, std::uint64_t cap = 0);

/// Exact determinant by fraction-free (Bareiss) elimination.
IntLaurent laurent_det(const LaurentMatrix& m);

/// Exact determinant by Laplace expansion; independent reference routine.
IntLaurent laurent_det_cofactor(const LaurentMatrix& m);

/// Rows and columns permuted: result row i is old row row_order[i], likewise
/// for columns. Labels follow.
LaurentMatrix reorder(const LaurentMatrix& m, const std::vector<std::size_t>& row_order,
                      const std::vector<std::size_t>& col_order);

/// For i = 0..k-1: divides column i by its (i, i) entry, which must be a unit
/// +-T^e, then clears row i from every other column with column operations.
/// Column operations leave the left kernel unchanged.
LaurentMatrix column_reduce_leading(const LaurentMatrix& m, std::size_t k);

}  // namespace qf
