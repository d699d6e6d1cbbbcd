#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qf {

/// Dense matrix over F_p, row-major, entries reduced to [0, p).
struct FpMatrix {
  std::uint32_t p = 2;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> data;

  FpMatrix(std::uint32_t prime, std::size_t r, std::size_t c) : p(prime), rows(r), cols(c), data(r * c, 0) {}

  std::uint32_t& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Reduced row echelon form in place (deterministic: leftmost pivot column,
/// first nonzero row); returns the pivot columns.
std::vector<std::size_t> row_reduce(FpMatrix& m);

std::size_t rank(FpMatrix m);

/// Basis of {x : M x = 0}.
std::vector<std::vector<std::uint32_t>> nullspace(FpMatrix m);

/// True when M x = b has a solution.
bool solvable(const FpMatrix& m, const std::vector<std::uint32_t>& b);

}  // namespace qf
