#include "qf/algebra/fp_linalg.hpp"

#include <span>

#include "qf/algebra/modular.hpp"
#include "qf/error.hpp"
#include "qf/kernels.hpp"

namespace qf {

std::vector<std::size_t> row_reduce(FpMatrix& m) {
  if (!is_prime(m.p)) fail(ErrorCode::InvalidArgument, std::to_string(m.p) + " is not prime");
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
    }
    const auto inv = static_cast<std::uint32_t>(*mod_inverse(m.at(row, col), m.p));
    std::span<std::uint32_t> prow(&m.data[row * m.cols], m.cols);
    for (auto& x : prow) x = static_cast<std::uint32_t>(std::uint64_t{x} * inv % m.p);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      const std::uint32_t factor = m.p - m.at(i, col);
      kernels::axpy_mod(std::span<std::uint32_t>(&m.data[i * m.cols], m.cols), prow, factor, m.p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(FpMatrix m) { return row_reduce(m).size(); }

std::vector<std::vector<std::uint32_t>> nullspace(FpMatrix m) {
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint32_t> x(m.cols, 0);
    x[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = (m.p - m.at(r, f)) % m.p;
    basis.push_back(std::move(x));
  }
  return basis;
}

bool solvable(const FpMatrix& m, const std::vector<std::uint32_t>& b) {
  if (b.size() != m.rows) fail(ErrorCode::InvalidArgument, "right-hand side has the wrong length");
  FpMatrix aug(m.p, m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i] % m.p;
  }
  const auto pivots = row_reduce(aug);
  return pivots.empty() || pivots.back() != m.cols;
}

}  // namespace qf
