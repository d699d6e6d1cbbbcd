#include "qf/kernels.hpp"

namespace qf::kernels::scalar {

void axpy_mod(std::span<std::uint32_t> row, std::span<const std::uint32_t> pivot,
              std::uint32_t factor, std::uint32_t p) {
  const std::uint64_t f = factor;
  for (std::size_t i = 0; i < row.size(); ++i) {
    row[i] = static_cast<std::uint32_t>((row[i] + f * pivot[i]) % p);
  }
}

std::size_t first_distributivity_failure(std::span<const std::uint32_t> op, std::size_t n,
                                         std::uint32_t b, std::uint32_t c) {
  const std::uint32_t bc = op[b * n + c];
  for (std::size_t a = 0; a < n; ++a) {
    const std::uint32_t lhs = op[op[a * n + b] * n + c];
    const std::uint32_t rhs = op[op[a * n + c] * n + bc];
    if (lhs != rhs) return a;
  }
  return n;
}

}  // namespace qf::kernels::scalar
