#include <immintrin.h>

#include "qf/kernels.hpp"

namespace qf::kernels::avx2 {

namespace {
// Largest modulus for which a + f*b (all < p) stays below 2^24, so the float
// quotient estimate is off by at most one.
constexpr std::uint32_t kMaxVectorModulus = 4093;
}  // namespace

void axpy_mod(std::span<std::uint32_t> row, std::span<const std::uint32_t> pivot,
              std::uint32_t factor, std::uint32_t p) {
  if (p > kMaxVectorModulus) {
    scalar::axpy_mod(row, pivot, factor, p);
    return;
  }
  const std::size_t n = row.size();
  const __m256i vf = _mm256_set1_epi32(static_cast<int>(factor));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vpm1 = _mm256_set1_epi32(static_cast<int>(p) - 1);
  const __m256 vinv = _mm256_set1_ps(1.0f / static_cast<float>(p));
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    auto* dst = reinterpret_cast<__m256i*>(row.data() + i);
    const __m256i r = _mm256_loadu_si256(dst);
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pivot.data() + i));
    const __m256i x = _mm256_add_epi32(r, _mm256_mullo_epi32(v, vf));
    const __m256i q = _mm256_cvttps_epi32(_mm256_mul_ps(_mm256_cvtepi32_ps(x), vinv));
    __m256i rem = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, vp));
    rem = _mm256_add_epi32(rem, _mm256_and_si256(_mm256_cmpgt_epi32(zero, rem), vp));
    rem = _mm256_sub_epi32(rem, _mm256_and_si256(_mm256_cmpgt_epi32(rem, vpm1), vp));
    _mm256_storeu_si256(dst, rem);
  }
  if (i < n) scalar::axpy_mod(row.subspan(i), pivot.subspan(i), factor, p);
}

std::size_t first_distributivity_failure(std::span<const std::uint32_t> op, std::size_t n,
                                         std::uint32_t b, std::uint32_t c) {
  const int* table = reinterpret_cast<const int*>(op.data());
  const int ni = static_cast<int>(n);
  const __m256i vn = _mm256_set1_epi32(ni);
  const __m256i vb = _mm256_set1_epi32(static_cast<int>(b));
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vbc = _mm256_set1_epi32(static_cast<int>(op[b * n + c]));
  const __m256i lane = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  std::size_t a = 0;
  for (; a + 8 <= n; a += 8) {
    const __m256i va = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(a)), lane);
    const __m256i row = _mm256_mullo_epi32(va, vn);
    const __m256i ab = _mm256_i32gather_epi32(table, _mm256_add_epi32(row, vb), 4);
    const __m256i ac = _mm256_i32gather_epi32(table, _mm256_add_epi32(row, vc), 4);
    const __m256i lhs = _mm256_i32gather_epi32(table, _mm256_add_epi32(_mm256_mullo_epi32(ab, vn), vc), 4);
    const __m256i rhs = _mm256_i32gather_epi32(table, _mm256_add_epi32(_mm256_mullo_epi32(ac, vn), vbc), 4);
    const int mask = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(lhs, rhs)));
    if (mask != 0xff) return a + static_cast<std::size_t>(__builtin_ctz(~mask & 0xff));
  }
  for (; a < n; ++a) {
    if (op[op[a * n + b] * n + c] != op[op[a * n + c] * n + op[b * n + c]]) return a;
  }
  return n;
}

}  // namespace qf::kernels::avx2
