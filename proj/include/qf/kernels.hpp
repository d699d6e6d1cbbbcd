#pragma once

// Data-parallel inner loops with a scalar reference implementation and an
// AVX2 variant. The public entry points dispatch at runtime on CPU support;
// the per-ISA functions are exposed so tests can compare them directly.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace qf::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

/// True when the ISA was compiled in and the running CPU supports it.
bool isa_available(Isa isa);

/// ISA used by the dispatching entry points. Defaults to the best available;
/// `QF_FORCE_SCALAR=1` in the environment pins it to Scalar.
Isa active_isa();

/// Overrides the dispatch choice (tests). Requesting an unavailable ISA falls
/// back to Scalar.
void set_active_isa(Isa isa);

// row[i] <- (row[i] + factor * pivot[i]) mod p. Entries of row and pivot must
// already be reduced mod p, factor < p, p >= 2 and p < 2^31.
void axpy_mod(std::span<std::uint32_t> row, std::span<const std::uint32_t> pivot,
              std::uint32_t factor, std::uint32_t p);

// For a flat n*n operation table (entry a*n+b holds a*b), returns the first a
// with (a*b)*c != (a*c)*(b*c), or n when the identity holds for every a.
std::size_t first_distributivity_failure(std::span<const std::uint32_t> op, std::size_t n,
                                         std::uint32_t b, std::uint32_t c);

namespace scalar {
void axpy_mod(std::span<std::uint32_t> row, std::span<const std::uint32_t> pivot,
              std::uint32_t factor, std::uint32_t p);
std::size_t first_distributivity_failure(std::span<const std::uint32_t> op, std::size_t n,
                                         std::uint32_t b, std::uint32_t c);
}  // namespace scalar

namespace avx2 {
// Only callable when isa_available(Isa::Avx2). axpy_mod handles p up to 4093
// in vector lanes and defers larger moduli to the scalar kernel.
void axpy_mod(std::span<std::uint32_t> row, std::span<const std::uint32_t> pivot,
              std::uint32_t factor, std::uint32_t p);
std::size_t first_distributivity_failure(std::span<const std::uint32_t> op, std::size_t n,
                                         std::uint32_t b, std::uint32_t c);
}  // namespace avx2

}  // namespace qf::kernels
