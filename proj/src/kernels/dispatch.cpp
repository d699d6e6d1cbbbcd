#include <atomic>
#include <cstdlib>
#include <cstring>

#include "qf/kernels.hpp"

namespace qf::kernels {

#ifndef QF_BUILD_AVX2
namespace avx2 {
void axpy_mod(std::span<std::uint32_t> row, std::span<const std::uint32_t> pivot,
              std::uint32_t factor, std::uint32_t p) {
  scalar::axpy_mod(row, pivot, factor, p);
}
std::size_t first_distributivity_failure(std::span<const std::uint32_t> op, std::size_t n,
                                         std::uint32_t b, std::uint32_t c) {
  return scalar::first_distributivity_failure(op, n, b, c);
}
}  // namespace avx2
#endif

namespace {

Isa detect() {
  const char* force = std::getenv("QF_FORCE_SCALAR");
  if (force != nullptr && std::strcmp(force, "0") != 0 && *force != '\0') return Isa::Scalar;
  return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

std::string_view to_string(Isa isa) {
  return isa == Isa::Avx2 ? "avx2" : "scalar";
}

bool isa_available(Isa isa) {
  if (isa == Isa::Scalar) return true;
#if defined(QF_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  current().store(isa_available(isa) ? isa : Isa::Scalar, std::memory_order_relaxed);
}

void axpy_mod(std::span<std::uint32_t> row, std::span<const std::uint32_t> pivot,
              std::uint32_t factor, std::uint32_t p) {
  if (active_isa() == Isa::Avx2) {
    avx2::axpy_mod(row, pivot, factor, p);
  } else {
    scalar::axpy_mod(row, pivot, factor, p);
  }
}

std::size_t first_distributivity_failure(std::span<const std::uint32_t> op, std::size_t n,
                                         std::uint32_t b, std::uint32_t c) {
  if (active_isa() == Isa::Avx2) return avx2::first_distributivity_failure(op, n, b, c);
  return scalar::first_distributivity_failure(op, n, b, c);
}

}  // namespace qf::kernels
