#pragma once

#include <cstdint>
#include <optional>

namespace qf {

/// Representative of x in [0, m).
inline std::uint64_t mod_reduce(std::int64_t x, std::uint64_t m) {
  const std::int64_t mm = static_cast<std::int64_t>(m);
  std::int64_t r = x % mm;
  if (r < 0) r += mm;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Inverse of a modulo m, or nullopt when gcd(a, m) != 1.
std::optional<std::uint64_t> mod_inverse(std::uint64_t a, std::uint64_t m);

bool is_unit_mod(std::uint64_t a, std::uint64_t m);

bool is_prime(std::uint64_t n);

/// base^exp, throwing Overflow past 2^63.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace qf
