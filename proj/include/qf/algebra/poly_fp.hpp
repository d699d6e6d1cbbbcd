#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qf/algebra/laurent.hpp"

namespace qf {

/// Polynomial over F_p with ascending coefficients, trimmed (no trailing
/// zeros). Used for gcds in Lambda_p = F_p[T, T^-1], where everything is first
/// normalized by powers of T.
class PolyFp {
 public:
  PolyFp(std::uint64_t p, std::vector<std::uint64_t> coeffs);

  /// Reduces an integer Laurent polynomial mod p and clears the T-power unit,
  /// leaving a polynomial with nonzero constant term (or zero).
  static PolyFp from_laurent(const IntLaurent& f, std::uint64_t p);

  std::uint64_t prime() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }

  PolyFp monic() const;
  /// Divides out the largest power of T (a unit in Lambda_p).
  PolyFp unit_normalized() const;

  friend PolyFp operator*(const PolyFp& a, const PolyFp& b);
  friend bool operator==(const PolyFp& a, const PolyFp& b) = default;

  static PolyFp remainder(const PolyFp& a, const PolyFp& b);
  static PolyFp quotient(const PolyFp& a, const PolyFp& b);
  /// Monic gcd, unit-normalized; gcd(0, 0) = 0.
  static PolyFp gcd(const PolyFp& a, const PolyFp& b);

  std::string to_string() const;

 private:
  void trim();
  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

}  // namespace qf
