#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qf/algebra/laurent.hpp"

namespace qf {

/// Coordinates used for ring elements: powers of T, or powers of (1 - T)
/// (the natural basis for Z_q[T, T^-1]/(1 - T)^m).
enum class RingBasis { PowersOfT, PowersOfOneMinusT };

class RingElement;

/// The finite ring Z_q[T, T^-1]/(h(T)). Because the extreme coefficients of h
/// are units this is Z_q[X]/(g(X)) for a monic g of degree d = deg h, where X
/// is the basis variable; elements are coefficient vectors of length d,
/// encoded as the mixed-radix index sum_j c_j q^j.
///
/// FiniteRing is a cheap, immutable handle; copies share state.
class FiniteRing {
 public:
  using Index = std::uint32_t;

  /// Rings above this many elements are rejected.
  static constexpr std::uint64_t kMaxElements = std::uint64_t{1} << 24;

  /// Basis is PowersOfOneMinusT exactly when h is a unit multiple of a power
  /// of (1 - T) mod q.
  static FiniteRing make(std::uint64_t q, const IntLaurent& h);
  static FiniteRing make(std::uint64_t q, const IntLaurent& h, RingBasis basis);

  /// W_m = Z_q[T, T^-1]/(1 - T)^m.
  static FiniteRing w(std::uint64_t q, unsigned m);
  /// U_m = Z_{q^m}[T, T^-1]/(T - 1 + q).
  static FiniteRing u(std::uint64_t q, unsigned m);

  std::uint64_t modulus() const;
  std::size_t degree() const;
  std::size_t size() const;
  RingBasis basis() const;
  /// h normalized to an ordinary monic polynomial in T (coefficients in [0, q)).
  const IntLaurent& relation() const;

  Index add(Index a, Index b) const;
  Index sub(Index a, Index b) const;
  Index neg(Index a) const;
  Index mul(Index a, Index b) const;
  Index scale(Index a, std::uint64_t c) const;

  std::vector<std::uint64_t> coeffs(Index a) const;
  Index from_coeffs(const std::vector<std::uint64_t>& c) const;

  RingElement element(Index i) const;
  RingElement zero() const;
  RingElement one() const;
  RingElement t() const;
  RingElement t_inverse() const;
  RingElement from_coefficients(const std::vector<std::uint64_t>& c) const;

  /// Image of an integer Laurent polynomial under Z[T, T^-1] -> this ring.
  RingElement eval(const IntLaurent& f) const;

  /// Canonical compact label: "2+T^2" or "1+2(1-T)+(1-T)^2"; "0" for zero.
  std::string label(Index a) const;

  friend bool operator==(const FiniteRing& a, const FiniteRing& b);

 private:
  struct Data;
  explicit FiniteRing(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

class RingElement {
 public:
  RingElement(FiniteRing ring, FiniteRing::Index index) : ring_(std::move(ring)), index_(index) {}

  const FiniteRing& ring() const { return ring_; }
  FiniteRing::Index index() const { return index_; }
  std::vector<std::uint64_t> coeffs() const { return ring_.coeffs(index_); }
  bool is_zero() const { return index_ == 0; }
  std::string to_string() const { return ring_.label(index_); }

  RingElement operator-() const;
  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.index_ == b.index_ && a.ring_ == b.ring_;
  }

 private:
  FiniteRing ring_;
  FiniteRing::Index index_;
};

/// Inverse of T, always present since the constant term of h is a unit.
RingElement invert_t(const FiniteRing& ring);

enum class IdealKind {
  OneMinusTPower,  // (1 - T)^m in a ring with the (1 - T) basis
  QPower,          // q^m in Z_{q^{m+1}}
};

/// The unique c in Z_q with e = c (1 - T)^m (resp. c q^m). For QPower, q is the
/// base prime-power step and the ring must be Z_{q^{m+1}}; for OneMinusTPower q
/// is ignored. Throws NotInIdeal when e is not such a multiple.
std::uint64_t strip_ideal_factor(const RingElement& e, IdealKind kind, unsigned m, std::uint64_t q = 0);

}  // namespace qf
