#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qf/algebra/ring.hpp"
#include "qf/homology/chain.hpp"
#include "qf/quandle/quandle.hpp"

namespace qf {

/// E(X, Z_q, phi) on pairs (a, x); the pair (a, x) is element x * q + a and is
/// labelled "(a,x)".
struct AbelianExtension {
  FiniteQuandle base;
  std::uint64_t q = 1;
  Cochain phi;
  FiniteQuandle total;
  std::vector<FiniteQuandle::Element> projection;  // total -> base
  std::vector<FiniteQuandle::Element> section;     // base -> total, x |-> (0, x)

  FiniteQuandle::Element pair(std::uint64_t a, FiniteQuandle::Element x) const {
    return static_cast<FiniteQuandle::Element>(x * q + a % q);
  }
  std::uint64_t fiber_coord(FiniteQuandle::Element e) const { return e % q; }
  FiniteQuandle::Element base_coord(FiniteQuandle::Element e) const {
    return static_cast<FiniteQuandle::Element>(e / q);
  }
};

/// (a1, x1) * (a2, x2) = (a1 + phi(x1, x2), x1 * x2). NotACocycle when phi
/// fails the 2-cocycle identity.
AbelianExtension abelian_extension(const FiniteQuandle& x, std::uint64_t q, const Cochain& phi);

enum class SectionFamily { W, U };

/// The Alexander quandle on W_m = Z_q[T]/(1-T)^m or U_m = Z_{q^m}[T]/(T-1+q).
FiniteRing family_ring(SectionFamily family, std::uint64_t q, unsigned m);

/// phi(A, B) = [s(A) * s(B) - s(A * B)] / (1-T)^m (resp. / q^m), where s lifts
/// W_m -> W_{m+1} (U_m -> U_{m+1}) by keeping the coefficients. The result is
/// a Z_q-valued 2-cochain on alexander_quandle(family_ring(family, q, m)).
Cochain cocycle_from_section(SectionFamily family, std::uint64_t q, unsigned m);

/// (a1, x1) * (a2, x2) = (a1 * a2 + phi(x1, x2), x1 * x2) with a1 * a2 the
/// Alexander operation of `a`; phi values are ring indices of `a`. Validity
/// is decided by the quandle axioms; their violation is rethrown as is.
/// Pair (a, x) is element x * |A| + a.
FiniteQuandle alexander_extension(const FiniteQuandle& x, const FiniteRing& a, const Cochain& phi);

/// First 2-cochain phi (phi(x, x) = 0, lexicographic order of value tables)
/// whose Alexander extension is a quandle isomorphic to `target`.
std::optional<Cochain> search_alexander_extension(const FiniteQuandle& x, const FiniteRing& a,
                                                  const FiniteQuandle& target);

}  // namespace qf
