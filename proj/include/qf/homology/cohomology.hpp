#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "qf/homology/chain.hpp"

namespace qf {

/// Outcome of a pointwise identity check; `witness` names the first failing
/// tuple ("x,y,z").
struct CheckResult {
  bool ok = true;
  std::string witness;
  explicit operator bool() const { return ok; }
};

/// phi(x,z) + phi(x*z, y*z) = phi(x*y, z) + phi(x,y) and phi(x,x) = 0.
CheckResult is_2cocycle(const Cochain& phi, const FiniteQuandle& x);
/// The 3-cocycle identity together with theta(p,p,q) = theta(p,q,q) = 0.
CheckResult is_3cocycle(const Cochain& theta, const FiniteQuandle& x);

/// Rack: all tuples. Degenerate: cochains on C^D. Quandle: cochains
/// vanishing on degenerate tuples.
enum class Theory { Rack, Degenerate, Quandle };

/// dim_{F_p} H^n(X; Z_p). SizeLimitExceeded when a coboundary matrix would
/// exceed `max_entries` (0 = default 5e7).
std::size_t cohomology_dimension(std::size_t n, const FiniteQuandle& x, std::uint32_t p,
                                 Theory theory = Theory::Quandle, std::size_t max_entries = 0);

/// A quandle n-cocycle over F_p that is not a coboundary, or nullopt when
/// H^n_Q vanishes.
std::optional<Cochain> cohomology_generator(std::size_t n, const FiniteQuandle& x, std::uint32_t p,
                                            std::size_t max_entries = 0);

/// Whether c = delta f for some quandle (n-1)-cochain f. Prime moduli use
/// linear algebra; composite moduli search all f (SizeLimitExceeded beyond
/// the enumeration cap).
bool is_coboundary(const Cochain& c, const FiniteQuandle& x);

}  // namespace qf
