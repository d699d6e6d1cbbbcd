#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qf/algebra/ring.hpp"

namespace qf {

/// Validated finite quandle: labels plus the full * and \bar{*} tables.
/// Element e is the integer e; op(a, b) = a * b, inv(a, b) = the unique c with
/// c * b = a.
class FiniteQuandle {
 public:
  using Element = std::uint32_t;
  static constexpr std::size_t kMaxSize = 4096;

  FiniteQuandle() = default;

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element a) const { return labels_[a]; }
  /// UnknownName if absent.
  Element index_of(std::string_view label) const;

  Element op(Element a, Element b) const { return op_[a * size() + b]; }
  Element inv(Element a, Element b) const { return inv_[a * size() + b]; }
  /// Flat row-major * table.
  const std::vector<Element>& table() const { return op_; }

  friend bool operator==(const FiniteQuandle& a, const FiniteQuandle& b) {
    return a.labels_ == b.labels_ && a.op_ == b.op_;
  }

 private:
  friend FiniteQuandle validate_quandle(std::vector<std::string> labels, std::vector<Element> op);
  std::vector<std::string> labels_;
  std::vector<Element> op_;
  std::vector<Element> inv_;
};

/// Checks axioms I-III exhaustively. Throws AxiomIViolation (witness "a"),
/// AxiomIIViolation (witness "a,b" with a repeated entry in column b) or
/// AxiomIIIViolation (witness "a,b,c"); InvalidArgument for a malformed
/// table; SizeLimitExceeded above kMaxSize elements.
FiniteQuandle validate_quandle(std::vector<std::string> labels, std::vector<FiniteQuandle::Element> op);

/// R_n: i * j = 2j - i mod n.
FiniteQuandle dihedral(std::size_t n);

/// n-element quandle with a * b = a.
FiniteQuandle trivial_quandle(std::size_t n);

/// a * b = T a + (1 - T) b on the ring's elements (element i is ring index i).
FiniteQuandle alexander_quandle(const FiniteRing& ring);

/// Permutation of {0..n-1} as an image list. compose(p, q) is p after q,
/// (p q)(x) = p(q(x)); cycle products are read the same way.
using Permutation = std::vector<std::uint32_t>;

Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
/// Cycle notation with 1-based points, e.g. "(123)", "()" for the identity.
std::string cycle_string(const Permutation& p);
/// Parses cycle notation such as "(12)(34)" on n points.
Permutation parse_cycles(std::string_view text, std::size_t n);

/// a * b = b^-fold a b^fold. Throws NotClosed with the offending pair.
FiniteQuandle conjugation_quandle(const std::vector<Permutation>& perms, int fold = 1);

/// The four 3-cycles {(123), (142), (134), (243)} of S_4.
std::vector<Permutation> qs4_cycles();

struct QuandleHom {
  const FiniteQuandle* source = nullptr;
  const FiniteQuandle* target = nullptr;
  std::vector<FiniteQuandle::Element> map;
};

/// Throws NotAHomomorphism with witness "a,b" when f(a*b) != f(a)*f(b).
QuandleHom make_hom(const FiniteQuandle& source, const FiniteQuandle& target,
                    std::vector<FiniteQuandle::Element> map);

/// An isomorphism a -> b by backtracking search, or nullopt. Quandles above
/// 256 elements are rejected with SizeLimitExceeded.
std::optional<std::vector<FiniteQuandle::Element>> find_isomorphism(const FiniteQuandle& a, const FiniteQuandle& b);

}  // namespace qf
