#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "qf/homology/cohomology.hpp"
#include "qf/quandle/quandle.hpp"

namespace qf {

/// alpha_{sigma,tau}(a, b) for sigma, tau in X and a, b in S = {0..|S|-1},
/// stored as a dense table.
class DynamicalCocycle {
 public:
  DynamicalCocycle(std::size_t base_size, std::size_t fiber_size);

  static DynamicalCocycle from_function(
      std::size_t base_size, std::size_t fiber_size,
      const std::function<std::uint32_t(FiniteQuandle::Element, FiniteQuandle::Element, std::uint32_t, std::uint32_t)>& f);

  std::size_t base_size() const { return nx_; }
  std::size_t fiber_size() const { return ns_; }
  std::uint32_t operator()(FiniteQuandle::Element s, FiniteQuandle::Element t, std::uint32_t a, std::uint32_t b) const {
    return table_[((s * nx_ + t) * ns_ + a) * ns_ + b];
  }
  void set(FiniteQuandle::Element s, FiniteQuandle::Element t, std::uint32_t a, std::uint32_t b, std::uint32_t v);

  friend bool operator==(const DynamicalCocycle&, const DynamicalCocycle&) = default;

 private:
  std::size_t nx_, ns_;
  std::vector<std::uint32_t> table_;
};

/// The three conditions: alpha_{s,s}(a,a) = a; alpha_{s,t}(-, b) bijective;
/// alpha_{s*t,u}(alpha_{s,t}(a,b), c) = alpha_{s*u,t*u}(alpha_{s,u}(a,c), alpha_{t,u}(b,c)).
/// The witness is prefixed with the failing condition ("1:", "2:", "3:").
CheckResult validate_dynamical_cocycle(const FiniteQuandle& x, const DynamicalCocycle& alpha);

/// S x_alpha X with (a, s) * (b, t) = (alpha_{s,t}(a, b), s * t). Element
/// (a, s) is s * |S| + a. InvalidDynamicalCocycle when validation fails.
FiniteQuandle dynamical_extension(const FiniteQuandle& x, const DynamicalCocycle& alpha);

/// The cocycle of a quandle fibred over X: `projection` must be a surjective
/// homomorphism with equal fibres. Fibre elements are numbered in increasing
/// element order.
DynamicalCocycle cocycle_from_fibration(const FiniteQuandle& total, const FiniteQuandle& base,
                                        const std::vector<FiniteQuandle::Element>& projection);

}  // namespace qf
