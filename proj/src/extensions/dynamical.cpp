#include "qf/extensions/dynamical.hpp"

#include <map>

#include "qf/error.hpp"

namespace qf {

using Element = FiniteQuandle::Element;

DynamicalCocycle::DynamicalCocycle(std::size_t base_size, std::size_t fiber_size)
    : nx_(base_size), ns_(fiber_size), table_(base_size * base_size * fiber_size * fiber_size, 0) {
  if (fiber_size == 0) fail(ErrorCode::InvalidArgument, "empty fibre");
}

DynamicalCocycle DynamicalCocycle::from_function(
    std::size_t base_size, std::size_t fiber_size,
    const std::function<std::uint32_t(Element, Element, std::uint32_t, std::uint32_t)>& f) {
  DynamicalCocycle c(base_size, fiber_size);
  for (Element s = 0; s < base_size; ++s) {
    for (Element t = 0; t < base_size; ++t) {
      for (std::uint32_t a = 0; a < fiber_size; ++a) {
        for (std::uint32_t b = 0; b < fiber_size; ++b) c.set(s, t, a, b, f(s, t, a, b));
      }
    }
  }
  return c;
}

void DynamicalCocycle::set(Element s, Element t, std::uint32_t a, std::uint32_t b, std::uint32_t v) {
  if (v >= ns_) fail(ErrorCode::InvalidArgument, "cocycle value outside the fibre");
  table_[((s * nx_ + t) * ns_ + a) * ns_ + b] = v;
}

CheckResult validate_dynamical_cocycle(const FiniteQuandle& x, const DynamicalCocycle& alpha) {
  if (alpha.base_size() != x.size()) fail(ErrorCode::InvalidArgument, "cocycle is over a different quandle");
  const std::size_t ns = alpha.fiber_size();
  const auto n = static_cast<Element>(x.size());
  auto name = [&](Element s, std::uint32_t a) { return "(" + std::to_string(a) + "," + x.label(s) + ")"; };
  for (Element s = 0; s < n; ++s) {
    for (std::uint32_t a = 0; a < ns; ++a) {
      if (alpha(s, s, a, a) != a) return {false, "1:" + name(s, a)};
    }
  }
  std::vector<bool> hit(ns);
  for (Element s = 0; s < n; ++s) {
    for (Element t = 0; t < n; ++t) {
      for (std::uint32_t b = 0; b < ns; ++b) {
        std::fill(hit.begin(), hit.end(), false);
        for (std::uint32_t a = 0; a < ns; ++a) {
          const auto v = alpha(s, t, a, b);
          if (hit[v]) return {false, "2:" + x.label(s) + "," + x.label(t) + "," + std::to_string(b)};
          hit[v] = true;
        }
      }
    }
  }
  for (Element s = 0; s < n; ++s) {
    for (Element t = 0; t < n; ++t) {
      for (Element u = 0; u < n; ++u) {
        for (std::uint32_t a = 0; a < ns; ++a) {
          for (std::uint32_t b = 0; b < ns; ++b) {
            for (std::uint32_t c = 0; c < ns; ++c) {
              const auto lhs = alpha(x.op(s, t), u, alpha(s, t, a, b), c);
              const auto rhs = alpha(x.op(s, u), x.op(t, u), alpha(s, u, a, c), alpha(t, u, b, c));
              if (lhs != rhs) return {false, "3:" + name(s, a) + "," + name(t, b) + "," + name(u, c)};
            }
          }
        }
      }
    }
  }
  return {};
}

FiniteQuandle dynamical_extension(const FiniteQuandle& x, const DynamicalCocycle& alpha) {
  if (const auto check = validate_dynamical_cocycle(x, alpha); !check) {
    fail(ErrorCode::InvalidDynamicalCocycle, "alpha violates condition " + check.witness.substr(0, 1), check.witness);
  }
  const std::size_t ns = alpha.fiber_size(), total = ns * x.size();
  if (total > FiniteQuandle::kMaxSize) fail(ErrorCode::SizeLimitExceeded, "extension above 4096 elements");
  std::vector<std::string> labels(total);
  std::vector<Element> op(total * total);
  for (Element e = 0; e < total; ++e) {
    labels[e] = "(" + std::to_string(e % ns) + "," + x.label(static_cast<Element>(e / ns)) + ")";
  }
  for (Element e1 = 0; e1 < total; ++e1) {
    for (Element e2 = 0; e2 < total; ++e2) {
      const auto s = static_cast<Element>(e1 / ns), t = static_cast<Element>(e2 / ns);
      const auto a = static_cast<std::uint32_t>(e1 % ns), b = static_cast<std::uint32_t>(e2 % ns);
      op[e1 * total + e2] = static_cast<Element>(x.op(s, t) * ns + alpha(s, t, a, b));
    }
  }
  return validate_quandle(std::move(labels), std::move(op));
}

DynamicalCocycle cocycle_from_fibration(const FiniteQuandle& total, const FiniteQuandle& base,
                                        const std::vector<Element>& projection) {
  make_hom(total, base, projection);
  std::vector<std::vector<Element>> fibres(base.size());
  for (Element e = 0; e < total.size(); ++e) fibres[projection[e]].push_back(e);
  const std::size_t ns = fibres[0].size();
  for (const auto& f : fibres) {
    if (f.empty()) fail(ErrorCode::InvalidArgument, "projection is not surjective");
    if (f.size() != ns) fail(ErrorCode::InvalidArgument, "fibres have different sizes");
  }
  std::vector<std::uint32_t> position(total.size());
  for (const auto& f : fibres) {
    for (std::size_t i = 0; i < f.size(); ++i) position[f[i]] = static_cast<std::uint32_t>(i);
  }
  return DynamicalCocycle::from_function(base.size(), ns, [&](Element s, Element t, std::uint32_t a, std::uint32_t b) {
    return position[total.op(fibres[s][a], fibres[t][b])];
  });
}

}  // namespace qf
