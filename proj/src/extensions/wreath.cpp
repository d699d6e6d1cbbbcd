#include "qf/extensions/wreath.hpp"

#include <functional>
#include <map>

#include "qf/algebra/modular.hpp"
#include "qf/error.hpp"

namespace qf {

using Element = FiniteQuandle::Element;

namespace {

struct Monomial {
  Permutation cols;                 // row r -> column cols[r]
  std::vector<std::uint32_t> exps;  // exponent of the entry in row r
};

Monomial multiply(const Monomial& a, const Monomial& b, std::uint32_t v) {
  const std::size_t n = a.cols.size();
  Monomial r{Permutation(n), std::vector<std::uint32_t>(n)};
  for (std::size_t row = 0; row < n; ++row) {
    r.cols[row] = b.cols[a.cols[row]];
    r.exps[row] = (a.exps[row] + b.exps[a.cols[row]]) % v;
  }
  return r;
}

Monomial invert(const Monomial& a, std::uint32_t v) {
  const std::size_t n = a.cols.size();
  Monomial r{Permutation(n), std::vector<std::uint32_t>(n)};
  for (std::size_t row = 0; row < n; ++row) {
    r.cols[a.cols[row]] = static_cast<std::uint32_t>(row);
    r.exps[a.cols[row]] = (v - a.exps[row]) % v;
  }
  return r;
}

std::size_t fixed_point(const Permutation& p) {
  std::size_t f = p.size();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == i) {
      if (f != p.size()) fail(ErrorCode::InvalidArgument, "permutation has more than one fixed point");
      f = i;
    }
  }
  if (f == p.size()) fail(ErrorCode::InvalidArgument, "permutation has no fixed point");
  return f;
}

// Builds Q(v) over base permutations `sigmas` (standard composition; the
// matrix of sigma sends row r to column sigma^-1(r)).
WreathQuandle build(const FiniteQuandle& base, const std::vector<Permutation>& sigmas, std::uint32_t v,
                    const std::function<std::string(Element, const std::vector<std::uint32_t>&)>& label) {
  if (v == 0) fail(ErrorCode::InvalidArgument, "exponent modulus must be at least 1");
  const std::size_t n = sigmas.front().size();
  WreathQuandle w;
  w.base = base;
  w.n = n;
  w.v = v;
  std::map<std::pair<Permutation, std::vector<std::uint32_t>>, Element> index;
  std::map<Permutation, Element> base_of;
  std::vector<std::string> labels;
  const std::uint64_t fibre = checked_pow(v, static_cast<unsigned>(n - 1));
  if (fibre * sigmas.size() > FiniteQuandle::kMaxSize) fail(ErrorCode::SizeLimitExceeded, "wreath quandle above 4096 elements");
  for (Element b = 0; b < sigmas.size(); ++b) {
    const Permutation cols = inverse(sigmas[b]);
    base_of[cols] = b;
    const std::size_t f = fixed_point(cols);
    for (std::uint64_t k = 0; k < fibre; ++k) {
      std::vector<std::uint32_t> exps(n, 0);
      std::uint64_t rest = k;
      for (std::size_t slot = n; slot-- > 0;) {
        if (slot == f) continue;
        exps[slot] = static_cast<std::uint32_t>(rest % v);
        rest /= v;
      }
      index[{cols, exps}] = static_cast<Element>(w.columns.size());
      labels.push_back(label(b, exps));
      w.columns.push_back(cols);
      w.exponents.push_back(exps);
      w.projection.push_back(b);
    }
  }
  const std::size_t total = w.columns.size();
  std::vector<Element> op(total * total);
  for (Element a = 0; a < total; ++a) {
    const Monomial ma{w.columns[a], w.exponents[a]};
    for (Element b = 0; b < total; ++b) {
      const Monomial mb{w.columns[b], w.exponents[b]};
      const Monomial c = multiply(multiply(invert(mb, v), ma, v), mb, v);
      auto it = index.find({c.cols, c.exps});
      if (it == index.end()) fail(ErrorCode::NotClosed, "conjugate leaves Q(v)", labels[a] + "," + labels[b]);
      op[a * total + b] = it->second;
    }
  }
  w.quandle = validate_quandle(std::move(labels), std::move(op));
  make_hom(w.quandle, w.base, w.projection);
  return w;
}

std::string join(const std::vector<std::uint32_t>& v, std::size_t skip) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i == skip) continue;
    if (!s.empty()) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

Element WreathQuandle::find(Element base_element, const std::vector<std::int64_t>& exps) const {
  if (exps.size() != n) fail(ErrorCode::InvalidArgument, "exponent vector has the wrong length");
  for (Element e = 0; e < columns.size(); ++e) {
    if (projection[e] != base_element) continue;
    bool same = true;
    for (std::size_t r = 0; r < n && same; ++r) {
      if (columns[e][r] == r) continue;
      same = exponents[e][r] == mod_reduce(exps[r], v);
    }
    if (same) return e;
  }
  fail(ErrorCode::UnknownName, "no such wreath element");
}

WreathQuandle wreath_dihedral(std::size_t n, std::uint32_t v) {
  if (n % 2 == 0) fail(ErrorCode::EvenN, "R_n(v) needs odd n", std::to_string(n));
  std::vector<Permutation> sigmas;
  for (std::size_t i = 0; i < n; ++i) {
    Permutation p(n);
    for (std::size_t k = 0; k < n; ++k) p[k] = static_cast<std::uint32_t>((2 * i + n - k) % n);
    sigmas.push_back(p);
  }
  auto label = [n](Element b, const std::vector<std::uint32_t>& e) {
    if (n == 3) return std::string(1, static_cast<char>('a' + b)) + "_{" + join(e, b) + "}";
    return "s" + std::to_string(b + 1) + "(" + join(e, b) + ")";
  };
  return build(dihedral(n), sigmas, v, label);
}

WreathQuandle wreath_qs4(std::uint32_t u) {
  const auto sigmas = qs4_cycles();
  auto label = [&sigmas](Element b, const std::vector<std::uint32_t>& e) {
    std::string s = cycle_string(sigmas[b]) + "[";
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    return s + "]";
  };
  return build(conjugation_quandle(sigmas), sigmas, u, label);
}

}  // namespace qf
