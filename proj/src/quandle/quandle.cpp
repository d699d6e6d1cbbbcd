#include "qf/quandle/quandle.hpp"

#include <algorithm>
#include <map>
#include <span>

#include "qf/error.hpp"
#include "qf/kernels.hpp"

namespace qf {

using Element = FiniteQuandle::Element;

FiniteQuandle::Element FiniteQuandle::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<Element>(i);
  }
  fail(ErrorCode::UnknownName, "no quandle element labelled " + std::string(label), std::string(label));
}

FiniteQuandle validate_quandle(std::vector<std::string> labels, std::vector<Element> op) {
  const std::size_t n = labels.size();
  if (n == 0) fail(ErrorCode::InvalidArgument, "a quandle needs at least one element");
  if (n > FiniteQuandle::kMaxSize) fail(ErrorCode::SizeLimitExceeded, "quandles above 4096 elements are not admitted");
  if (op.size() != n * n) fail(ErrorCode::InvalidArgument, "operation table is not n x n");
  {
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      fail(ErrorCode::InvalidArgument, "duplicate element labels");
    }
  }
  for (auto v : op) {
    if (v >= n) fail(ErrorCode::InvalidArgument, "operation table entry out of range");
  }
  for (Element a = 0; a < n; ++a) {
    if (op[a * n + a] != a) fail(ErrorCode::AxiomIViolation, "a*a != a for a = " + labels[a], labels[a]);
  }
  std::vector<Element> inv(n * n, 0);
  std::vector<bool> hit(n);
  for (Element b = 0; b < n; ++b) {
    std::fill(hit.begin(), hit.end(), false);
    for (Element a = 0; a < n; ++a) {
      const Element c = op[a * n + b];
      if (hit[c]) {
        // Two rows give the same value in column b.
        Element first = 0;
        while (op[first * n + b] != c) ++first;
        fail(ErrorCode::AxiomIIViolation, "column " + labels[b] + " is not a permutation",
             labels[first] + "," + labels[a] + "," + labels[b]);
      }
      hit[c] = true;
      inv[c * n + b] = a;
    }
  }
  for (Element b = 0; b < n; ++b) {
    for (Element c = 0; c < n; ++c) {
      const std::size_t a = kernels::first_distributivity_failure(op, n, b, c);
      if (a < n) {
        fail(ErrorCode::AxiomIIIViolation, "(a*b)*c != (a*c)*(b*c)", labels[a] + "," + labels[b] + "," + labels[c]);
      }
    }
  }
  FiniteQuandle q;
  q.labels_ = std::move(labels);
  q.op_ = std::move(op);
  q.inv_ = std::move(inv);
  return q;
}

FiniteQuandle dihedral(std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "dihedral quandle needs n >= 1");
  std::vector<std::string> labels;
  std::vector<Element> op(n * n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) op[i * n + j] = static_cast<Element>((2 * j + n - i) % n);
  }
  return validate_quandle(std::move(labels), std::move(op));
}

FiniteQuandle trivial_quandle(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Element> op(n * n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) op[i * n + j] = static_cast<Element>(i);
  }
  return validate_quandle(std::move(labels), std::move(op));
}

FiniteQuandle alexander_quandle(const FiniteRing& ring) {
  const std::size_t n = ring.size();
  if (n > FiniteQuandle::kMaxSize) fail(ErrorCode::SizeLimitExceeded, "Alexander quandle above 4096 elements");
  const auto t = ring.t().index();
  const auto one_minus_t = (ring.one() - ring.t()).index();
  std::vector<std::string> labels;
  std::vector<Element> op(n * n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(ring.label(static_cast<Element>(i)));
  for (Element a = 0; a < n; ++a) {
    const auto ta = ring.mul(t, a);
    for (Element b = 0; b < n; ++b) op[a * n + b] = ring.add(ta, ring.mul(one_minus_t, b));
  }
  return validate_quandle(std::move(labels), std::move(op));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) fail(ErrorCode::InvalidArgument, "permutations of different degree");
  Permutation r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[x] = p[q[x]];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<std::uint32_t>(x);
  return r;
}

std::string cycle_string(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == start) continue;
    out += "(";
    for (std::size_t x = start; !seen[x]; x = p[x]) {
      seen[x] = true;
      out += std::to_string(x + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Permutation parse_cycles(std::string_view text, std::size_t n) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>(i);
  std::vector<std::uint32_t> cycle;
  bool open = false;
  for (char ch : text) {
    if (ch == ' ') continue;
    if (ch == '(') {
      if (open) fail(ErrorCode::ParseError, "nested '(' in cycle notation");
      open = true;
      cycle.clear();
    } else if (ch == ')') {
      if (!open) fail(ErrorCode::ParseError, "unbalanced ')' in cycle notation");
      open = false;
      // Apply this cycle after the ones already read.
      Permutation c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::uint32_t>(i);
      for (std::size_t k = 0; k < cycle.size(); ++k) c[cycle[k]] = cycle[(k + 1) % cycle.size()];
      p = compose(p, c);
    } else if (ch >= '1' && ch <= '9') {
      const std::uint32_t x = static_cast<std::uint32_t>(ch - '1');
      if (!open || x >= n) fail(ErrorCode::ParseError, "bad point in cycle notation");
      if (std::find(cycle.begin(), cycle.end(), x) != cycle.end()) fail(ErrorCode::ParseError, "repeated point in a cycle");
      cycle.push_back(x);
    } else {
      fail(ErrorCode::ParseError, std::string("unexpected '") + ch + "' in cycle notation");
    }
  }
  if (open) fail(ErrorCode::ParseError, "unterminated cycle");
  return p;
}

FiniteQuandle conjugation_quandle(const std::vector<Permutation>& perms, int fold) {
  std::map<Permutation, Element> index;
  for (const auto& p : perms) {
    if (!index.emplace(p, static_cast<Element>(index.size())).second) {
      fail(ErrorCode::InvalidArgument, "repeated permutation " + cycle_string(p));
    }
  }
  const std::size_t n = perms.size();
  std::vector<Element> op(n * n);
  std::vector<std::string> labels;
  for (const auto& p : perms) labels.push_back(cycle_string(p));
  auto power = [](const Permutation& p, int k) {
    Permutation base = k < 0 ? inverse(p) : p;
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = static_cast<std::uint32_t>(i);
    for (int i = 0; i < (k < 0 ? -k : k); ++i) r = compose(r, base);
    return r;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Permutation c = compose(compose(power(perms[b], -fold), perms[a]), power(perms[b], fold));
      auto it = index.find(c);
      if (it == index.end()) {
        fail(ErrorCode::NotClosed, "conjugate " + cycle_string(c) + " lies outside the set", labels[a] + "," + labels[b]);
      }
      op[a * n + b] = it->second;
    }
  }
  return validate_quandle(std::move(labels), std::move(op));
}

std::vector<Permutation> qs4_cycles() {
  return {parse_cycles("(123)", 4), parse_cycles("(142)", 4), parse_cycles("(134)", 4), parse_cycles("(243)", 4)};
}

QuandleHom make_hom(const FiniteQuandle& source, const FiniteQuandle& target, std::vector<Element> map) {
  if (map.size() != source.size()) fail(ErrorCode::InvalidArgument, "map must be defined on every source element");
  for (auto v : map) {
    if (v >= target.size()) fail(ErrorCode::InvalidArgument, "map value out of range");
  }
  for (Element a = 0; a < source.size(); ++a) {
    for (Element b = 0; b < source.size(); ++b) {
      if (map[source.op(a, b)] != target.op(map[a], map[b])) {
        fail(ErrorCode::NotAHomomorphism, "f(a*b) != f(a)*f(b)", source.label(a) + "," + source.label(b));
      }
    }
  }
  return {&source, &target, std::move(map)};
}

}  // namespace qf
