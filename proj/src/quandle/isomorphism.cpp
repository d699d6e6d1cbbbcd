#include <algorithm>

#include "qf/error.hpp"
#include "qf/quandle/quandle.hpp"

namespace qf {

namespace {

using Element = FiniteQuandle::Element;
constexpr Element kUnset = static_cast<Element>(-1);

// Sorted cycle type of the right translation x |-> x * a; preserved by
// isomorphisms.
std::vector<std::size_t> signature(const FiniteQuandle& q, Element a) {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(q.size(), false);
  for (Element s = 0; s < q.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (Element x = s; !seen[x]; x = q.op(x, a)) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

struct State {
  std::vector<Element> fwd, back;
  std::vector<Element> assigned;
};

bool assign(const FiniteQuandle& a, const FiniteQuandle& b, State& s, Element x, Element y) {
  std::vector<std::pair<Element, Element>> work{{x, y}};
  while (!work.empty()) {
    auto [u, v] = work.back();
    work.pop_back();
    if (s.fwd[u] != kUnset) {
      if (s.fwd[u] != v) return false;
      continue;
    }
    if (s.back[v] != kUnset) return false;
    s.fwd[u] = v;
    s.back[v] = u;
    s.assigned.push_back(u);
    for (Element w : s.assigned) {
      work.emplace_back(a.op(u, w), b.op(v, s.fwd[w]));
      work.emplace_back(a.op(w, u), b.op(s.fwd[w], v));
    }
  }
  return true;
}

bool search(const FiniteQuandle& a, const FiniteQuandle& b, const std::vector<std::vector<std::size_t>>& sa,
            const std::vector<std::vector<std::size_t>>& sb, State& s) {
  Element x = 0;
  while (x < a.size() && s.fwd[x] != kUnset) ++x;
  if (x == a.size()) return true;
  for (Element y = 0; y < b.size(); ++y) {
    if (s.back[y] != kUnset || sa[x] != sb[y]) continue;
    State next = s;
    if (assign(a, b, next, x, y) && search(a, b, sa, sb, next)) {
      s = std::move(next);
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const FiniteQuandle& a, const FiniteQuandle& b) {
  if (a.size() > 256 || b.size() > 256) fail(ErrorCode::SizeLimitExceeded, "isomorphism search is limited to 256 elements");
  if (a.size() != b.size()) return std::nullopt;
  std::vector<std::vector<std::size_t>> sa, sb;
  for (Element x = 0; x < a.size(); ++x) sa.push_back(signature(a, x));
  for (Element y = 0; y < b.size(); ++y) sb.push_back(signature(b, y));
  {
    auto ca = sa, cb = sb;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return std::nullopt;
  }
  State s{std::vector<Element>(a.size(), kUnset), std::vector<Element>(b.size(), kUnset), {}};
  if (!search(a, b, sa, sb, s)) return std::nullopt;
  return s.fwd;
}

}  // namespace qf
