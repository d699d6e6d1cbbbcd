#include "qf/invariants/colorings.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "qf/algebra/matrix.hpp"
#include "qf/error.hpp"

namespace qf {

using Element = FiniteQuandle::Element;

bool is_coloring(const LinkDiagram& d, const FiniteQuandle& x, const Coloring& c) {
  if (c.size() != d.arc_count()) return false;
  for (auto e : c) {
    if (e >= x.size()) return false;
  }
  for (const auto& t : d.crossings()) {
    if (t.sign > 0 ? x.op(c[t.in], c[t.over]) != c[t.out] : x.op(c[t.out], c[t.over]) != c[t.in]) return false;
  }
  return true;
}

bool is_constant(const Coloring& c) {
  return std::adjacent_find(c.begin(), c.end(), std::not_equal_to<>()) == c.end();
}

namespace {

constexpr std::int64_t kFree = -1;

class Search {
 public:
  Search(const LinkDiagram& d, const FiniteQuandle& x, std::uint64_t cap, std::atomic<std::uint64_t>& nodes)
      : d_(d), x_(x), cap_(cap), nodes_(nodes) {}

  void run(std::vector<std::int64_t> state, std::vector<Coloring>& out) {
    if (++nodes_ > cap_) fail(ErrorCode::SizeLimitExceeded, "coloring search exceeded the node cap");
    if (!propagate(state)) return;
    const std::size_t next = choose(state);
    if (next == state.size()) {
      out.emplace_back(state.begin(), state.end());
      return;
    }
    for (Element v = 0; v < x_.size(); ++v) {
      auto child = state;
      child[next] = v;
      run(std::move(child), out);
    }
  }

 private:
  // Fills every forced arc; false on a contradiction.
  bool propagate(std::vector<std::int64_t>& s) const {
    bool changed = true;
    auto put = [&](std::size_t arc, Element v) {
      if (s[arc] == kFree) {
        s[arc] = v;
        changed = true;
        return true;
      }
      return s[arc] == v;
    };
    while (changed) {
      changed = false;
      for (const auto& t : d_.crossings()) {
        if (s[t.over] == kFree) continue;
        const auto over = static_cast<Element>(s[t.over]);
        if (s[t.in] != kFree) {
          const auto in = static_cast<Element>(s[t.in]);
          if (!put(t.out, t.sign > 0 ? x_.op(in, over) : x_.inv(in, over))) return false;
        }
        if (s[t.out] != kFree) {
          const auto out = static_cast<Element>(s[t.out]);
          if (!put(t.in, t.sign > 0 ? x_.inv(out, over) : x_.op(out, over))) return false;
        }
      }
    }
    return true;
  }

  // Prefer an over-arc next to an already colored under-arc; it unlocks
  // propagation. Falls back to the first free arc.
  std::size_t choose(const std::vector<std::int64_t>& s) const {
    for (const auto& t : d_.crossings()) {
      if (s[t.over] == kFree && (s[t.in] != kFree || s[t.out] != kFree)) return t.over;
    }
    for (std::size_t a = 0; a < s.size(); ++a) {
      if (s[a] == kFree) return a;
    }
    return s.size();
  }

  const LinkDiagram& d_;
  const FiniteQuandle& x_;
  std::uint64_t cap_;
  std::atomic<std::uint64_t>& nodes_;
};

}  // namespace

std::vector<Coloring> enumerate_colorings(const LinkDiagram& d, const FiniteQuandle& x, const EnumerationOptions& opts) {
  std::vector<Coloring> out;
  if (d.arc_count() == 0) return {Coloring{}};
  const std::uint64_t cap = opts.node_cap ? opts.node_cap : 100 * enumeration_cap();
  std::atomic<std::uint64_t> nodes{0};
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, x.size()));
  // Seeds: the color of arc 0.
  std::vector<std::vector<Coloring>> parts(x.size());
  auto work = [&](Element seed) {
    Search search(d, x, cap, nodes);
    std::vector<std::int64_t> state(d.arc_count(), kFree);
    state[0] = seed;
    search.run(std::move(state), parts[seed]);
  };
  if (threads <= 1) {
    for (Element v = 0; v < x.size(); ++v) work(v);
  } else {
    std::atomic<Element> next{0};
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (Element v = next++; v < x.size(); v = next++) work(v);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Coloring> brute_force_colorings(const LinkDiagram& d, const FiniteQuandle& x) {
  const std::size_t n = d.arc_count();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= x.size();
    if (total > 100 * enumeration_cap()) fail(ErrorCode::SizeLimitExceeded, "brute-force coloring space too large");
  }
  std::vector<Coloring> out;
  Coloring c(n, 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    if (is_coloring(d, x, c)) out.push_back(c);
    for (std::size_t i = n; i-- > 0;) {
      if (++c[i] < x.size()) break;
      c[i] = 0;
    }
  }
  return out;
}

}  // namespace qf
