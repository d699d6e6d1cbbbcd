#include "qf/cli/reproduce.hpp"

#include <algorithm>
#include <map>

#include "qf/alexander/alexander.hpp"
#include "qf/error.hpp"
#include "qf/extensions/wreath.hpp"
#include "qf/invariants/state_sum.hpp"
#include "qf/link/builtin.hpp"
#include "qf/quandle/quandle.hpp"
#include "qf/twistspin/twistspin.hpp"

namespace qf::cli {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

GroupRingValue uniform(std::uint64_t q, std::uint64_t each) {
  GroupRingValue v(q);
  for (std::uint64_t e = 0; e < q; ++e) v.add_term(static_cast<std::int64_t>(e), each);
  return v;
}

std::string family_tag(SectionFamily f) { return f == SectionFamily::W ? "W" : "U"; }

// Expected per-component value and, when the value is spread, the per-class
// multiplicity.
void vector_sweep(const std::string& link, SectionFamily family, std::uint64_t q, unsigned m,
                  const GroupRingValue& expected, bool check_classes, bool check_balanced, unsigned threads,
                  std::vector<CheckLine>& out) {
  const LinkDiagram d = builtin_link(link);
  const FiniteQuandle x = alexander_quandle(family_ring(family, q, m));
  const Cochain phi = cocycle_from_section(family, q, m);
  const InvariantValue v = psi(d, x, phi, {threads, 0});
  const std::string tag = link + " " + family_tag(family) + " q=" + std::to_string(q) + " m=" + std::to_string(m);

  const std::vector<GroupRingValue> want(d.components().size(), expected);
  out.push_back({tag + " vector", v.vector == want, to_string(v.vector) + " expected " + to_string(want)});

  if (check_classes) {
    bool ok = true;
    for (const auto& ms : v.per_component_multisets()) {
      std::map<std::uint64_t, std::uint64_t> counts;
      for (auto e : ms) ++counts[e];
      ok = ok && counts.size() == q;
      for (const auto& [e, c] : counts) ok = ok && c == expected.coeff(e);
    }
    out.push_back({tag + " family classes", ok, ""});
  }
  if (check_balanced) {
    // every coloring contributes (t^-k, t^-l, t^(k+l))
    bool ok = true;
    for (const auto& f : v.family) {
      std::uint64_t s = 0;
      for (auto e : f) s += e;
      ok = ok && s % q == 0;
    }
    out.push_back({tag + " per-coloring shape", ok, ""});
  }
}

std::vector<CheckLine> whitehead_vector(unsigned threads) {
  std::vector<CheckLine> out;
  for (auto family : {SectionFamily::W, SectionFamily::U}) {
    for (std::uint64_t q : {2u, 3u}) {
      for (unsigned m = 1; m <= 4; ++m) {
        const bool spread = m >= 3;
        const auto expected = spread ? uniform(q, ipow(q, m + 2)) : GroupRingValue::constant(q, ipow(q, 2 * m));
        vector_sweep("whitehead", family, q, m, expected, spread, false, threads, out);
      }
    }
  }
  return out;
}

std::vector<CheckLine> borromean_vector(unsigned threads) {
  std::vector<CheckLine> out;
  for (std::uint64_t q : {2u, 3u}) {
    for (unsigned m = 1; m <= 3; ++m) {
      const bool spread = m >= 2;
      const auto expected = spread ? uniform(q, ipow(q, m + 2)) : GroupRingValue::constant(q, ipow(q, 3 * m));
      vector_sweep("borromean", SectionFamily::W, q, m, expected, false, true, threads, out);
    }
  }
  return out;
}

CheckLine twist_line(const std::string& knot, const std::string& qname, const WreathQuandle& w, unsigned k,
                     unsigned threads) {
  const LinkDiagram d = builtin_link(knot);
  const auto r = twist_spin_colorings(make_tangle(d), w.quandle, k, {threads, 0});
  return {knot + " by " + qname + " at k=" + std::to_string(k), r.nontrivial,
          std::to_string(r.fixed.size()) + " fixed, " + std::to_string(r.constant) + " constant"};
}

std::vector<CheckLine> twist_spin(unsigned threads) {
  std::vector<CheckLine> out;
  for (std::uint32_t v = 1; v <= 3; ++v) {
    out.push_back(twist_line("trefoil", "R_3(" + std::to_string(v) + ")", wreath_dihedral(3, v), 2 * v, threads));
  }
  for (std::uint32_t u = 1; u <= 2; ++u) {
    out.push_back(twist_line("trefoil", "QS_4(" + std::to_string(u) + ")", wreath_qs4(u), 3 * u, threads));
  }
  for (std::uint32_t v = 1; v <= 2; ++v) {
    out.push_back(twist_line("figure8", "R_5(" + std::to_string(v) + ")", wreath_dihedral(5, v), 2 * v, threads));
  }
  return out;
}

LaurentMatrix parse_grid(const std::vector<std::vector<const char*>>& g) {
  LaurentMatrix m;
  m.rows = g.size();
  m.cols = g[0].size();
  for (const auto& row : g) {
    for (const char* e : row) m.entries.push_back(IntLaurent::parse(e));
  }
  return m;
}

bool same_entries(const LaurentMatrix& a, const LaurentMatrix& b) {
  return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
}

}  // namespace

LaurentMatrix whitehead_reference_matrix() {
  return parse_grid({{"-1", "T", "0", "0", "0", "0"},
                     {"T^-1", "-1", "0", "1-T", "0", "1-T^-1"},
                     {"0", "1-T", "-1", "T", "0", "0"},
                     {"0", "0", "1-T", "-1", "T", "0"},
                     {"0", "0", "0", "0", "-1", "T^-1"},
                     {"1-T^-1", "0", "T", "0", "1-T", "-1"}});
}

LaurentMatrix whitehead_reference_permuted() {
  return parse_grid({{"-1", "1-T", "0", "0", "1-T^-1", "T^-1"},
                     {"0", "-1", "1-T", "T", "0", "0"},
                     {"0", "0", "T", "1-T", "-1", "1-T^-1"},
                     {"0", "0", "0", "-1", "T^-1", "0"},
                     {"T", "0", "0", "0", "0", "-1"},
                     {"1-T", "T", "-1", "0", "0", "0"}});
}

LaurentMatrix whitehead_reference_reduced() {
  return parse_grid({{"1", "0", "0", "0", "0", "0"},
                     {"0", "1", "0", "0", "0", "0"},
                     {"0", "0", "1", "0", "0", "0"},
                     {"0", "0", "0", "1", "0", "0"},
                     {"-T", "-T+T^2", "(1-T)^2", "1-3T+2T^2", "-T^-1*(1-T)^3", "T^-1*(1-T)^3"},
                     {"-1+T", "-1+T-T^2", "-1-(1-T)^2", "-2+3T-2T^2", "T^-1*(1-T)^3", "-T^-1*(1-T)^3"}});
}

const std::vector<std::size_t>& whitehead_row_order() {
  static const std::vector<std::size_t> o{1, 3, 5, 4, 0, 2};  // w2 w4 w6 w5 w1 w3
  return o;
}

const std::vector<std::size_t>& whitehead_col_order() {
  static const std::vector<std::size_t> o{1, 3, 2, 4, 5, 0};  // t2 t4 t3 t5 t6 t1
  return o;
}

std::vector<CheckLine> whitehead_matrix_checks() {
  std::vector<CheckLine> out;
  const LinkDiagram d = builtin_link("whitehead");
  const LaurentMatrix a = alexander_matrix(d).matrix;
  out.push_back({"whitehead Alexander matrix", same_entries(a, whitehead_reference_matrix()), ""});
  const LaurentMatrix a0 = reorder(a, whitehead_row_order(), whitehead_col_order());
  out.push_back({"whitehead permuted matrix", same_entries(a0, whitehead_reference_permuted()), ""});
  const LaurentMatrix a1 = column_reduce_leading(a0, 4);
  out.push_back({"whitehead column-reduced matrix", same_entries(a1, whitehead_reference_reduced()), ""});

  // w_r = -(w1 A1[4][j] + w3 A1[5][j]) for the four leading columns, and the
  // two trailing columns are +-(w3 - w1) T^-1 (1-T)^3.
  const IntLaurent t = IntLaurent::t();
  const IntLaurent u = 1 - t;
  const std::vector<std::pair<IntLaurent, IntLaurent>> rel{
      {t, u}, {t * u, t + u * u}, {-(u * u), 1 + u * u}, {t * u - u * u, t + 2 * u * u}};
  bool ok = true;
  for (std::size_t j = 0; j < 4; ++j) {
    ok = ok && -a1.at(4, j) == rel[j].first && -a1.at(5, j) == rel[j].second;
  }
  const IntLaurent tail = IntLaurent::t_inverse() * u.pow(3);
  ok = ok && a1.at(4, 4) == -tail && a1.at(5, 4) == tail && a1.at(4, 5) == tail && a1.at(5, 5) == -tail;
  out.push_back({"whitehead kernel relations", ok, ""});

  // the kernel over W_3 (q = 2, 3) is cut out by the same relations
  for (std::uint64_t q : {2u, 3u}) {
    const FiniteRing r = FiniteRing::w(q, 3);
    const auto colorings = kernel_colorings(d, r);
    const auto ev = [&](const IntLaurent& p) { return r.eval(p).index(); };
    bool match = true;
    std::size_t expected = 0;
    for (FiniteRing::Index w1 = 0; w1 < r.size(); ++w1) {
      for (FiniteRing::Index w3 = 0; w3 < r.size(); ++w3) {
        if (r.mul(ev(tail), r.sub(w3, w1)) != 0) continue;
        ++expected;
        // canonical arc order w1..w6
        Coloring c(6);
        c[0] = w1;
        c[2] = w3;
        const std::size_t slot[4] = {1, 3, 5, 4};
        for (std::size_t j = 0; j < 4; ++j) {
          c[slot[j]] = r.add(r.mul(ev(rel[j].first), w1), r.mul(ev(rel[j].second), w3));
        }
        match = match && std::binary_search(colorings.begin(), colorings.end(), c);
      }
    }
    match = match && colorings.size() == expected;
    out.push_back({"whitehead kernel over W_3 q=" + std::to_string(q), match,
                   std::to_string(colorings.size()) + " colorings"});
  }
  return out;
}

namespace {

std::vector<CheckLine> conway_bound() {
  std::vector<CheckLine> out;
  const LinkDiagram wh = builtin_link("whitehead");
  const LinkDiagram br = builtin_link("borromean");
  const auto cw = conway_min_degree(wh);
  const auto cb = conway_min_degree(br);
  const auto mw = smallest_nontrivial_m(wh, 2, 4);
  const auto mb = smallest_nontrivial_m(br, 2, 3);
  const auto show = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("infinity"); };
  const auto showm = [](const std::optional<unsigned>& v) { return v ? std::to_string(*v) : std::string("none"); };
  out.push_back({"whitehead min-deg Nabla = 3", cw.min_degree == 3, "got " + show(cw.min_degree)});
  out.push_back({"whitehead smallest non-trivial m = 3", mw == 3u, "got " + showm(mw)});
  out.push_back({"whitehead bound m <= min-deg", mw && cw.min_degree && *cw.min_degree >= static_cast<int>(*mw), ""});
  out.push_back({"borromean min-deg Nabla >= 2", cb.min_degree.value_or(1 << 20) >= 2, "got " + show(cb.min_degree)});
  out.push_back({"borromean smallest non-trivial m = 2", mb == 2u, "got " + showm(mb)});
  return out;
}

constexpr const char* kIds[] = {"whitehead-vector", "borromean-vector", "twist-spin", "whitehead-matrix",
                                "conway-bound"};

}  // namespace

std::vector<std::string> reproduce_ids() {
  std::vector<std::string> ids;
  for (const char* e : kIds) ids.emplace_back(e);
  return ids;
}

std::vector<CheckLine> reproduce(std::string_view id, unsigned threads) {
  const std::string_view name = id;
  if (name == "whitehead-vector") return whitehead_vector(threads);
  if (name == "borromean-vector") return borromean_vector(threads);
  if (name == "twist-spin") return twist_spin(threads);
  if (name == "whitehead-matrix") return whitehead_matrix_checks();
  if (name == "conway-bound") return conway_bound();
  std::string known;
  for (const char* e : kIds) known += (known.empty() ? "" : ", ") + std::string(e);
  fail(ErrorCode::UnknownExample, "unknown example '" + std::string(id) + "' (known: " + known + ")");
}

}  // namespace qf::cli
