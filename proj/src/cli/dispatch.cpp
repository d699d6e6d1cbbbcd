#include <CLI11.hpp>

#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "qf/alexander/alexander.hpp"
#include "qf/cli/cli.hpp"
#include "qf/cli/reproduce.hpp"
#include "qf/cli/specs.hpp"
#include "qf/error.hpp"
#include "qf/extensions/abelian.hpp"
#include "qf/extensions/wreath.hpp"
#include "qf/homology/cohomology.hpp"
#include "qf/invariants/state_sum.hpp"
#include "qf/quandle/io.hpp"
#include "qf/twistspin/twistspin.hpp"

namespace qf::cli {

namespace {

using nlohmann::json;

struct Global {
  bool json = false;
  unsigned threads = 0;
};

unsigned thread_count(const Global& g) {
  return g.threads ? g.threads : std::max(1u, std::thread::hardware_concurrency());
}

json group_ring_json(const GroupRingValue& v) {
  json coeffs = json::object();
  for (std::size_t n = 0; n < v.order(); ++n) coeffs[std::to_string(n)] = v.coeff(n);
  return {{"q", v.order()}, {"coeffs", coeffs}};
}

std::string monomial(std::uint64_t e) {
  if (e == 0) return "1";
  if (e == 1) return "t";
  return "t^" + std::to_string(e);
}

std::string family_string(const InvariantValue& v) {
  std::map<std::vector<std::uint64_t>, std::uint64_t> groups;
  for (const auto& f : v.family) ++groups[f];
  std::string out;
  for (const auto& [vec, count] : groups) {
    if (!out.empty()) out += " + ";
    out += std::to_string(count) + " x (";
    for (std::size_t i = 0; i < vec.size(); ++i) out += (i ? ", " : "") + monomial(vec[i]);
    out += ")";
  }
  return out.empty() ? "{}" : "{" + out + "}";
}

json family_json(const InvariantValue& v) {
  std::map<std::vector<std::uint64_t>, std::uint64_t> groups;
  for (const auto& f : v.family) ++groups[f];
  json arr = json::array();
  for (const auto& [vec, count] : groups) arr.push_back({{"exponents", vec}, {"count", count}});
  return arr;
}

std::string ring_json_h(const FiniteRing& r) {
  std::string s;
  for (auto c : r.relation().coeffs()) s += (s.empty() ? "" : ",") + std::to_string(c);
  return "[" + s + "]";
}

json ring_json(const FiniteRing& r) {
  return {{"q", r.modulus()},
          {"h", json::parse(ring_json_h(r))},
          {"basis", r.basis() == RingBasis::PowersOfT ? "T" : "1-T"},
          {"size", r.size()}};
}

std::string matrix_table(const LaurentMatrix& m) {
  std::vector<std::size_t> width(m.cols + 1, 0);
  for (const auto& l : m.row_labels) width[0] = std::max(width[0], l.size());
  for (std::size_t j = 0; j < m.cols; ++j) {
    width[j + 1] = m.col_labels[j].size();
    for (std::size_t i = 0; i < m.rows; ++i) width[j + 1] = std::max(width[j + 1], m.at(i, j).to_string().size());
  }
  std::string table;
  const auto emit = [&](const std::string& first, const std::function<std::string(std::size_t)>& cell) {
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(width[0])) << first;
    for (std::size_t j = 0; j < m.cols; ++j) os << "  " << std::setw(static_cast<int>(width[j + 1])) << cell(j);
    std::string line = os.str();
    line.erase(line.find_last_not_of(' ') + 1);
    table += line + "\n";
  };
  emit("", [&](std::size_t j) { return m.col_labels[j]; });
  for (std::size_t i = 0; i < m.rows; ++i) emit(m.row_labels[i], [&](std::size_t j) { return m.at(i, j).to_string(); });
  return table;
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quandle colorings, cohomology and cocycle invariants of links", "qf"};
  app.require_subcommand(1);
  Global g;
  app.add_flag("--json", g.json, "Emit JSON only");
  app.add_option("--threads", g.threads, "Worker threads (default: all cores)");

  // quandle
  auto* quandle = app.add_subcommand("quandle", "Build or validate a finite quandle");
  quandle->require_subcommand(1);
  std::string make_spec, validate_file;
  auto* qmake = quandle->add_subcommand("make", "Print the operation table of a named quandle");
  qmake->add_option("spec", make_spec, "dihedral:<n> | alexander:<q>:<h> | w:<q>:<m> | u:<q>:<m> | ...")->required();
  auto* qvalidate = quandle->add_subcommand("validate", "Check the quandle axioms for a table file (CSV or JSON)");
  qvalidate->add_option("file", validate_file)->required()->check(CLI::ExistingFile);

  // cohomology
  auto* cohom = app.add_subcommand("cohomology", "Dimension of H^n(X; Z_p)");
  std::string cq_spec, theory_name = "quandle";
  std::size_t degree = 2;
  std::uint32_t prime = 2;
  bool want_generator = false;
  cohom->add_option("--quandle", cq_spec)->required();
  cohom->add_option("--degree", degree)->required();
  cohom->add_option("--prime", prime)->required();
  cohom->add_option("--theory", theory_name)->check(CLI::IsMember({"quandle", "rack", "degenerate"}));
  cohom->add_flag("--generator", want_generator, "Also print a non-coboundary cocycle");

  // extend
  auto* extend = app.add_subcommand("extend", "Build quandle extensions");
  extend->require_subcommand(1);
  auto* abelian = extend->add_subcommand("abelian", "E(X, Z_q, phi)");
  std::string ab_base, ab_cocycle;
  std::uint64_t ab_q = 0;
  abelian->add_option("--base", ab_base)->required();
  abelian->add_option("--q", ab_q)->required();
  abelian->add_option("--cocycle", ab_cocycle)->required();
  auto* wreath = extend->add_subcommand("wreath", "Q(v) over R_n (n odd) or QS_4");
  std::string wr_base;
  std::uint32_t wr_v = 1;
  wreath->add_option("--base", wr_base, "r<n> or qs4")->required();
  wreath->add_option("--v", wr_v)->required();

  // invariant
  auto* invariant = app.add_subcommand("invariant", "Cocycle state-sum invariants");
  std::string inv_link, inv_quandle, inv_cocycle, shape = "scalar";
  auto* link_opt = invariant->add_option("--link", inv_link, "Built-in name or link file");
  invariant->add_option("--link-file", inv_link)->excludes(link_opt)->check(CLI::ExistingFile);
  invariant->add_option("--quandle", inv_quandle);
  invariant->add_option("--cocycle", inv_cocycle)->required();
  invariant->add_option("--shape", shape)->check(CLI::IsMember({"scalar", "vector", "family"}));

  // alexander
  auto* alex = app.add_subcommand("alexander", "Alexander matrix and derived data");
  std::string al_link, al_ring, al_inoue;
  bool al_conway = false;
  std::size_t al_delete = 0;
  auto* al_link_opt = alex->add_option("--link", al_link);
  alex->add_option("--link-file", al_link)->excludes(al_link_opt)->check(CLI::ExistingFile);
  alex->add_option("--ring", al_ring, "<q>:<h>: count kernel colorings over the ring");
  alex->add_option("--inoue", al_inoue, "<p>:<J>: predicted coloring count by Lambda_p/J");
  alex->add_flag("--conway", al_conway, "Determinant of the deleted matrix and min-degree of Nabla");
  alex->add_option("--delete", al_delete, "Row/column deleted for --conway (0-based)");

  // twistspin
  auto* twist = app.add_subcommand("twistspin", "Colorings of a twist-spun knot");
  std::string ts_knot, ts_quandle, ts_axis;
  unsigned ts_k = 0;
  bool ts_list = false;
  twist->add_option("--knot", ts_knot)->required();
  twist->add_option("--quandle", ts_quandle)->required();
  twist->add_option("--k", ts_k)->required();
  twist->add_option("--axis", ts_axis, "Axis arc label (default: base arc)");
  twist->add_flag("--list", ts_list, "List the fixed colorings");

  // reproduce
  auto* repro = app.add_subcommand("reproduce", "Re-run the closed-form checks for a worked example");
  std::string repro_id;
  repro->add_option("id", repro_id)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (quandle->parsed()) {
      if (qmake->parsed()) {
        const auto c = parse_quandle_spec(make_spec);
        if (g.json) {
          print_json(out, quandle_to_json(c.quandle));
        } else {
          out << quandle_to_csv(c.quandle);
        }
      } else {
        const auto q = load_quandle_file(validate_file);
        if (g.json) {
          print_json(out, {{"valid", true}, {"size", q.size()}});
        } else {
          out << "valid quandle with " << q.size() << " elements\n";
        }
      }
      return 0;
    }

    if (cohom->parsed()) {
      const auto c = parse_quandle_spec(cq_spec);
      const Theory theory = theory_name == "rack" ? Theory::Rack : theory_name == "degenerate" ? Theory::Degenerate : Theory::Quandle;
      const std::size_t dim = cohomology_dimension(degree, c.quandle, prime, theory);
      json j{{"quandle", cq_spec}, {"degree", degree}, {"prime", prime}, {"theory", theory_name}, {"dim", dim}};
      std::optional<Cochain> gen;
      if (want_generator) {
        gen = cohomology_generator(degree, c.quandle, prime);
        j["generator"] = gen ? cochain_to_json(*gen, c.quandle) : json(nullptr);
      }
      if (g.json) {
        print_json(out, j);
      } else {
        out << "dim = " << dim << "\n";
        if (gen) print_json(out, cochain_to_json(*gen, c.quandle));
      }
      return 0;
    }

    if (extend->parsed()) {
      json j;
      FiniteQuandle total;
      std::vector<FiniteQuandle::Element> projection, section;
      if (abelian->parsed()) {
        const auto base = parse_quandle_spec(ab_base);
        const Cochain phi = ab_cocycle == "zero" ? Cochain(2, ab_q, base.quandle.size())
                                                 : parse_cocycle_spec(ab_cocycle, &base.quandle);
        const auto ext = abelian_extension(base.quandle, ab_q, phi);
        total = ext.total;
        projection = ext.projection;
        section = ext.section;
        j["section"] = section;
      } else {
        WreathQuandle w;
        if (wr_base == "qs4") {
          w = wreath_qs4(wr_v);
        } else if (wr_base.size() > 1 && wr_base[0] == 'r') {
          w = wreath_dihedral(parse_uint(std::string_view(wr_base).substr(1), "n"), wr_v);
        } else {
          fail(ErrorCode::InvalidArgument, "wreath base must be r<n> or qs4", wr_base);
        }
        total = w.quandle;
        projection = w.projection;
      }
      j["quandle"] = quandle_to_json(total);
      j["projection"] = projection;
      if (g.json) {
        print_json(out, j);
      } else {
        out << quandle_to_csv(total);
        out << "projection:";
        for (auto p : projection) out << " " << p;
        out << "\n";
        if (!section.empty()) {
          out << "section:";
          for (auto s : section) out << " " << s;
          out << "\n";
        }
      }
      return 0;
    }

    if (invariant->parsed()) {
      if (inv_link.empty()) fail(ErrorCode::InvalidArgument, "--link or --link-file is required");
      const LinkDiagram d = parse_link_spec(inv_link);
      std::optional<QuandleChoice> x;
      if (!inv_quandle.empty()) {
        x = parse_quandle_spec(inv_quandle);
      } else {
        x = quandle_for_cocycle(inv_cocycle);
        if (!x) fail(ErrorCode::InvalidArgument, "--quandle is required for cocycle '" + inv_cocycle + "'");
      }
      const Cochain phi = parse_cocycle_spec(inv_cocycle, &x->quandle);
      if (phi.base_size() != x->quandle.size()) {
        fail(ErrorCode::InvalidArgument, "cocycle and quandle sizes differ");
      }
      if (const auto ok = is_2cocycle(phi, x->quandle); !ok) {
        fail(ErrorCode::NotACocycle, "cocycle fails the 2-cocycle identity on this quandle", ok.witness);
      }
      const InvariantValue v = psi(d, x->quandle, phi, {thread_count(g), 0});
      json j{{"link", d.name()}, {"quandle", x->spec}, {"q", v.q}, {"shape", shape}, {"colorings", v.family.size()}};
      std::string human;
      if (shape == "scalar") {
        j["scalar"] = group_ring_json(v.scalar);
        human = v.scalar.to_string();
      } else if (shape == "vector") {
        json arr = json::array();
        for (const auto& c : v.vector) arr.push_back(group_ring_json(c));
        j["vector"] = arr;
        human = to_string(v.vector);
      } else {
        j["family"] = family_json(v);
        human = family_string(v);
      }
      if (!g.json) out << human << "\n";
      print_json(out, j);
      return 0;
    }

    if (alex->parsed()) {
      if (al_link.empty()) fail(ErrorCode::InvalidArgument, "--link or --link-file is required");
      const LinkDiagram d = parse_link_spec(al_link);
      const AlexanderMatrix a = alexander_matrix(d);
      json grid = json::array();
      for (std::size_t i = 0; i < a.matrix.rows; ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < a.matrix.cols; ++k) row.push_back(a.matrix.at(i, k).to_string());
        grid.push_back(row);
      }
      json j{{"link", d.name()}, {"rows", a.matrix.row_labels}, {"cols", a.matrix.col_labels}, {"matrix", grid}};
      std::ostringstream text;
      text << matrix_table(a.matrix);
      if (!al_ring.empty()) {
        const FiniteRing r = parse_ring_spec(al_ring);
        const auto colorings = kernel_colorings(d, r);
        j["ring"] = ring_json(r);
        j["ring"]["colorings"] = colorings.size();
        text << "kernel colorings over " << al_ring << ": " << colorings.size() << "\n";
      }
      if (!al_inoue.empty()) {
        const auto [p, gens] = parse_ideal_spec(al_inoue);
        const auto count = inoue_count(d, p, gens);
        j["inoue"] = {{"p", p}, {"J", al_inoue.substr(al_inoue.find(':') + 1)}, {"count", count ? json(*count) : json(nullptr)}};
        text << "predicted colorings for " << al_inoue << ": " << (count ? std::to_string(*count) : "infinite") << "\n";
      }
      if (al_conway) {
        const ConwayData c = conway_min_degree(d, al_delete);
        j["conway"] = {{"deleted", c.deleted},
                       {"f", c.f.to_string()},
                       {"mu", c.mu},
                       {"nu", c.nu},
                       {"half_integer", c.half_integer},
                       {"nabla", c.nabla},
                       {"min_degree", c.min_degree ? json(*c.min_degree) : json("infinity")}};
        text << "f(T) = " << c.f.to_string() << "\n";
        text << "min-deg Nabla = " << (c.min_degree ? std::to_string(*c.min_degree) : "infinity") << "\n";
      }
      if (g.json) {
        print_json(out, j);
      } else {
        out << text.str();
      }
      return 0;
    }

    if (twist->parsed()) {
      const LinkDiagram d = parse_link_spec(ts_knot);
      const Tangle t = make_tangle(d, ts_axis);
      const auto x = parse_quandle_spec(ts_quandle);
      const auto r = twist_spin_colorings(t, x.quandle, ts_k, {thread_count(g), 0});
      json j{{"knot", d.name()},
             {"quandle", ts_quandle},
             {"k", ts_k},
             {"axis", d.arcs()[t.axis_arc]},
             {"fixed", r.fixed.size()},
             {"constant", r.constant},
             {"nontrivial", r.nontrivial}};
      if (ts_list) {
        json arr = json::array();
        for (const auto& c : r.fixed) {
          json m = json::object();
          for (std::size_t i = 0; i < c.size(); ++i) m[d.arcs()[i]] = x.quandle.label(c[i]);
          arr.push_back(m);
        }
        j["colorings"] = arr;
      }
      if (g.json) {
        print_json(out, j);
      } else {
        out << "fixed colorings: " << r.fixed.size() << " (" << r.constant << " constant)\n";
        out << "non-trivially colorable: " << (r.nontrivial ? "yes" : "no") << "\n";
        if (ts_list) print_json(out, j["colorings"]);
      }
      return 0;
    }

    if (repro->parsed()) {
      const auto lines = reproduce(repro_id, thread_count(g));
      bool all = true;
      json arr = json::array();
      for (const auto& l : lines) {
        all = all && l.pass;
        arr.push_back({{"check", l.name}, {"pass", l.pass}, {"detail", l.detail}});
        if (!g.json) out << (l.pass ? "PASS " : "FAIL ") << l.name << (l.detail.empty() ? "" : "  " + l.detail) << "\n";
      }
      if (g.json) print_json(out, {{"example", repro_id}, {"checks", arr}, {"pass", all}});
      return all ? 0 : 1;
    }
  } catch (const Error& e) {
    if (g.json) {
      print_json(out, {{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}, {"witness", e.witness()}}}});
    } else {
      err << "error (" << to_string(e.code()) << "): " << e.what();
      if (!e.witness().empty()) err << " [" << e.witness() << "]";
      err << "\n";
    }
    return 1;
  }
  return 2;
}

}  // namespace qf::cli
