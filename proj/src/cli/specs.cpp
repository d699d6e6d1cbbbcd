#include "qf/cli/specs.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "qf/error.hpp"
#include "qf/extensions/abelian.hpp"
#include "qf/extensions/wreath.hpp"
#include "qf/link/builtin.hpp"
#include "qf/link/parse.hpp"
#include "qf/quandle/io.hpp"

namespace qf::cli {

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

[[noreturn]] void bad_spec(std::string_view what, std::string_view spec) {
  fail(ErrorCode::InvalidArgument, "bad " + std::string(what) + " spec '" + std::string(spec) + "'", std::string(spec));
}

unsigned parse_small(std::string_view text, std::string_view what) {
  const auto v = parse_uint(text, what);
  if (v > 64) fail(ErrorCode::InvalidArgument, std::string(what) + " too large");
  return static_cast<unsigned>(v);
}

}  // namespace

std::uint64_t parse_uint(std::string_view text, std::string_view what) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    fail(ErrorCode::InvalidArgument, "expected a non-negative integer for " + std::string(what) + ", got '" +
                                         std::string(text) + "'");
  }
  return v;
}

FiniteRing parse_ring_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) bad_spec("ring", spec);
  return FiniteRing::make(parse_uint(spec.substr(0, colon), "q"), IntLaurent::parse(spec.substr(colon + 1)));
}

QuandleChoice parse_quandle_spec(std::string_view spec) {
  const auto parts = split(spec, ':');
  const std::string& kind = parts[0];
  QuandleChoice c;
  c.spec = std::string(spec);
  if (kind == "dihedral" && parts.size() == 2) {
    c.quandle = dihedral(parse_uint(parts[1], "n"));
  } else if (kind == "trivial" && parts.size() == 2) {
    c.quandle = trivial_quandle(parse_uint(parts[1], "n"));
  } else if (kind == "alexander" && parts.size() >= 3) {
    c.ring = parse_ring_spec(spec.substr(kind.size() + 1));
  } else if ((kind == "w" || kind == "u") && parts.size() == 3) {
    c.ring = family_ring(kind == "w" ? SectionFamily::W : SectionFamily::U, parse_uint(parts[1], "q"),
                         parse_small(parts[2], "m"));
  } else if (kind == "wreath" && parts.size() == 3) {
    if (parts[1] == "qs4") {
      c.quandle = wreath_qs4(static_cast<std::uint32_t>(parse_uint(parts[2], "u"))).quandle;
    } else if (parts[1].size() > 1 && parts[1][0] == 'r') {
      c.quandle = wreath_dihedral(parse_uint(std::string_view(parts[1]).substr(1), "n"),
                                  static_cast<std::uint32_t>(parse_uint(parts[2], "v")))
                      .quandle;
    } else {
      bad_spec("quandle", spec);
    }
  } else if (kind == "conj" && parts.size() == 2 && parts[1] == "qs4") {
    c.quandle = conjugation_quandle(qs4_cycles());
  } else if (kind == "file" && parts.size() >= 2) {
    c.quandle = load_quandle_file(std::string(spec.substr(5)));
  } else if (parts.size() == 1 && std::ifstream(std::string(spec)).good()) {
    c.quandle = load_quandle_file(std::string(spec));
  } else {
    bad_spec("quandle", spec);
  }
  if (c.ring) c.quandle = alexander_quandle(*c.ring);
  return c;
}

std::optional<QuandleChoice> quandle_for_cocycle(std::string_view spec) {
  const auto parts = split(spec, ':');
  if (parts.size() == 4 && parts[0] == "section") return parse_quandle_spec(spec.substr(8));
  return std::nullopt;
}

Cochain parse_cocycle_spec(std::string_view spec, const FiniteQuandle* x) {
  const auto parts = split(spec, ':');
  if (parts.size() == 4 && parts[0] == "section") {
    const SectionFamily family = parts[1] == "w"   ? SectionFamily::W
                                 : parts[1] == "u" ? SectionFamily::U
                                                   : (bad_spec("cocycle", spec), SectionFamily::W);
    Cochain phi = cocycle_from_section(family, parse_uint(parts[2], "q"), parse_small(parts[3], "m"));
    if (x && x->size() != phi.base_size()) {
      fail(ErrorCode::InvalidArgument, "section cocycle lives on a quandle of size " + std::to_string(phi.base_size()));
    }
    return phi;
  }
  if (!x) fail(ErrorCode::InvalidArgument, "cocycle '" + std::string(spec) + "' needs --quandle");
  if (parts[0] == "zero" && parts.size() <= 2) {
    const std::uint64_t q = parts.size() == 2 ? parse_uint(parts[1], "q") : 1;
    if (q == 0) bad_spec("cocycle", spec);
    return Cochain(2, q, x->size());
  }
  std::ifstream f{std::string(spec)};
  if (!f) bad_spec("cocycle", spec);
  std::stringstream ss;
  ss << f.rdbuf();
  try {
    return cochain_from_json(nlohmann::json::parse(ss.str()), *x);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::ParseError, std::string("cocycle JSON: ") + e.what(), std::string(spec));
  }
}

LinkDiagram parse_link_spec(std::string_view spec) {
  for (const auto& name : builtin_link_names()) {
    if (spec == name) return builtin_link(spec);
  }
  if (std::ifstream(std::string(spec)).good()) return load_link_file(std::string(spec));
  return builtin_link(spec);  // UnknownName
}

std::pair<std::uint64_t, std::vector<IntLaurent>> parse_ideal_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) bad_spec("ideal", spec);
  std::vector<IntLaurent> gens;
  for (const auto& g : split(spec.substr(colon + 1), ',')) gens.push_back(IntLaurent::parse(g));
  return {parse_uint(spec.substr(0, colon), "p"), gens};
}

}  // namespace qf::cli
