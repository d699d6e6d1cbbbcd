#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qf/homology/cohomology.hpp"
#include "qf/invariants/state_sum.hpp"
#include "qf/link/builtin.hpp"

using namespace qf;

TEST_CASE("backtracking agrees with brute force") {
  const std::vector<FiniteQuandle> xs{dihedral(3), dihedral(5), conjugation_quandle(qs4_cycles()),
                                      alexander_quandle(family_ring(SectionFamily::W, 2, 2)),
                                      alexander_quandle(family_ring(SectionFamily::W, 2, 3))};
  for (const auto& name : builtin_link_names()) {
    const auto d = builtin_link(name);
    for (const auto& x : xs) {
      if (std::pow(x.size(), d.arc_count()) > 3e5) continue;
      CAPTURE(name);
      CAPTURE(x.size());
      CHECK(enumerate_colorings(d, x) == brute_force_colorings(d, x));
    }
  }
}

TEST_CASE("threaded enumeration is deterministic") {
  const auto d = builtin_link("whitehead");
  const auto x = alexander_quandle(family_ring(SectionFamily::W, 3, 3));
  CHECK(enumerate_colorings(d, x, {1, 0}) == enumerate_colorings(d, x, {4, 0}));
}

TEST_CASE("classical counts") {
  CHECK(enumerate_colorings(builtin_link("trefoil"), dihedral(3)).size() == 9);
  CHECK(enumerate_colorings(builtin_link("figure8"), dihedral(3)).size() == 3);
  CHECK(enumerate_colorings(builtin_link("figure8"), dihedral(5)).size() == 25);
  CHECK(enumerate_colorings(builtin_link("unknot"), dihedral(7)).size() == 7);
  CHECK(enumerate_colorings(builtin_link("trefoil-kink"), dihedral(3)).size() == 9);
}

TEST_CASE("shapes are consistent") {
  const auto d = builtin_link("whitehead");
  const auto x = alexander_quandle(family_ring(SectionFamily::W, 2, 3));
  const auto v = psi(d, x, cocycle_from_section(SectionFamily::W, 2, 3));
  GroupRingValue sum(2);
  for (const auto& f : v.family) {
    std::uint64_t e = 0;
    for (auto c : f) e += c;
    sum.add_term(static_cast<std::int64_t>(e));
  }
  CHECK(sum == v.scalar);
  for (std::size_t j = 0; j < 2; ++j) CHECK(v.vector[j].total() == v.family.size());
}

TEST_CASE("coboundary changes leave the invariant alone") {
  std::mt19937 rng(9);
  const auto d = builtin_link("whitehead");
  const auto x = alexander_quandle(family_ring(SectionFamily::W, 2, 3));
  const auto phi = cocycle_from_section(SectionFamily::W, 2, 3);
  const auto base = psi(d, x, phi);
  for (int trial = 0; trial < 3; ++trial) {
    Cochain f(1, 2, x.size());
    for (std::size_t i = 0; i < f.tuple_count(); ++i) f.set_flat(i, rng() % 2);
    const auto other = psi(d, x, phi + coboundary(x, f));
    CHECK(other.family == base.family);
  }
}

TEST_CASE("kink and Reidemeister I do not change the invariant") {
  const auto x = alexander_quandle(family_ring(SectionFamily::U, 3, 2));
  const auto phi = cocycle_from_section(SectionFamily::U, 3, 2);
  CHECK(psi(builtin_link("trefoil"), x, phi).scalar == psi(builtin_link("trefoil-kink"), x, phi).scalar);
}

TEST_CASE("lifting agrees with brute force") {
  const auto d = builtin_link("whitehead");
  const auto x = alexander_quandle(family_ring(SectionFamily::W, 2, 3));
  const auto ext = abelian_extension(x, 2, cocycle_from_section(SectionFamily::W, 2, 3));
  for (const auto& c : enumerate_colorings(d, x)) {
    const auto r = extends_coloring(d, c, ext);
    CHECK(r.lifted == lift_exists_brute_force(d, c, ext));
    if (r.lifted) CHECK(is_coloring(d, ext.total, r.lift));
  }
}
