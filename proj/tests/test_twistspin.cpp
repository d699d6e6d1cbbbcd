#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qf/extensions/wreath.hpp"
#include "qf/link/builtin.hpp"
#include "qf/twistspin/twistspin.hpp"

using namespace qf;

TEST_CASE("twist action and orbit length") {
  const auto x = dihedral(3);
  const Coloring c{0, 1, 2};
  CHECK(twist_action(x, c, 0) == Coloring{0, 2, 1});
  CHECK(twist_orbit_length(x, c, 0) == 2);
  CHECK(twist_orbit_length(x, Coloring{1, 1, 1}, 1) == 1);
}

TEST_CASE("k = 0 keeps every coloring; k = 1 only constants") {
  const auto t = make_tangle(builtin_link("trefoil"));
  const auto r0 = twist_spin_colorings(t, dihedral(3), 0);
  CHECK(r0.fixed.size() == 9);
  CHECK(r0.constant == 3);
  const auto r1 = twist_spin_colorings(t, dihedral(3), 1);
  CHECK(r1.fixed.size() == 3);
  CHECK_FALSE(r1.nontrivial);
}

TEST_CASE("dihedral colorings survive even twisting") {
  const auto t = make_tangle(builtin_link("trefoil"));
  CHECK(twist_spin_colorings(t, dihedral(3), 2).nontrivial);
  CHECK_FALSE(twist_spin_colorings(t, dihedral(3), 3).nontrivial);
}

TEST_CASE("fibred wreath colorings at the predicted twist") {
  const auto tref = make_tangle(builtin_link("trefoil"));
  for (std::uint32_t v = 1; v <= 3; ++v) CHECK(twist_spin_colorings(tref, wreath_dihedral(3, v).quandle, 2 * v).nontrivial);
  for (std::uint32_t u = 1; u <= 2; ++u) CHECK(twist_spin_colorings(tref, wreath_qs4(u).quandle, 3 * u).nontrivial);
  const auto fig8 = make_tangle(builtin_link("figure8"));
  for (std::uint32_t v = 1; v <= 2; ++v) CHECK(twist_spin_colorings(fig8, wreath_dihedral(5, v).quandle, 2 * v).nontrivial);
  // the axis choice does not matter for the count
  const auto other = make_tangle(builtin_link("trefoil"), "c");
  CHECK(twist_spin_colorings(other, wreath_dihedral(3, 2).quandle, 4).fixed.size() ==
        twist_spin_colorings(tref, wreath_dihedral(3, 2).quandle, 4).fixed.size());
}
