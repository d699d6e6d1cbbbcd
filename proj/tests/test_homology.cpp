#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qf/extensions/abelian.hpp"
#include "qf/homology/chain.hpp"
#include "qf/homology/cohomology.hpp"
#include "qf/quandle/quandle.hpp"

using namespace qf;

static std::vector<Tuple> all_tuples(std::size_t n, std::size_t k) {
  std::vector<Tuple> out{{}};
  for (std::size_t d = 0; d < k; ++d) {
    std::vector<Tuple> next;
    for (const auto& t : out)
      for (FiniteQuandle::Element x = 0; x < n; ++x) {
        auto u = t;
        u.push_back(x);
        next.push_back(u);
      }
    out = std::move(next);
  }
  return out;
}

TEST_CASE("boundary squares to zero") {
  for (const auto& x : {dihedral(3), dihedral(4), conjugation_quandle(qs4_cycles())}) {
    for (std::size_t k = 2; k <= 4; ++k) {
      if (k == 4 && x.size() > 3) continue;
      for (const auto& t : all_tuples(x.size(), k)) REQUIRE(boundary(x, boundary(x, generator(t))).is_zero());
    }
  }
}

TEST_CASE("boundary of degenerate chains is degenerate") {
  const auto x = dihedral(3);
  for (const auto& t : all_tuples(3, 3)) {
    if (!is_degenerate(t)) continue;
    const auto b = boundary(x, generator(t));
    CHECK(b.degenerate_part() == b);
  }
}

TEST_CASE("coboundary squares to zero") {
  std::mt19937 rng(5);
  const auto x = dihedral(5);
  for (std::size_t deg = 1; deg <= 2; ++deg) {
    Cochain f(deg, 7, x.size());
    for (std::size_t i = 0; i < f.tuple_count(); ++i) f.set_flat(i, rng() % 7);
    const auto dd = coboundary(x, coboundary(x, f));
    CHECK(dd == Cochain(deg + 2, 7, x.size()));
  }
}

TEST_CASE("small cohomology groups") {
  CHECK(cohomology_dimension(2, dihedral(3), 3) == 0);
  CHECK(cohomology_dimension(3, dihedral(3), 3) == 1);
  CHECK(cohomology_dimension(2, trivial_quandle(2), 2) == 2);
  CHECK(cohomology_dimension(2, conjugation_quandle(qs4_cycles()), 2) == 1);
}

TEST_CASE("rack cohomology splits into degenerate and quandle parts") {
  for (const auto& [x, p] : {std::pair{dihedral(3), 3u}, std::pair{dihedral(4), 2u}}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      CAPTURE(n);
      CHECK(cohomology_dimension(n, x, p, Theory::Rack) ==
            cohomology_dimension(n, x, p, Theory::Degenerate) + cohomology_dimension(n, x, p, Theory::Quandle));
    }
  }
}

TEST_CASE("cocycle checks") {
  const auto x = alexander_quandle(family_ring(SectionFamily::W, 2, 3));
  CHECK(is_2cocycle(cocycle_from_section(SectionFamily::W, 2, 3), x));
  Cochain bad(2, 2, x.size());
  bad.set({1, 2}, 1);
  const auto r = is_2cocycle(bad, x);
  CHECK_FALSE(r);
  CHECK_FALSE(r.witness.empty());
  Cochain f(1, 3, 3);
  f.set({1}, 1);
  const auto df = coboundary(dihedral(3), f);
  CHECK(is_2cocycle(df, dihedral(3)));
  CHECK(is_coboundary(df, dihedral(3)));
}

TEST_CASE("generator of H^3 for R_3") {
  const auto x = dihedral(3);
  const auto g = cohomology_generator(3, x, 3);
  REQUIRE(g);
  CHECK(is_3cocycle(*g, x));
  CHECK_FALSE(is_coboundary(*g, x));
  CHECK_FALSE(cohomology_generator(2, x, 3));
}

TEST_CASE("cochain JSON round trip") {
  const auto x = dihedral(3);
  Cochain c(2, 5, 3);
  c.set({0, 1}, 4);
  c.set({2, 1}, 1);
  CHECK(cochain_from_json(nlohmann::json::parse(cochain_to_json(c, x).dump()), x) == c);
}
