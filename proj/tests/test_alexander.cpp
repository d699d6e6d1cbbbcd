#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qf/alexander/alexander.hpp"
#include "qf/error.hpp"
#include "qf/cli/reproduce.hpp"
#include "qf/invariants/state_sum.hpp"
#include "qf/link/builtin.hpp"

using namespace qf;

TEST_CASE("whitehead matrix, permutation and column reduction") {
  const auto a = alexander_matrix(builtin_link("whitehead")).matrix;
  const auto ref = cli::whitehead_reference_matrix();
  REQUIRE(a.rows == 6);
  CHECK(a.entries == ref.entries);
  const auto a0 = reorder(a, cli::whitehead_row_order(), cli::whitehead_col_order());
  CHECK(a0.entries == cli::whitehead_reference_permuted().entries);
  CHECK(a0.row_labels == std::vector<std::string>{"w2", "w4", "w6", "w5", "w1", "w3"});
  CHECK(a0.col_labels == std::vector<std::string>{"t2", "t4", "t3", "t5", "t6", "t1"});
  CHECK(column_reduce_leading(a0, 4).entries == cli::whitehead_reference_reduced().entries);
  for (const auto& l : cli::whitehead_matrix_checks()) {
    CAPTURE(l.name);
    CHECK(l.pass);
  }
}

TEST_CASE("kernel colorings equal backtracking colorings") {
  for (const auto& name : builtin_link_names()) {
    const auto d = builtin_link(name);
    for (const auto& r : {FiniteRing::w(2, 3), FiniteRing::u(3, 2), FiniteRing::make(5, IntLaurent::parse("1+T"))}) {
      CAPTURE(name);
      CHECK(kernel_colorings(d, r) == enumerate_colorings(d, alexander_quandle(r)));
    }
  }
}

TEST_CASE("matrix path equals the Boltzmann path") {
  for (const char* name : {"whitehead", "borromean"}) {
    const auto d = builtin_link(name);
    for (auto fam : {SectionFamily::W, SectionFamily::U}) {
      const auto ring = family_ring(fam, 2, 3);
      const auto phi = cocycle_from_section(fam, 2, 3);
      for (const auto& c : kernel_colorings(d, ring)) CHECK(matrix_contribution(d, c, fam, 2, 3) == contribution(d, c, phi));
    }
  }
}

TEST_CASE("matrix contribution rejects non-colorings") {
  const auto d = builtin_link("whitehead");
  Coloring c(6, 0);
  c[1] = 1;
  CHECK_THROWS_AS(matrix_contribution(d, c, SectionFamily::W, 2, 3), Error);
}

TEST_CASE("Conway polynomials") {
  CHECK(conway_min_degree(builtin_link("unknot")).nabla == std::vector<std::int64_t>{1});
  CHECK(conway_min_degree(builtin_link("trefoil")).nabla == std::vector<std::int64_t>{1, 0, 1});
  CHECK(conway_min_degree(builtin_link("figure8")).nabla == std::vector<std::int64_t>{1, 0, -1});
  const auto h = conway_min_degree(builtin_link("hopf"));
  CHECK(h.min_degree == 1);
  const auto w = conway_min_degree(builtin_link("whitehead"));
  CHECK(w.min_degree == 3);
  CHECK(w.f == IntLaurent::parse("-(T-1)^3"));
  CHECK(conway_min_degree(builtin_link("borromean")).min_degree == 4);
  // deleting a different row and column gives the same polynomial
  for (std::size_t j = 1; j < 6; ++j) CHECK(conway_min_degree(builtin_link("whitehead"), j).nabla == w.nabla);
  // Bareiss and cofactor expansion agree on the deleted matrices
  for (const char* name : {"whitehead", "borromean", "figure8"}) {
    const auto a = alexander_matrix(builtin_link(name)).matrix.minor(0, 0);
    CHECK(laurent_det(a) == laurent_det_cofactor(a));
  }
}

TEST_CASE("elementary divisors and the Inoue count") {
  const auto tref = builtin_link("trefoil");
  const auto e = elementary_divisors(tref, 3);
  REQUIRE(e.size() == 2);
  // Delta = (1+T)^2 mod 3 with a cyclic module
  CHECK(e[0] == PolyFp::from_laurent(IntLaurent::parse("(1+T)^2"), 3).monic());
  CHECK(e[1].degree() == 0);
  CHECK(inoue_count(tref, 3, {IntLaurent::parse("1+T")}) == 9u);
  CHECK(inoue_count(tref, 2, {IntLaurent::parse("1+T+T^2")}) == 16u);
  CHECK_FALSE(inoue_count(tref, 3, {IntLaurent(0)}));
  CHECK_THROWS_AS(inoue_count(builtin_link("hopf"), 3, {IntLaurent::parse("1+T")}), Error);
}
