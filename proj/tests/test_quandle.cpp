#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qf/algebra/ring.hpp"
#include "qf/error.hpp"
#include "qf/extensions/wreath.hpp"
#include "qf/quandle/io.hpp"
#include "qf/quandle/quandle.hpp"

using namespace qf;

// Naive axiom check used as the oracle for validate_quandle.
static bool naive_quandle(const FiniteQuandle& x) {
  const auto n = static_cast<FiniteQuandle::Element>(x.size());
  for (FiniteQuandle::Element a = 0; a < n; ++a) {
    if (x.op(a, a) != a) return false;
    for (FiniteQuandle::Element b = 0; b < n; ++b) {
      if (x.op(x.inv(a, b), b) != a || x.inv(x.op(a, b), b) != a) return false;
      for (FiniteQuandle::Element c = 0; c < n; ++c)
        if (x.op(x.op(a, b), c) != x.op(x.op(a, c), x.op(b, c))) return false;
    }
  }
  return true;
}

static ErrorCode code_of(std::vector<std::string> labels, std::vector<FiniteQuandle::Element> op, std::string* w) {
  try {
    validate_quandle(std::move(labels), std::move(op));
  } catch (const Error& e) {
    *w = e.witness();
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

TEST_CASE("constructed quandles satisfy the axioms") {
  for (std::size_t n = 1; n <= 9; ++n) CHECK(naive_quandle(dihedral(n)));
  CHECK(naive_quandle(trivial_quandle(4)));
  CHECK(naive_quandle(alexander_quandle(FiniteRing::w(2, 3))));
  CHECK(naive_quandle(alexander_quandle(FiniteRing::u(3, 2))));
  CHECK(naive_quandle(conjugation_quandle(qs4_cycles())));
  CHECK(naive_quandle(conjugation_quandle(qs4_cycles(), 2)));
  CHECK(naive_quandle(wreath_dihedral(3, 2).quandle));
  CHECK(naive_quandle(wreath_qs4(2).quandle));
}

TEST_CASE("axiom violations name a witness") {
  std::string w;
  // 0*0 = 1
  CHECK(code_of({"a", "b"}, {1, 1, 0, 1}, &w) == ErrorCode::AxiomIViolation);
  CHECK(w == "a");
  // column b not a bijection
  CHECK(code_of({"a", "b", "c"}, {0, 0, 0, 1, 1, 0, 2, 2, 2}, &w) == ErrorCode::AxiomIIViolation);
  // R_3 with one pair of entries swapped is a rack-free mess
  auto op = dihedral(4).table();
  std::vector<std::string> labels{"0", "1", "2", "3"};
  op[0 * 4 + 1] = 3;
  op[0 * 4 + 3] = 2;
  const auto c = code_of(labels, op, &w);
  CHECK((c == ErrorCode::AxiomIIViolation || c == ErrorCode::AxiomIIIViolation));
  CHECK(code_of({"a"}, {0, 0}, &w) == ErrorCode::InvalidArgument);
}

TEST_CASE("dihedral operation") {
  const auto r5 = dihedral(5);
  CHECK(r5.op(1, 3) == 0);
  CHECK(r5.inv(1, 3) == 0);
  CHECK(r5.label(4) == "4");
}

TEST_CASE("permutations") {
  const auto p = parse_cycles("(123)", 4);
  const auto q = parse_cycles("(12)", 4);
  CHECK(cycle_string(compose(p, q)) == "(13)");
  CHECK(cycle_string(compose(p, inverse(p))) == "()");
  CHECK(cycle_string(parse_cycles("(243)", 4)) == "(243)");
  CHECK_THROWS_AS(conjugation_quandle({parse_cycles("(12)", 3), parse_cycles("(13)", 3)}), Error);
}

TEST_CASE("homomorphisms and isomorphism search") {
  const auto r3 = dihedral(3);
  const auto qs = conjugation_quandle(qs4_cycles());
  CHECK(make_hom(r3, r3, {0, 2, 1}).map.size() == 3);
  CHECK_THROWS_AS(make_hom(r3, r3, {0, 0, 1}), Error);
  CHECK_FALSE(find_isomorphism(r3, trivial_quandle(3)));
  const auto a = alexander_quandle(FiniteRing::make(2, IntLaurent::parse("1+T+T^2")));
  const auto iso = find_isomorphism(a, qs);
  REQUIRE(iso);
  CHECK_NOTHROW(make_hom(a, qs, *iso));
  // R_3 is Z_3[T]/(T+1)
  CHECK(find_isomorphism(r3, alexander_quandle(FiniteRing::make(3, IntLaurent::parse("1+T")))));
}

TEST_CASE("CSV and JSON round trips") {
  for (const auto& x : {dihedral(5), alexander_quandle(FiniteRing::w(2, 2)), conjugation_quandle(qs4_cycles())}) {
    CHECK(quandle_from_csv(quandle_to_csv(x)) == x);
    CHECK(quandle_from_json(nlohmann::json::parse(quandle_to_json(x).dump())) == x);
  }
}
