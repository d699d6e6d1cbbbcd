#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qf/error.hpp"
#include "qf/link/builtin.hpp"
#include "qf/link/parse.hpp"

using namespace qf;

static ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

TEST_CASE("builtin fixtures have the expected shape") {
  struct Shape {
    const char* name;
    std::size_t arcs, crossings, components;
  };
  for (const auto& s : {Shape{"unknot", 1, 0, 1}, Shape{"hopf", 2, 2, 2}, Shape{"trefoil", 3, 3, 1},
                        Shape{"trefoil-kink", 4, 4, 1}, Shape{"figure8", 4, 4, 1}, Shape{"whitehead", 6, 6, 2},
                        Shape{"borromean", 6, 6, 3}}) {
    CAPTURE(s.name);
    const auto d = builtin_link(s.name);
    CHECK(d.arc_count() == s.arcs);
    CHECK(d.crossing_count() == s.crossings);
    CHECK(d.components().size() == s.components);
  }
  CHECK(code_of([] { builtin_link("nope"); }) == ErrorCode::UnknownName);
}

TEST_CASE("canonical order: crossing i leaves through arc i") {
  for (const auto& name : builtin_link_names()) {
    const auto d = builtin_link(name);
    for (std::size_t i = 0; i < d.crossing_count(); ++i) CHECK(d.crossings()[i].out == i);
  }
  const auto w = builtin_link("whitehead");
  CHECK(w.arcs() == std::vector<std::string>{"w1", "w2", "w3", "w4", "w5", "w6"});
  CHECK(component_crossing_sets(w) == std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3, 4, 5}});
}

TEST_CASE("text and JSON round trips") {
  for (const auto& name : builtin_link_names()) {
    CAPTURE(name);
    const auto d = builtin_link(name);
    CHECK(parse_link(serialize_link(d)) == d);
    CHECK(link_from_json(link_to_json(d)) == d);
    CHECK(link_from_json(nlohmann::json::parse(link_to_json(d).dump())) == d);
  }
}

TEST_CASE("rebasing keeps the crossing structure") {
  const auto w = builtin_link("whitehead");
  const auto r = w.rebased({"w2", "w5"});
  CHECK(r.arcs().front() == "w2");
  CHECK(r.crossing_count() == w.crossing_count());
  CHECK(r.rebased({"w1", "w3"}) == w);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_link("name k\nX a sign=+ over=a in=a out=a\nX b sign=? over=a in=a out=a\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SignError);
    CHECK(e.witness() == "3");
  }
  try {
    parse_link("name k\nbogus line\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(e.witness() == "2");
  }
}

TEST_CASE("topology errors") {
  // arc b is never left
  CHECK(code_of([] {
          parse_link("X x sign=+ over=a in=a out=b\nC k base=a\n");
        }) == ErrorCode::TopologyError);
  // a normal that disagrees with the sign
  CHECK(code_of([] { parse_link("X x sign=+ over=a in=a out=a normal=out>in\nC k base=a\n"); }) ==
        ErrorCode::SignError);
  // no component covering the arcs
  CHECK(code_of([] { parse_link("X x sign=+ over=a in=a out=a\n"); }) == ErrorCode::TopologyError);
}

TEST_CASE("tangles") {
  const auto t = make_tangle(builtin_link("trefoil"), "b");
  CHECK(t.diagram.arcs()[t.axis_arc] == "b");
  CHECK(make_tangle(builtin_link("trefoil")).axis_arc == 0);
  CHECK(code_of([] { make_tangle(builtin_link("hopf")); }) == ErrorCode::NotAKnot);
}
