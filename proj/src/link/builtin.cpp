#include "qf/link/builtin.hpp"

#include "qf/error.hpp"

namespace qf {

namespace {

// Whitehead: crossings t1..t6 and arcs w1..w6 so the Alexander matrix comes
// out exactly as the standard worked example; K1 = {w1, w2}, K2 = {w3..w6}.
LinkDiagram whitehead() {
  return LinkDiagram::build("whitehead",
                            {
                                {"t1", -1, "w6", "w2", "w1"},
                                {"t2", +1, "w3", "w1", "w2"},
                                {"t3", +1, "w4", "w6", "w3"},
                                {"t4", +1, "w2", "w3", "w4"},
                                {"t5", +1, "w6", "w4", "w5"},
                                {"t6", -1, "w2", "w5", "w6"},
                            },
                            {{"K1", "w1", {}}, {"K2", "w3", {}}});
}

// Borromean rings: y1, y2, y3 are the outer arcs. Outer crossings o_k are
// positive with in y_k, over y_{k+1}, out y_{k+3}; inner crossings i_k are
// negative and close each component back onto y_k.
LinkDiagram borromean() {
  return LinkDiagram::build("borromean",
                            {
                                {"o1", +1, "y2", "y1", "y4"},
                                {"o2", +1, "y3", "y2", "y5"},
                                {"o3", +1, "y1", "y3", "y6"},
                                {"i1", -1, "y5", "y4", "y1"},
                                {"i2", -1, "y6", "y5", "y2"},
                                {"i3", -1, "y4", "y6", "y3"},
                            },
                            {{"K1", "y1", {}}, {"K2", "y2", {}}, {"K3", "y3", {}}});
}

}  // namespace

LinkDiagram builtin_link(std::string_view name) {
  if (name == "unknot") return LinkDiagram::build("unknot", {}, {{"K1", "a", {}}});
  if (name == "hopf") {
    return LinkDiagram::build("hopf", {{"x1", +1, "h2", "h1", "h1"}, {"x2", +1, "h1", "h2", "h2"}},
                              {{"K1", "h1", {}}, {"K2", "h2", {}}});
  }
  if (name == "trefoil") {
    return LinkDiagram::build("trefoil", {{"t1", +1, "b", "c", "a"}, {"t2", +1, "c", "a", "b"}, {"t3", +1, "a", "b", "c"}},
                              {{"K1", "a", {}}});
  }
  if (name == "trefoil-kink") {
    // The trefoil above with a Reidemeister-I curl inserted on arc a.
    return LinkDiagram::build("trefoil-kink",
                              {{"t1", +1, "b", "c", "a"},
                               {"k", +1, "d", "a", "d"},
                               {"t2", +1, "c", "d", "b"},
                               {"t3", +1, "a", "b", "c"}},
                              {{"K1", "a", {}}});
  }
  if (name == "figure8") {
    return LinkDiagram::build("figure8",
                              {{"f1", +1, "a", "b", "c"},
                               {"f2", +1, "c", "d", "a"},
                               {"f3", -1, "b", "c", "d"},
                               {"f4", -1, "d", "a", "b"}},
                              {{"K1", "a", {}}});
  }
  if (name == "whitehead") return whitehead();
  if (name == "borromean") return borromean();
  fail(ErrorCode::UnknownName, "unknown link '" + std::string(name) + "'", std::string(name));
}

std::vector<std::string> builtin_link_names() {
  return {"unknot", "hopf", "trefoil", "trefoil-kink", "figure8", "whitehead", "borromean"};
}

}  // namespace qf
