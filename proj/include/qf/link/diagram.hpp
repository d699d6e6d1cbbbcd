#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qf {

/// Signed crossing. `in` and `out` are the under-arcs entering and leaving
/// the crossing along the orientation. The coloring relation is
/// out = in * over when sign = +1 and in = out * over when sign = -1.
struct Crossing {
  std::string id;
  int sign = 1;
  std::size_t over = 0;
  std::size_t in = 0;
  std::size_t out = 0;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct Component {
  std::string name;
  /// Arcs in traversal order starting at the base arc.
  std::vector<std::size_t> arcs;

  std::size_t base() const { return arcs.front(); }
  friend bool operator==(const Component&, const Component&) = default;
};

/// Crossing as written by a user, with arc labels instead of indices.
struct CrossingSpec {
  std::string id;
  int sign = 1;
  std::string over;
  std::string in;
  std::string out;
};

struct ComponentSpec {
  std::string name;
  std::string base;
  /// Optional; when given it must list exactly the arcs reached by walking
  /// from the base arc.
  std::vector<std::string> arcs;
};

/// Oriented link diagram in canonical order: arcs run component by component
/// in traversal order from each base arc, and crossing i is the crossing whose
/// outgoing under-arc is arc i. A component with a single arc that never
/// passes under anything (a free loop) contributes an arc with no crossing,
/// so crossings().size() == arcs().size() - free loops.
class LinkDiagram {
 public:
  /// Validates and canonicalizes. Throws TopologyError when an arc is not the
  /// incoming and outgoing under-arc of exactly one crossing each (free loops
  /// excepted), when components overlap or miss arcs, or when labels repeat.
  static LinkDiagram build(std::string name, const std::vector<CrossingSpec>& crossings,
                           const std::vector<ComponentSpec>& components);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& arcs() const { return arcs_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<Component>& components() const { return components_; }

  std::size_t arc_count() const { return arcs_.size(); }
  std::size_t crossing_count() const { return crossings_.size(); }
  bool is_knot() const { return components_.size() == 1; }

  std::size_t component_of_arc(std::size_t arc) const { return arc_component_[arc]; }
  /// Index of the arc with this label; UnknownName if absent.
  std::size_t arc_index(std::string_view label) const;
  /// Crossing whose outgoing under-arc is `arc`, or npos for a free loop.
  std::size_t crossing_out_of(std::size_t arc) const { return out_crossing_[arc]; }

  /// Same diagram re-canonicalized from different base arcs (one label per
  /// component, in component order).
  LinkDiagram rebased(const std::vector<std::string>& base_labels) const;

  std::vector<CrossingSpec> crossing_specs() const;
  std::vector<ComponentSpec> component_specs() const;

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    return a.name_ == b.name_ && a.arcs_ == b.arcs_ && a.crossings_ == b.crossings_ && a.components_ == b.components_;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::string name_;
  std::vector<std::string> arcs_;
  std::vector<Crossing> crossings_;
  std::vector<Component> components_;
  std::vector<std::size_t> arc_component_;
  std::vector<std::size_t> out_crossing_;
};

/// T_i: crossings whose under-arcs lie on component i. Partitions the crossings.
std::vector<std::vector<std::size_t>> component_crossing_sets(const LinkDiagram& d);

/// Knot diagram viewed as a 1-tangle cut open along `axis_arc`; both open
/// ends lie on that arc, so the endpoints always share its color.
struct Tangle {
  LinkDiagram diagram;
  std::size_t axis_arc = 0;
};

/// NotAKnot for links; UnknownName for a bad label. Empty label picks the
/// base arc.
Tangle make_tangle(const LinkDiagram& knot, std::string_view axis_label = {});

}  // namespace qf
