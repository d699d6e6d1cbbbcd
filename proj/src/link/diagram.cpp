#include "qf/link/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qf/error.hpp"

namespace qf {

LinkDiagram LinkDiagram::build(std::string name, const std::vector<CrossingSpec>& crossings,
                               const std::vector<ComponentSpec>& components) {
  // Collect every arc label mentioned anywhere.
  std::set<std::string> labels;
  for (const auto& c : crossings) {
    if (c.sign != 1 && c.sign != -1) fail(ErrorCode::SignError, "crossing sign must be +1 or -1", c.id);
    labels.insert(c.over);
    labels.insert(c.in);
    labels.insert(c.out);
  }
  {
    std::set<std::string> ids;
    for (const auto& c : crossings) {
      if (!ids.insert(c.id).second) fail(ErrorCode::TopologyError, "duplicate crossing id", c.id);
    }
  }
  for (const auto& comp : components) {
    labels.insert(comp.base);
    for (const auto& a : comp.arcs) labels.insert(a);
  }

  std::map<std::string, std::size_t> in_of, out_of;  // arc -> crossing index in input
  for (std::size_t k = 0; k < crossings.size(); ++k) {
    if (!in_of.emplace(crossings[k].in, k).second) {
      fail(ErrorCode::TopologyError, "arc is the incoming under-arc of more than one crossing", crossings[k].in);
    }
    if (!out_of.emplace(crossings[k].out, k).second) {
      fail(ErrorCode::TopologyError, "arc is the outgoing under-arc of more than one crossing", crossings[k].out);
    }
  }
  for (const auto& a : labels) {
    if (in_of.count(a) != out_of.count(a)) {
      fail(ErrorCode::TopologyError, "arc is not both entered and left by under-crossings", a);
    }
  }

  LinkDiagram d;
  d.name_ = std::move(name);
  std::map<std::string, std::size_t> index;
  std::set<std::string> seen;
  std::vector<std::size_t> crossing_order;  // input crossing index per canonical crossing slot
  for (const auto& comp : components) {
    if (comp.base.empty()) fail(ErrorCode::TopologyError, "component without a base arc", comp.name);
    Component out{comp.name, {}};
    std::string cur = comp.base;
    std::vector<std::string> walked;
    if (!in_of.count(cur)) {
      walked.push_back(cur);  // free loop
    } else {
      do {
        if (!seen.insert(cur).second) fail(ErrorCode::TopologyError, "components overlap", cur);
        walked.push_back(cur);
        cur = crossings[in_of.at(cur)].out;
      } while (cur != comp.base);
      for (auto& a : walked) seen.erase(a);
    }
    if (!comp.arcs.empty()) {
      std::vector<std::string> a = comp.arcs, b = walked;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) fail(ErrorCode::TopologyError, "component arc list disagrees with the crossing walk", comp.name);
    }
    for (const auto& a : walked) {
      if (!seen.insert(a).second) fail(ErrorCode::TopologyError, "components overlap", a);
      index[a] = d.arcs_.size();
      out.arcs.push_back(d.arcs_.size());
      d.arcs_.push_back(a);
      d.arc_component_.push_back(d.components_.size());
    }
    d.components_.push_back(std::move(out));
  }
  for (const auto& a : labels) {
    if (!index.count(a)) fail(ErrorCode::TopologyError, "arc belongs to no component", a);
  }
  d.out_crossing_.assign(d.arcs_.size(), npos);
  for (std::size_t i = 0; i < d.arcs_.size(); ++i) {
    auto it = out_of.find(d.arcs_[i]);
    if (it == out_of.end()) continue;
    const auto& c = crossings[it->second];
    d.out_crossing_[i] = d.crossings_.size();
    d.crossings_.push_back({c.id, c.sign, index.at(c.over), index.at(c.in), index.at(c.out)});
  }
  return d;
}

std::size_t LinkDiagram::arc_index(std::string_view label) const {
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    if (arcs_[i] == label) return i;
  }
  fail(ErrorCode::UnknownName, "no arc labelled " + std::string(label), std::string(label));
}

std::vector<CrossingSpec> LinkDiagram::crossing_specs() const {
  std::vector<CrossingSpec> out;
  for (const auto& c : crossings_) out.push_back({c.id, c.sign, arcs_[c.over], arcs_[c.in], arcs_[c.out]});
  return out;
}

std::vector<ComponentSpec> LinkDiagram::component_specs() const {
  std::vector<ComponentSpec> out;
  for (const auto& comp : components_) {
    ComponentSpec s{comp.name, arcs_[comp.base()], {}};
    for (auto a : comp.arcs) s.arcs.push_back(arcs_[a]);
    out.push_back(std::move(s));
  }
  return out;
}

LinkDiagram LinkDiagram::rebased(const std::vector<std::string>& base_labels) const {
  if (base_labels.size() != components_.size()) fail(ErrorCode::InvalidArgument, "one base arc per component expected");
  auto comps = component_specs();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::size_t a = arc_index(base_labels[i]);
    if (arc_component_[a] != i) fail(ErrorCode::InvalidArgument, "base arc is on another component", base_labels[i]);
    comps[i].base = base_labels[i];
  }
  return build(name_, crossing_specs(), comps);
}

std::vector<std::vector<std::size_t>> component_crossing_sets(const LinkDiagram& d) {
  std::vector<std::vector<std::size_t>> sets(d.components().size());
  for (std::size_t k = 0; k < d.crossing_count(); ++k) sets[d.component_of_arc(d.crossings()[k].out)].push_back(k);
  return sets;
}

Tangle make_tangle(const LinkDiagram& knot, std::string_view axis_label) {
  if (!knot.is_knot()) fail(ErrorCode::NotAKnot, "a 1-tangle needs a one-component diagram");
  const std::size_t axis = axis_label.empty() ? knot.components()[0].base() : knot.arc_index(axis_label);
  return {knot, axis};
}

}  // namespace qf
