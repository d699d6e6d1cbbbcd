#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "qf/link/diagram.hpp"

namespace qf {

/// Line format:
///   # comment
///   name <label>
///   X <id> sign=<+|-> over=<arc> in=<arc> out=<arc> [normal=in>out|out>in]
///   C <component> base=<arc> [arcs=<arc,...>]
/// ParseError carries the offending line number as witness.
LinkDiagram parse_link(std::string_view text);
std::string serialize_link(const LinkDiagram& d);

nlohmann::json link_to_json(const LinkDiagram& d);
LinkDiagram link_from_json(const nlohmann::json& j);

/// Reads a file in either format (JSON when the first non-blank byte is '{').
LinkDiagram load_link_file(const std::string& path);

}  // namespace qf
