#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "qf/quandle/quandle.hpp"

namespace qf {

/// CSV: header row of labels (first cell empty), then one row per element
/// with the label first and i*j labels after. Labels are double-quoted.
std::string quandle_to_csv(const FiniteQuandle& q);
FiniteQuandle quandle_from_csv(std::string_view text);

/// {"labels": [...], "op": [[...], ...]} with op entries as element indices.
nlohmann::json quandle_to_json(const FiniteQuandle& q);
FiniteQuandle quandle_from_json(const nlohmann::json& j);

/// JSON when the first non-blank byte is '{', CSV otherwise.
FiniteQuandle load_quandle_file(const std::string& path);

}  // namespace qf
