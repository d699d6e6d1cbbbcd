#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qf/link/diagram.hpp"

namespace qf {

/// unknot, hopf, trefoil, trefoil-kink, figure8, whitehead, borromean.
LinkDiagram builtin_link(std::string_view name);
std::vector<std::string> builtin_link_names();

}  // namespace qf
