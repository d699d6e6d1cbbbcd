#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qf/algebra/matrix.hpp"

namespace qf::cli {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// whitehead-vector, borromean-vector, twist-spin, whitehead-matrix or
/// conway-bound; UnknownExample otherwise.
std::vector<CheckLine> reproduce(std::string_view id, unsigned threads = 1);
std::vector<std::string> reproduce_ids();

/// Reference Whitehead matrices: as printed, after the row/column
/// permutation below, and after reducing the four leading columns.
LaurentMatrix whitehead_reference_matrix();
LaurentMatrix whitehead_reference_permuted();
LaurentMatrix whitehead_reference_reduced();
const std::vector<std::size_t>& whitehead_row_order();
const std::vector<std::size_t>& whitehead_col_order();
std::vector<CheckLine> whitehead_matrix_checks();

}  // namespace qf::cli
