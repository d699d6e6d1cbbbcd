#include "qf/algebra/matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>

#include "qf/error.hpp"

namespace qf {

LaurentMatrix::LaurentMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {
  for (std::size_t i = 0; i < r; ++i) row_labels.push_back("r" + std::to_string(i + 1));
  for (std::size_t j = 0; j < c; ++j) col_labels.push_back("c" + std::to_string(j + 1));
}

LaurentMatrix LaurentMatrix::minor(std::size_t i, std::size_t j) const {
  LaurentMatrix out(rows - 1, cols - 1);
  std::size_t oi = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    if (r == i) continue;
    std::size_t oj = 0;
    for (std::size_t c = 0; c < cols; ++c) {
      if (c == j) continue;
      out.at(oi, oj++) = at(r, c);
    }
    out.row_labels[oi] = row_labels[r];
    ++oi;
  }
  std::size_t oj = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    if (c != j) out.col_labels[oj++] = col_labels[c];
  }
  return out;
}

RingMatrix::RingMatrix(FiniteRing r, std::size_t nr, std::size_t nc)
    : ring(std::move(r)), rows(nr), cols(nc), entries(nr * nc, 0) {
  for (std::size_t i = 0; i < nr; ++i) row_labels.push_back("r" + std::to_string(i + 1));
  for (std::size_t j = 0; j < nc; ++j) col_labels.push_back("c" + std::to_string(j + 1));
}

RingMatrix specialize(const LaurentMatrix& m, const FiniteRing& ring) {
  RingMatrix out(ring, m.rows, m.cols);
  for (std::size_t k = 0; k < m.entries.size(); ++k) out.entries[k] = ring.eval(m.entries[k]).index();
  out.row_labels = m.row_labels;
  out.col_labels = m.col_labels;
  return out;
}

std::vector<FiniteRing::Index> left_multiply(const std::vector<FiniteRing::Index>& v, const RingMatrix& m) {
  if (v.size() != m.rows) fail(ErrorCode::InvalidArgument, "vector length does not match matrix rows");
  std::vector<FiniteRing::Index> out(m.cols, 0);
  for (std::size_t j = 0; j < m.cols; ++j) {
    FiniteRing::Index acc = 0;
    for (std::size_t i = 0; i < m.rows; ++i) acc = m.ring.add(acc, m.ring.mul(v[i], m.at(i, j)));
    out[j] = acc;
  }
  return out;
}

std::uint64_t enumeration_cap() {
  if (const char* env = std::getenv("QF_MAX_ENUM")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 1'000'000;
}

namespace {

using Index = FiniteRing::Index;

// Inverse of u when it is cheap to find: +-T^k for small |k|, else a direct
// search in rings of modest size.
std::optional<Index> find_inverse(const FiniteRing& r, Index u) {
  const Index one = r.one().index();
  if (u == 0) return std::nullopt;
  Index tk = one;
  Index tinvk = one;
  for (int k = 0; k <= 8; ++k) {
    if (u == tk) return tinvk;
    if (u == r.neg(tk)) return r.neg(tinvk);
    tk = r.mul(tk, r.t().index());
    tinvk = r.mul(tinvk, r.t_inverse().index());
  }
  tk = r.t_inverse().index();
  tinvk = r.t().index();
  for (int k = 1; k <= 8; ++k) {
    if (u == tk) return tinvk;
    if (u == r.neg(tk)) return r.neg(tinvk);
    tk = r.mul(tk, r.t_inverse().index());
    tinvk = r.mul(tinvk, r.t().index());
  }
  if (r.size() <= 4096) {
    for (Index x = 0; x < r.size(); ++x) {
      if (r.mul(u, x) == one) return x;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::vector<Index>> kernel(const RingMatrix& m, std::uint64_t cap) {
  if (cap == 0) cap = enumeration_cap();
  const FiniteRing& r = m.ring;
  const std::size_t n = m.rows;
  // One equation per column: sum_i v_i M_ij = 0, stored as coefficient rows.
  std::vector<std::vector<Index>> eqs(m.cols, std::vector<Index>(n, 0));
  for (std::size_t j = 0; j < m.cols; ++j) {
    for (std::size_t i = 0; i < n; ++i) eqs[j][i] = m.at(i, j);
  }
  // pivot_of[var] = equation row that expresses var, after full reduction.
  std::vector<int> pivot_of(n, -1);
  std::vector<bool> used(eqs.size(), false);
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    for (std::size_t var = 0; var < n; ++var) {
      if (pivot_of[var] >= 0 || eqs[e][var] == 0) continue;
      const auto inv = find_inverse(r, eqs[e][var]);
      if (!inv) continue;
      // Normalize so the pivot coefficient is 1.
      for (auto& c : eqs[e]) c = r.mul(c, *inv);
      for (std::size_t f = 0; f < eqs.size(); ++f) {
        if (f == e || eqs[f][var] == 0) continue;
        const Index factor = eqs[f][var];
        for (std::size_t i = 0; i < n; ++i) eqs[f][i] = r.sub(eqs[f][i], r.mul(factor, eqs[e][i]));
      }
      pivot_of[var] = static_cast<int>(e);
      used[e] = true;
      break;
    }
  }
  std::vector<std::size_t> free_vars;
  for (std::size_t var = 0; var < n; ++var) {
    if (pivot_of[var] < 0) free_vars.push_back(var);
  }
  std::vector<std::size_t> residual;
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    if (used[e]) continue;
    if (std::any_of(eqs[e].begin(), eqs[e].end(), [](Index c) { return c != 0; })) residual.push_back(e);
  }
  // Candidate count |ring|^free, capped.
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < free_vars.size(); ++k) {
    if (total > cap / r.size() + 1) {
      total = cap + 1;
      break;
    }
    total *= r.size();
  }
  if (total > cap) {
    fail(ErrorCode::SizeLimitExceeded, "kernel enumeration needs " + std::to_string(r.size()) + "^" +
                                           std::to_string(free_vars.size()) + " candidates (cap " +
                                           std::to_string(cap) + ")");
  }

  std::vector<std::vector<Index>> out;
  std::vector<Index> v(n, 0);
  std::vector<Index> digits(free_vars.size(), 0);
  for (std::uint64_t c = 0; c < total; ++c) {
    for (std::size_t k = 0; k < free_vars.size(); ++k) v[free_vars[k]] = digits[k];
    for (std::size_t var = 0; var < n; ++var) {
      if (pivot_of[var] < 0) continue;
      // var + sum_{free f} coeff_f * v_f = 0.
      const auto& eq = eqs[static_cast<std::size_t>(pivot_of[var])];
      Index acc = 0;
      for (auto f : free_vars) acc = r.add(acc, r.mul(eq[f], v[f]));
      v[var] = r.neg(acc);
    }
    bool ok = true;
    for (auto e : residual) {
      Index acc = 0;
      for (std::size_t i = 0; i < n; ++i) acc = r.add(acc, r.mul(eqs[e][i], v[i]));
      if (acc != 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(v);
    for (std::size_t k = free_vars.size(); k-- > 0;) {
      if (++digits[k] < r.size()) break;
      digits[k] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntLaurent laurent_det(const LaurentMatrix& m) {
  if (m.rows != m.cols) fail(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows;
  if (n == 0) return IntLaurent(1);
  std::vector<IntLaurent> a = m.entries;
  auto at = [&](std::size_t i, std::size_t j) -> IntLaurent& { return a[i * n + j]; };
  IntLaurent prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && at(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return {};
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = IntLaurent::exact_divide(at(k, k) * at(i, j) - at(i, k) * at(k, j), prev);
      }
      at(i, k) = IntLaurent();
    }
    prev = at(k, k);
  }
  IntLaurent d = at(n - 1, n - 1);
  return negate ? -d : d;
}

IntLaurent laurent_det_cofactor(const LaurentMatrix& m) {
  if (m.rows != m.cols) fail(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows;
  if (n == 0) return IntLaurent(1);
  if (n == 1) return m.at(0, 0);
  IntLaurent total;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    IntLaurent term = m.at(0, j) * laurent_det_cofactor(m.minor(0, j));
    if (j % 2 == 1) term = -term;
    total += term;
  }
  return total;
}

LaurentMatrix reorder(const LaurentMatrix& m, const std::vector<std::size_t>& row_order,
                      const std::vector<std::size_t>& col_order) {
  if (row_order.size() != m.rows || col_order.size() != m.cols) {
    fail(ErrorCode::InvalidArgument, "reorder permutation has the wrong length");
  }
  LaurentMatrix out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) out.at(i, j) = m.at(row_order[i], col_order[j]);
    out.row_labels[i] = m.row_labels[row_order[i]];
  }
  for (std::size_t j = 0; j < m.cols; ++j) out.col_labels[j] = m.col_labels[col_order[j]];
  return out;
}

LaurentMatrix column_reduce_leading(const LaurentMatrix& m, std::size_t k) {
  LaurentMatrix out = m;
  if (k > std::min(m.rows, m.cols)) fail(ErrorCode::InvalidArgument, "column reduction past the matrix size");
  for (std::size_t i = 0; i < k; ++i) {
    const IntLaurent pivot = out.at(i, i);
    if (!pivot.is_unit()) fail(ErrorCode::InvalidArgument, "column reduction pivot " + pivot.to_string() + " is not a unit");
    for (std::size_t r = 0; r < out.rows; ++r) out.at(r, i) = IntLaurent::exact_divide(out.at(r, i), pivot);
    for (std::size_t c = 0; c < out.cols; ++c) {
      if (c == i || out.at(i, c).is_zero()) continue;
      const IntLaurent factor = out.at(i, c);
      for (std::size_t r = 0; r < out.rows; ++r) out.at(r, c) -= factor * out.at(r, i);
    }
  }
  return out;
}

}  // namespace qf
