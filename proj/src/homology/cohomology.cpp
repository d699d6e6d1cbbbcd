#include "qf/homology/cohomology.hpp"

#include <unordered_map>

#include "qf/algebra/fp_linalg.hpp"
#include "qf/algebra/matrix.hpp"
#include "qf/algebra/modular.hpp"
#include "qf/error.hpp"

namespace qf {

namespace {

std::string key(const Tuple& t, const FiniteQuandle& x) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + x.label(t[i]);
  return s;
}

bool in_theory(const Tuple& t, Theory theory) {
  switch (theory) {
    case Theory::Rack: return true;
    case Theory::Degenerate: return is_degenerate(t);
    case Theory::Quandle: return !is_degenerate(t);
  }
  return true;
}

// Basis tuples of C^n in the theory, lexicographic; position lookup by flat index.
struct Basis {
  std::vector<std::size_t> flat;
  std::unordered_map<std::size_t, std::size_t> pos;
};

Basis basis(std::size_t n, std::size_t size, Theory theory) {
  Basis b;
  const Cochain shape(n, 2, size);
  for (std::size_t k = 0; k < shape.tuple_count(); ++k) {
    if (!in_theory(shape.tuple(k), theory)) continue;
    b.pos[k] = b.flat.size();
    b.flat.push_back(k);
  }
  return b;
}

// delta^n over F_p restricted to the theory. Faces outside the theory are
// dropped: for Quandle they carry value 0, for Degenerate they cancel in pairs.
FpMatrix coboundary_matrix(std::size_t n, const FiniteQuandle& x, std::uint32_t p, Theory theory,
                           std::size_t max_entries) {
  const Basis cols = basis(n, x.size(), theory);
  const Basis rows = basis(n + 1, x.size(), theory);
  if (rows.flat.size() * std::max<std::size_t>(cols.flat.size(), 1) > max_entries) {
    fail(ErrorCode::SizeLimitExceeded, "coboundary matrix too large");
  }
  FpMatrix m(p, rows.flat.size(), cols.flat.size());
  const Cochain src(n, p, x.size());
  const Cochain dst(n + 1, p, x.size());
  for (std::size_t r = 0; r < rows.flat.size(); ++r) {
    const Tuple t = dst.tuple(rows.flat[r]);
    // Evaluate delta on each basis cochain through the boundary chain.
    const Chain d = boundary(x, generator(t));
    for (const auto& [face, c] : d.terms) {
      auto it = cols.pos.find(src.index(face));
      if (it == cols.pos.end()) continue;
      m.at(r, it->second) = static_cast<std::uint32_t>((m.at(r, it->second) + mod_reduce(c, p)) % p);
    }
  }
  return m;
}

}  // namespace

CheckResult is_2cocycle(const Cochain& phi, const FiniteQuandle& x) {
  if (phi.degree() != 2 || phi.base_size() != x.size()) fail(ErrorCode::InvalidArgument, "expected a 2-cochain on X");
  const std::uint64_t q = phi.modulus();
  for (FiniteQuandle::Element a = 0; a < x.size(); ++a) {
    if (phi({a, a}) != 0) return {false, key({a, a}, x)};
  }
  for (FiniteQuandle::Element a = 0; a < x.size(); ++a) {
    for (FiniteQuandle::Element b = 0; b < x.size(); ++b) {
      for (FiniteQuandle::Element c = 0; c < x.size(); ++c) {
        const std::uint64_t lhs = (phi({a, c}) + phi({x.op(a, c), x.op(b, c)})) % q;
        const std::uint64_t rhs = (phi({x.op(a, b), c}) + phi({a, b})) % q;
        if (lhs != rhs) return {false, key({a, b, c}, x)};
      }
    }
  }
  return {};
}

CheckResult is_3cocycle(const Cochain& theta, const FiniteQuandle& x) {
  if (theta.degree() != 3 || theta.base_size() != x.size()) fail(ErrorCode::InvalidArgument, "expected a 3-cochain on X");
  const std::uint64_t q = theta.modulus();
  const auto n = static_cast<FiniteQuandle::Element>(x.size());
  for (FiniteQuandle::Element a = 0; a < n; ++a) {
    for (FiniteQuandle::Element b = 0; b < n; ++b) {
      if (theta({a, a, b}) != 0) return {false, key({a, a, b}, x)};
      if (theta({a, b, b}) != 0) return {false, key({a, b, b}, x)};
    }
  }
  for (FiniteQuandle::Element p = 0; p < n; ++p) {
    for (FiniteQuandle::Element r = 0; r < n; ++r) {
      for (FiniteQuandle::Element s = 0; s < n; ++s) {
        for (FiniteQuandle::Element t = 0; t < n; ++t) {
          // p, q, r, s of the identity are p, r, s, t here.
          const std::uint64_t lhs =
              (theta({p, s, t}) + theta({x.op(p, s), x.op(r, s), t}) + theta({p, r, s})) % q;
          const std::uint64_t rhs =
              (theta({x.op(p, r), s, t}) + theta({p, r, t}) + theta({x.op(p, t), x.op(r, t), x.op(s, t)})) % q;
          if (lhs != rhs) return {false, key({p, r, s, t}, x)};
        }
      }
    }
  }
  return {};
}

std::size_t cohomology_dimension(std::size_t n, const FiniteQuandle& x, std::uint32_t p, Theory theory,
                                 std::size_t max_entries) {
  if (!is_prime(p)) fail(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  if (n == 0) fail(ErrorCode::InvalidArgument, "cohomology degree must be at least 1");
  if (max_entries == 0) max_entries = 50'000'000;
  const FpMatrix dn = coboundary_matrix(n, x, p, theory, max_entries);
  const std::size_t dim_cn = dn.cols;
  const std::size_t rank_n = rank(dn);
  const std::size_t rank_prev = n >= 2 ? rank(coboundary_matrix(n - 1, x, p, theory, max_entries)) : 0;
  return dim_cn - rank_n - rank_prev;
}

std::optional<Cochain> cohomology_generator(std::size_t n, const FiniteQuandle& x, std::uint32_t p,
                                            std::size_t max_entries) {
  if (!is_prime(p)) fail(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  if (n == 0) fail(ErrorCode::InvalidArgument, "cohomology degree must be at least 1");
  if (max_entries == 0) max_entries = 50'000'000;
  const FpMatrix dn = coboundary_matrix(n, x, p, Theory::Quandle, max_entries);
  const Basis cols = basis(n, x.size(), Theory::Quandle);
  const auto cycles = nullspace(dn);
  std::optional<FpMatrix> prev;
  if (n >= 2) prev = coboundary_matrix(n - 1, x, p, Theory::Quandle, max_entries);
  for (const auto& z : cycles) {
    if (prev && solvable(*prev, z)) continue;
    Cochain c(n, p, x.size());
    for (std::size_t k = 0; k < z.size(); ++k) c.set_flat(cols.flat[k], z[k]);
    return c;
  }
  return std::nullopt;
}

bool is_coboundary(const Cochain& c, const FiniteQuandle& x) {
  const std::size_t n = c.degree();
  if (n == 0) fail(ErrorCode::InvalidArgument, "0-cochains are never coboundaries");
  if (n == 1) {
    for (std::size_t k = 0; k < c.tuple_count(); ++k) {
      if (c.at(k) != 0) return false;
    }
    return true;
  }
  const std::uint64_t q = c.modulus();
  if (q == 1) return true;
  if (is_prime(q)) {
    const FpMatrix d = coboundary_matrix(n - 1, x, static_cast<std::uint32_t>(q), Theory::Quandle, 50'000'000);
    const Basis rows = basis(n, x.size(), Theory::Quandle);
    for (std::size_t k = 0; k < c.tuple_count(); ++k) {
      if (c.at(k) != 0 && !rows.pos.count(k)) return false;  // quandle coboundaries vanish on degenerate tuples
    }
    std::vector<std::uint32_t> b;
    for (auto k : rows.flat) b.push_back(static_cast<std::uint32_t>(c.at(k)));
    return solvable(d, b);
  }
  // Composite modulus: try every quandle (n-1)-cochain.
  const Basis cols = basis(n - 1, x.size(), Theory::Quandle);
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < cols.flat.size(); ++k) {
    if (total > enumeration_cap()) break;
    total *= q;
  }
  if (total > enumeration_cap()) fail(ErrorCode::SizeLimitExceeded, "too many candidate cochains for a composite modulus");
  Cochain f(n - 1, q, x.size());
  std::vector<std::uint64_t> digits(cols.flat.size(), 0);
  for (std::uint64_t it = 0; it < total; ++it) {
    for (std::size_t k = 0; k < digits.size(); ++k) f.set_flat(cols.flat[k], static_cast<std::int64_t>(digits[k]));
    if (coboundary(x, f) == c) return true;
    for (std::size_t k = 0; k < digits.size(); ++k) {
      if (++digits[k] < q) break;
      digits[k] = 0;
    }
  }
  return false;
}

}  // namespace qf
