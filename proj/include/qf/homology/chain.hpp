#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "qf/quandle/quandle.hpp"

namespace qf {

using Tuple = std::vector<FiniteQuandle::Element>;

/// x_i = x_{i+1} for some i.
bool is_degenerate(const Tuple& t);

/// Finitely supported integer combination of n-tuples; zero terms are dropped.
struct Chain {
  std::size_t degree = 0;
  std::map<Tuple, std::int64_t> terms;

  void add(const Tuple& t, std::int64_t c);
  bool is_zero() const { return terms.empty(); }
  /// Splits off the terms on degenerate tuples (the C^D part).
  Chain degenerate_part() const;
  friend bool operator==(const Chain&, const Chain&) = default;
};

Chain generator(const Tuple& t);

/// d_n(x_1..x_n) = sum_{i=2..n} (-1)^i [(x_1..^x_i..x_n) - (x_1*x_i, .., x_{i-1}*x_i, x_{i+1}, .., x_n)];
/// zero for n <= 1.
Chain boundary(const FiniteQuandle& x, const Chain& c);

/// Z_q-valued function on n-tuples of X, stored densely with the first
/// coordinate most significant.
class Cochain {
 public:
  Cochain(std::size_t degree, std::uint64_t modulus, std::size_t base_size);

  std::size_t degree() const { return degree_; }
  std::uint64_t modulus() const { return q_; }
  std::size_t base_size() const { return n_; }
  std::size_t tuple_count() const { return values_.size(); }

  std::uint64_t operator()(const Tuple& t) const { return values_[index(t)]; }
  std::uint64_t at(std::size_t flat) const { return values_[flat]; }
  void set(const Tuple& t, std::int64_t v);
  void set_flat(std::size_t flat, std::int64_t v);

  std::size_t index(const Tuple& t) const;
  Tuple tuple(std::size_t flat) const;

  /// The same table with every value negated / added pointwise.
  Cochain operator+(const Cochain& other) const;
  Cochain operator-() const;
  friend bool operator==(const Cochain&, const Cochain&) = default;

 private:
  std::size_t degree_;
  std::uint64_t q_;
  std::size_t n_;
  std::vector<std::uint64_t> values_;
};

/// (delta f)(x) = f(d x), a cochain of degree f.degree() + 1.
Cochain coboundary(const FiniteQuandle& x, const Cochain& f);

/// {"degree", "q", "labels", "values": {"l1|l2": v, ...}}; zero values omitted.
nlohmann::json cochain_to_json(const Cochain& c, const FiniteQuandle& x);
/// Missing tuples are zero.
Cochain cochain_from_json(const nlohmann::json& j, const FiniteQuandle& x);

}  // namespace qf
