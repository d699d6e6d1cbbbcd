#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qf {

/// Element sum_n c_n t^n of Z[Z_q] with non-negative multiplicities.
class GroupRingValue {
 public:
  explicit GroupRingValue(std::uint64_t q);

  /// c_0 = count, everything else zero.
  static GroupRingValue constant(std::uint64_t q, std::uint64_t count);

  std::uint64_t order() const { return q_; }
  std::uint64_t coeff(std::uint64_t exponent) const { return c_[exponent % q_]; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  std::uint64_t total() const;

  /// Adds `count` copies of t^exponent (exponent reduced mod q).
  void add_term(std::int64_t exponent, std::uint64_t count = 1);

  GroupRingValue& operator+=(const GroupRingValue& other);
  friend GroupRingValue operator+(GroupRingValue a, const GroupRingValue& b) { return a += b; }
  friend GroupRingValue operator*(const GroupRingValue& a, const GroupRingValue& b);
  friend bool operator==(const GroupRingValue& a, const GroupRingValue& b) = default;

  /// Ascending exponents: "32 + 32t", "9 + 2t^2"; "0" when empty.
  std::string to_string() const;

 private:
  std::uint64_t q_;
  std::vector<std::uint64_t> c_;
};

/// "(32 + 32t, 32 + 32t)".
std::string to_string(const std::vector<GroupRingValue>& v);

}  // namespace qf
