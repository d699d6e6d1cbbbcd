#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qf {

/// Integer Laurent polynomial sum_k c_k T^k, kept trimmed: the first and last
/// stored coefficients are nonzero, so equality is structural.
class IntLaurent {
 public:
  IntLaurent() = default;
  IntLaurent(std::int64_t constant);  // NOLINT(google-explicit-constructor)
  IntLaurent(int low, std::vector<std::int64_t> coeffs);

  static IntLaurent monomial(std::int64_t c, int exponent);
  static IntLaurent t() { return monomial(1, 1); }
  static IntLaurent t_inverse() { return monomial(1, -1); }

  bool is_zero() const { return coeffs_.empty(); }
  int min_degree() const { return low_; }
  int max_degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int exponent) const;
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  /// True for ±T^k.
  bool is_unit() const;

  /// Same polynomial multiplied by T^shift.
  IntLaurent shifted(int shift) const;

  /// Divides by T^{min_degree} so the result is an ordinary polynomial with a
  /// nonzero constant term (zero stays zero).
  IntLaurent normalized() const { return shifted(-low_); }

  IntLaurent operator-() const;
  friend IntLaurent operator+(const IntLaurent& a, const IntLaurent& b);
  friend IntLaurent operator-(const IntLaurent& a, const IntLaurent& b);
  friend IntLaurent operator*(const IntLaurent& a, const IntLaurent& b);
  IntLaurent& operator+=(const IntLaurent& b) { return *this = *this + b; }
  IntLaurent& operator-=(const IntLaurent& b) { return *this = *this - b; }
  IntLaurent& operator*=(const IntLaurent& b) { return *this = *this * b; }
  friend bool operator==(const IntLaurent& a, const IntLaurent& b) = default;

  IntLaurent pow(int exponent) const;

  /// Exact quotient a / b in Z[T, T^-1]; throws InvalidArgument if b does not
  /// divide a.
  static IntLaurent exact_divide(const IntLaurent& a, const IntLaurent& b);

  /// Human-readable form, e.g. "1 - 3T + T^2" or "-T^-1".
  std::string to_string() const;

  /// Parses expressions in T with +, -, *, ^, parentheses and integer
  /// literals; implicit multiplication ("2T", "3(1-T)^2") is accepted.
  /// Negative exponents are accepted on T only.
  static IntLaurent parse(std::string_view text);

 private:
  void trim();

  int low_ = 0;
  std::vector<std::int64_t> coeffs_;
};

}  // namespace qf
