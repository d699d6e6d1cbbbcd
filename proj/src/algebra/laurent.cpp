#include "qf/algebra/laurent.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "qf/algebra/modular.hpp"
#include "qf/error.hpp"

namespace qf {

IntLaurent::IntLaurent(std::int64_t constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

IntLaurent::IntLaurent(int low, std::vector<std::int64_t> coeffs) : low_(low), coeffs_(std::move(coeffs)) {
  trim();
}

IntLaurent IntLaurent::monomial(std::int64_t c, int exponent) { return IntLaurent(exponent, {c}); }

void IntLaurent::trim() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1] == 0) --last;
  coeffs_ = std::vector<std::int64_t>(coeffs_.begin() + static_cast<std::ptrdiff_t>(first),
                                      coeffs_.begin() + static_cast<std::ptrdiff_t>(last));
  low_ += static_cast<int>(first);
}

std::int64_t IntLaurent::coeff(int exponent) const {
  const int idx = exponent - low_;
  if (idx < 0 || idx >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(idx)];
}

bool IntLaurent::is_unit() const { return coeffs_.size() == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1); }

IntLaurent IntLaurent::shifted(int shift) const {
  if (is_zero()) return {};
  IntLaurent r = *this;
  r.low_ += shift;
  return r;
}

IntLaurent IntLaurent::operator-() const {
  IntLaurent r = *this;
  for (auto& c : r.coeffs_) c = checked_mul(c, -1);
  return r;
}

IntLaurent operator+(const IntLaurent& a, const IntLaurent& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int low = std::min(a.min_degree(), b.min_degree());
  const int high = std::max(a.max_degree(), b.max_degree());
  std::vector<std::int64_t> c(static_cast<std::size_t>(high - low + 1), 0);
  for (int k = low; k <= high; ++k) c[static_cast<std::size_t>(k - low)] = checked_add(a.coeff(k), b.coeff(k));
  return IntLaurent(low, std::move(c));
}

IntLaurent operator-(const IntLaurent& a, const IntLaurent& b) { return a + (-b); }

IntLaurent operator*(const IntLaurent& a, const IntLaurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] = checked_add(c[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return IntLaurent(a.low_ + b.low_, std::move(c));
}

IntLaurent IntLaurent::pow(int exponent) const {
  if (exponent < 0) {
    if (!is_unit()) fail(ErrorCode::InvalidArgument, "negative power of a non-unit Laurent polynomial");
    return monomial(exponent % 2 == 0 ? 1 : coeffs_[0], low_ * exponent);
  }
  IntLaurent r(1);
  for (int i = 0; i < exponent; ++i) r *= *this;
  return r;
}

IntLaurent IntLaurent::exact_divide(const IntLaurent& a, const IntLaurent& b) {
  if (b.is_zero()) fail(ErrorCode::InvalidArgument, "division by the zero Laurent polynomial");
  if (a.is_zero()) return {};
  // Long division from the top degree on the normalized polynomials.
  std::vector<std::int64_t> rem = a.coeffs_;
  const auto& den = b.coeffs_;
  if (rem.size() < den.size()) fail(ErrorCode::InvalidArgument, "inexact Laurent division");
  std::vector<std::int64_t> quot(rem.size() - den.size() + 1, 0);
  const std::int64_t lead = den.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const std::int64_t top = rem[k + den.size() - 1];
    if (top % lead != 0) fail(ErrorCode::InvalidArgument, "inexact Laurent division");
    const std::int64_t q = top / lead;
    quot[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) rem[k + j] = checked_add(rem[k + j], checked_mul(-q, den[j]));
  }
  for (auto c : rem) {
    if (c != 0) fail(ErrorCode::InvalidArgument, "inexact Laurent division");
  }
  return IntLaurent(a.low_ - b.low_, std::move(quot));
}

std::string IntLaurent::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    const int e = low_ + static_cast<int>(i);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const std::int64_t mag = c < 0 ? -c : c;
    if (e == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag;
      os << "T";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  IntLaurent run() {
    IntLaurent r = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::ParseError, "polynomial '" + std::string(s_) + "': " + what + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'T' || c == 't' || c == '(';
  }

  IntLaurent expr() {
    IntLaurent acc;
    bool negate = false;
    if (peek('-')) {
      ++pos_;
      negate = true;
    } else if (peek('+')) {
      ++pos_;
    }
    acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  IntLaurent term() {
    IntLaurent acc = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc *= factor();
      } else if (starts_factor()) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  IntLaurent factor() {
    IntLaurent base = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      bool neg = false;
      if (pos_ < s_.size() && s_[pos_] == '-') {
        neg = true;
        ++pos_;
      }
      const long e = number();
      if (neg && !base.is_unit()) error("negative exponent on a non-unit");
      base = base.pow(static_cast<int>(neg ? -e : e));
    }
    return base;
  }

  IntLaurent atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      IntLaurent inner = expr();
      if (!peek(')')) error("missing ')'");
      ++pos_;
      return inner;
    }
    if (c == 'T' || c == 't') {
      ++pos_;
      return IntLaurent::t();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return IntLaurent(number());
    error("unexpected character");
  }

  long number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected a number");
    if (pos_ - start > 15) error("number too large");
    return std::strtol(std::string(s_.substr(start, pos_ - start)).c_str(), nullptr, 10);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

IntLaurent IntLaurent::parse(std::string_view text) { return Parser(text).run(); }

}  // namespace qf
