#include "qf/algebra/poly_fp.hpp"

#include "qf/algebra/modular.hpp"
#include "qf/error.hpp"

namespace qf {

PolyFp::PolyFp(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (!is_prime(p)) fail(ErrorCode::InvalidArgument, "PolyFp needs a prime modulus, got " + std::to_string(p));
  for (auto& c : c_) c %= p_;
  trim();
}

void PolyFp::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyFp PolyFp::from_laurent(const IntLaurent& f, std::uint64_t p) {
  std::vector<std::uint64_t> c;
  c.reserve(f.coeffs().size());
  for (auto v : f.coeffs()) c.push_back(mod_reduce(v, p));
  return PolyFp(p, std::move(c)).unit_normalized();
}

PolyFp PolyFp::monic() const {
  if (is_zero()) return *this;
  const std::uint64_t inv = *mod_inverse(c_.back(), p_);
  std::vector<std::uint64_t> c = c_;
  for (auto& v : c) v = v * inv % p_;
  return PolyFp(p_, std::move(c));
}

PolyFp PolyFp::unit_normalized() const {
  std::size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  return PolyFp(p_, std::vector<std::uint64_t>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
}

PolyFp operator*(const PolyFp& a, const PolyFp& b) {
  if (a.is_zero() || b.is_zero()) return PolyFp(a.p_, {});
  std::vector<std::uint64_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = (c[i + j] + a.c_[i] * b.c_[j]) % a.p_;
  }
  return PolyFp(a.p_, std::move(c));
}

namespace {

void divide(const PolyFp& a, const PolyFp& b, std::vector<std::uint64_t>& quot, std::vector<std::uint64_t>& rem) {
  if (b.is_zero()) fail(ErrorCode::InvalidArgument, "polynomial division by zero");
  const std::uint64_t p = a.prime();
  rem = a.coeffs();
  const auto& den = b.coeffs();
  quot.assign(rem.size() >= den.size() ? rem.size() - den.size() + 1 : 0, 0);
  const std::uint64_t inv = *mod_inverse(den.back(), p);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const std::uint64_t q = rem[k + den.size() - 1] * inv % p;
    quot[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) rem[k + j] = (rem[k + j] + (p - q) * den[j]) % p;
  }
}

}  // namespace

PolyFp PolyFp::remainder(const PolyFp& a, const PolyFp& b) {
  std::vector<std::uint64_t> q, r;
  divide(a, b, q, r);
  return PolyFp(a.p_, std::move(r));
}

PolyFp PolyFp::quotient(const PolyFp& a, const PolyFp& b) {
  std::vector<std::uint64_t> q, r;
  divide(a, b, q, r);
  return PolyFp(a.p_, std::move(q));
}

PolyFp PolyFp::gcd(const PolyFp& a, const PolyFp& b) {
  PolyFp x = a.unit_normalized(), y = b.unit_normalized();
  while (!y.is_zero()) {
    PolyFp r = remainder(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic().unit_normalized();
}

std::string PolyFp::to_string() const {
  std::vector<std::int64_t> c(c_.begin(), c_.end());
  return IntLaurent(0, std::move(c)).to_string();
}

}  // namespace qf
