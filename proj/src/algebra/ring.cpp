#include "qf/algebra/ring.hpp"

#include <array>
#include <sstream>

#include "qf/algebra/modular.hpp"
#include "qf/error.hpp"

namespace qf {

namespace {
constexpr std::size_t kMaxDegree = 24;
using Digits = std::array<std::uint64_t, 2 * kMaxDegree>;
}  // namespace

struct FiniteRing::Data {
  std::uint64_t q = 0;
  std::size_t d = 0;
  RingBasis basis = RingBasis::PowersOfT;
  std::vector<std::uint64_t> g;  // monic relation in the basis variable, g_0..g_{d-1}
  IntLaurent h;                  // monic relation in T
  std::size_t size = 1;
  Index t = 0;
  Index t_inv = 0;

  void decode(Index a, Digits& out) const {
    for (std::size_t j = 0; j < d; ++j) {
      out[j] = a % q;
      a = static_cast<Index>(a / q);
    }
  }
  Index encode(const std::uint64_t* c) const {
    std::uint64_t r = 0;
    for (std::size_t j = d; j-- > 0;) r = r * q + c[j];
    return static_cast<Index>(r);
  }
  // Reduces a coefficient vector of length n (entries in [0, q)) mod g.
  Index reduce(Digits& c, std::size_t n) const {
    for (std::size_t k = n; k-- > d;) {
      const std::uint64_t top = c[k];
      if (top == 0) continue;
      c[k] = 0;
      for (std::size_t j = 0; j < d; ++j) c[k - d + j] = (c[k - d + j] + (q - top) * g[j]) % q;
    }
    return encode(c.data());
  }
  Index mul(Index a, Index b) const {
    if (d == 0) return 0;
    Digits x{}, y{}, r{};
    decode(a, x);
    decode(b, y);
    for (std::size_t i = 0; i < d; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % q;
    }
    return reduce(r, 2 * d - 1);
  }
};

namespace {

// Coefficients of f(1 - X) given ascending coefficients of f, mod q.
std::vector<std::uint64_t> substitute_one_minus(const std::vector<std::uint64_t>& f, std::uint64_t q) {
  std::vector<std::uint64_t> result{0};
  // Horner: result = result * (1 - X) + f_k.
  for (std::size_t k = f.size(); k-- > 0;) {
    std::vector<std::uint64_t> next(result.size() + 1, 0);
    for (std::size_t i = 0; i < result.size(); ++i) {
      next[i] = (next[i] + result[i]) % q;
      next[i + 1] = (next[i + 1] + (q - result[i]) % q) % q;
    }
    next[0] = (next[0] + f[k]) % q;
    result = std::move(next);
  }
  while (result.size() > 1 && result.back() == 0) result.pop_back();
  return result;
}

std::vector<std::uint64_t> monic_scaled(std::vector<std::uint64_t> f, std::uint64_t q) {
  const auto inv = mod_inverse(f.back(), q);
  for (auto& c : f) c = c * *inv % q;
  return f;
}

}  // namespace

FiniteRing FiniteRing::make(std::uint64_t q, const IntLaurent& h) {
  if (q < 2) fail(ErrorCode::InvalidArgument, "ring modulus must be at least 2");
  if (h.is_zero()) fail(ErrorCode::InvalidArgument, "ring relation must be nonzero");
  // Auto-detect the (1 - T)^d shape.
  std::vector<std::uint64_t> red;
  for (auto c : h.coeffs()) red.push_back(mod_reduce(c, q));
  std::size_t lo = 0;
  while (lo < red.size() && red[lo] == 0) ++lo;
  if (lo == red.size()) fail(ErrorCode::NonUnitLeadingCoefficient, "relation vanishes mod " + std::to_string(q));
  while (red.back() == 0) red.pop_back();
  red.erase(red.begin(), red.begin() + static_cast<std::ptrdiff_t>(lo));
  if (!is_unit_mod(red.front(), q) || !is_unit_mod(red.back(), q)) {
    fail(ErrorCode::NonUnitLeadingCoefficient,
         "extreme coefficients of " + h.to_string() + " are not units mod " + std::to_string(q));
  }
  const auto monic = monic_scaled(red, q);
  const std::size_t d = monic.size() - 1;
  bool one_minus_t = d >= 1;
  if (one_minus_t) {
    // (T - 1)^d expanded mod q.
    std::vector<std::uint64_t> ref{1};
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<std::uint64_t> next(ref.size() + 1, 0);
      for (std::size_t j = 0; j < ref.size(); ++j) {
        next[j + 1] = (next[j + 1] + ref[j]) % q;
        next[j] = (next[j] + q - ref[j]) % q;
      }
      ref = std::move(next);
    }
    one_minus_t = ref == monic;
  }
  return make(q, h, one_minus_t ? RingBasis::PowersOfOneMinusT : RingBasis::PowersOfT);
}

FiniteRing FiniteRing::make(std::uint64_t q, const IntLaurent& h, RingBasis basis) {
  if (q < 2) fail(ErrorCode::InvalidArgument, "ring modulus must be at least 2");
  if (q > (std::uint64_t{1} << 31)) fail(ErrorCode::InvalidArgument, "ring modulus too large");
  if (h.is_zero()) fail(ErrorCode::InvalidArgument, "ring relation must be nonzero");
  std::vector<std::uint64_t> red;
  for (auto c : h.coeffs()) red.push_back(mod_reduce(c, q));
  std::size_t lo = 0;
  while (lo < red.size() && red[lo] == 0) ++lo;
  if (lo == red.size()) fail(ErrorCode::NonUnitLeadingCoefficient, "relation vanishes mod " + std::to_string(q));
  while (red.back() == 0) red.pop_back();
  red.erase(red.begin(), red.begin() + static_cast<std::ptrdiff_t>(lo));
  if (!is_unit_mod(red.front(), q) || !is_unit_mod(red.back(), q)) {
    fail(ErrorCode::NonUnitLeadingCoefficient,
         "extreme coefficients of " + h.to_string() + " are not units mod " + std::to_string(q));
  }
  auto data = std::make_shared<Data>();
  data->q = q;
  const auto monic = monic_scaled(red, q);
  data->d = monic.size() - 1;
  if (data->d > kMaxDegree) fail(ErrorCode::SizeLimitExceeded, "ring relation degree too large");
  data->basis = basis;
  data->h = IntLaurent(0, std::vector<std::int64_t>(monic.begin(), monic.end()));
  data->size = static_cast<std::size_t>(checked_pow(q, static_cast<unsigned>(data->d)));
  if (data->size > kMaxElements) fail(ErrorCode::SizeLimitExceeded, "ring has more than 2^24 elements");

  std::vector<std::uint64_t> g = basis == RingBasis::PowersOfT ? monic : monic_scaled(substitute_one_minus(monic, q), q);
  g.pop_back();
  data->g = std::move(g);

  // T in basis coordinates, reduced.
  if (data->d > 0) {
    Digits c{};
    if (basis == RingBasis::PowersOfT) {
      c[1] = 1;
    } else {
      c[0] = 1;
      c[1] = q - 1;
    }
    data->t = data->reduce(c, 2);
  }
  FiniteRing ring(data);
  // T^-1 = -h0^-1 (T^{d-1} + h_{d-1} T^{d-2} + ... + h_1).
  if (data->d > 0) {
    const std::uint64_t h0inv = *mod_inverse(monic[0], q);
    Index acc = 0;
    for (std::size_t k = data->d; k >= 1; --k) {
      acc = data->mul(acc, data->t);
      const Index coeff = ring.from_coeffs({monic[k] * (q - h0inv) % q});
      acc = ring.add(acc, coeff);
    }
    data->t_inv = acc;
  }
  return ring;
}

FiniteRing FiniteRing::w(std::uint64_t q, unsigned m) {
  return make(q, (IntLaurent(1) - IntLaurent::t()).pow(static_cast<int>(m)), RingBasis::PowersOfOneMinusT);
}

FiniteRing FiniteRing::u(std::uint64_t q, unsigned m) {
  const std::uint64_t modulus = checked_pow(q, m);
  return make(modulus, IntLaurent::t() - IntLaurent(1) + IntLaurent(static_cast<std::int64_t>(q)),
              RingBasis::PowersOfT);
}

std::uint64_t FiniteRing::modulus() const { return d_->q; }
std::size_t FiniteRing::degree() const { return d_->d; }
std::size_t FiniteRing::size() const { return d_->size; }
RingBasis FiniteRing::basis() const { return d_->basis; }
const IntLaurent& FiniteRing::relation() const { return d_->h; }

FiniteRing::Index FiniteRing::add(Index a, Index b) const {
  Digits x{}, y{};
  d_->decode(a, x);
  d_->decode(b, y);
  for (std::size_t j = 0; j < d_->d; ++j) x[j] = (x[j] + y[j]) % d_->q;
  return d_->encode(x.data());
}

FiniteRing::Index FiniteRing::neg(Index a) const {
  Digits x{};
  d_->decode(a, x);
  for (std::size_t j = 0; j < d_->d; ++j) x[j] = (d_->q - x[j]) % d_->q;
  return d_->encode(x.data());
}

FiniteRing::Index FiniteRing::sub(Index a, Index b) const { return add(a, neg(b)); }

FiniteRing::Index FiniteRing::mul(Index a, Index b) const { return d_->mul(a, b); }

FiniteRing::Index FiniteRing::scale(Index a, std::uint64_t c) const {
  Digits x{};
  d_->decode(a, x);
  c %= d_->q;
  for (std::size_t j = 0; j < d_->d; ++j) x[j] = x[j] * c % d_->q;
  return d_->encode(x.data());
}

std::vector<std::uint64_t> FiniteRing::coeffs(Index a) const {
  Digits x{};
  d_->decode(a, x);
  return {x.begin(), x.begin() + static_cast<std::ptrdiff_t>(d_->d)};
}

FiniteRing::Index FiniteRing::from_coeffs(const std::vector<std::uint64_t>& c) const {
  Digits x{};
  const std::size_t n = c.size();
  if (n > x.size()) fail(ErrorCode::InvalidArgument, "too many coefficients");
  for (std::size_t j = 0; j < n; ++j) x[j] = c[j] % d_->q;
  if (d_->d == 0) return 0;
  return d_->reduce(x, std::max(n, d_->d));
}

RingElement FiniteRing::element(Index i) const {
  if (i >= d_->size) fail(ErrorCode::InvalidArgument, "ring element index out of range");
  return {*this, i};
}
RingElement FiniteRing::zero() const { return {*this, 0}; }
RingElement FiniteRing::one() const { return {*this, from_coeffs({1})}; }
RingElement FiniteRing::t() const { return {*this, d_->t}; }
RingElement FiniteRing::t_inverse() const { return {*this, d_->t_inv}; }
RingElement FiniteRing::from_coefficients(const std::vector<std::uint64_t>& c) const { return {*this, from_coeffs(c)}; }

RingElement FiniteRing::eval(const IntLaurent& f) const {
  Index acc = 0;
  if (f.is_zero()) return zero();
  Index base = d_->t;
  Index power = from_coeffs({1});
  // Start from T^{min_degree}.
  const int low = f.min_degree();
  const Index step = low < 0 ? d_->t_inv : d_->t;
  for (int i = 0; i < (low < 0 ? -low : low); ++i) power = mul(power, step);
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    const std::uint64_t c = mod_reduce(f.coeffs()[k], d_->q);
    acc = add(acc, scale(power, c));
    power = mul(power, base);
  }
  return {*this, acc};
}

std::string FiniteRing::label(Index a) const {
  const auto c = coeffs(a);
  std::ostringstream os;
  bool first = true;
  const char* var = d_->basis == RingBasis::PowersOfT ? "T" : "(1-T)";
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    if (!first) os << "+";
    if (j == 0) {
      os << c[j];
    } else {
      if (c[j] != 1) os << c[j];
      os << var;
      if (j > 1) os << "^" << j;
    }
    first = false;
  }
  if (first) return "0";
  return os.str();
}

bool operator==(const FiniteRing& a, const FiniteRing& b) {
  if (a.d_ == b.d_) return true;
  return a.d_->q == b.d_->q && a.d_->basis == b.d_->basis && a.d_->g == b.d_->g;
}

RingElement RingElement::operator-() const { return {ring_, ring_.neg(index_)}; }

namespace {
void require_same(const RingElement& a, const RingElement& b) {
  if (!(a.ring() == b.ring())) fail(ErrorCode::InvalidArgument, "ring elements from different rings");
}
}  // namespace

RingElement operator+(const RingElement& a, const RingElement& b) {
  require_same(a, b);
  return {a.ring_, a.ring_.add(a.index_, b.index_)};
}
RingElement operator-(const RingElement& a, const RingElement& b) {
  require_same(a, b);
  return {a.ring_, a.ring_.sub(a.index_, b.index_)};
}
RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same(a, b);
  return {a.ring_, a.ring_.mul(a.index_, b.index_)};
}

RingElement invert_t(const FiniteRing& ring) { return ring.t_inverse(); }

std::uint64_t strip_ideal_factor(const RingElement& e, IdealKind kind, unsigned m, std::uint64_t q) {
  const FiniteRing& ring = e.ring();
  if (kind == IdealKind::OneMinusTPower) {
    if (ring.basis() != RingBasis::PowersOfOneMinusT || m >= ring.degree()) {
      fail(ErrorCode::InvalidArgument, "(1-T)^m stripping needs a (1-T)-basis ring of degree > m");
    }
    const auto c = e.coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j != m && c[j] != 0) fail(ErrorCode::NotInIdeal, e.to_string() + " is not a multiple of (1-T)^" + std::to_string(m));
    }
    return c[m];
  }
  if (q < 2 || ring.degree() != 1 || ring.modulus() != checked_pow(q, m + 1)) {
    fail(ErrorCode::InvalidArgument, "q^m stripping needs the ring Z_{q^(m+1)}");
  }
  const std::uint64_t v = e.coeffs()[0];
  const std::uint64_t step = checked_pow(q, m);
  if (v % step != 0) fail(ErrorCode::NotInIdeal, std::to_string(v) + " is not a multiple of " + std::to_string(step));
  return v / step;
}

}  // namespace qf
