#include "qf/homology/chain.hpp"

#include <sstream>

#include "qf/algebra/modular.hpp"
#include "qf/error.hpp"

namespace qf {

bool is_degenerate(const Tuple& t) {
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (t[i] == t[i + 1]) return true;
  }
  return false;
}

void Chain::add(const Tuple& t, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Chain Chain::degenerate_part() const {
  Chain out{degree, {}};
  for (const auto& [t, c] : terms) {
    if (is_degenerate(t)) out.terms.emplace(t, c);
  }
  return out;
}

Chain generator(const Tuple& t) {
  Chain c{t.size(), {}};
  c.add(t, 1);
  return c;
}

namespace {

// Calls emit(face, sign) for each of the 2(n-1) terms of d_n(t).
template <class Emit>
void boundary_terms(const FiniteQuandle& x, const Tuple& t, Emit&& emit) {
  const std::size_t n = t.size();
  if (n <= 1) return;
  Tuple face(n - 1);
  for (std::size_t i = 1; i < n; ++i) {  // i is the 0-based index of x_{i+1}
    const std::int64_t sign = (i + 1) % 2 == 0 ? 1 : -1;
    std::size_t k = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) face[k++] = t[j];
    }
    emit(face, sign);
    for (std::size_t j = 0; j < i; ++j) face[j] = x.op(t[j], t[i]);
    emit(face, -sign);
  }
}

}  // namespace

Chain boundary(const FiniteQuandle& x, const Chain& c) {
  Chain out{c.degree == 0 ? 0 : c.degree - 1, {}};
  for (const auto& [t, coeff] : c.terms) {
    boundary_terms(x, t, [&](const Tuple& face, std::int64_t s) { out.add(face, s * coeff); });
  }
  return out;
}

Cochain::Cochain(std::size_t degree, std::uint64_t modulus, std::size_t base_size)
    : degree_(degree), q_(modulus), n_(base_size) {
  if (modulus == 0) fail(ErrorCode::InvalidArgument, "cochain modulus must be positive");
  std::uint64_t count = checked_pow(base_size, static_cast<unsigned>(degree));
  if (count > (std::uint64_t{1} << 28)) fail(ErrorCode::SizeLimitExceeded, "cochain table too large");
  values_.assign(count, 0);
}

std::size_t Cochain::index(const Tuple& t) const {
  if (t.size() != degree_) fail(ErrorCode::InvalidArgument, "tuple length does not match cochain degree");
  std::size_t k = 0;
  for (auto e : t) {
    if (e >= n_) fail(ErrorCode::InvalidArgument, "tuple entry out of range");
    k = k * n_ + e;
  }
  return k;
}

Tuple Cochain::tuple(std::size_t flat) const {
  Tuple t(degree_);
  for (std::size_t i = degree_; i-- > 0;) {
    t[i] = static_cast<FiniteQuandle::Element>(flat % n_);
    flat /= n_;
  }
  return t;
}

void Cochain::set(const Tuple& t, std::int64_t v) { values_[index(t)] = mod_reduce(v, q_); }
void Cochain::set_flat(std::size_t flat, std::int64_t v) { values_[flat] = mod_reduce(v, q_); }

Cochain Cochain::operator+(const Cochain& other) const {
  if (other.degree_ != degree_ || other.q_ != q_ || other.n_ != n_) {
    fail(ErrorCode::InvalidArgument, "adding incompatible cochains");
  }
  Cochain out = *this;
  for (std::size_t k = 0; k < values_.size(); ++k) out.values_[k] = (values_[k] + other.values_[k]) % q_;
  return out;
}

Cochain Cochain::operator-() const {
  Cochain out = *this;
  for (auto& v : out.values_) v = (q_ - v) % q_;
  return out;
}

Cochain coboundary(const FiniteQuandle& x, const Cochain& f) {
  if (f.base_size() != x.size()) fail(ErrorCode::InvalidArgument, "cochain is on a different quandle");
  Cochain out(f.degree() + 1, f.modulus(), x.size());
  const std::uint64_t q = f.modulus();
  for (std::size_t k = 0; k < out.tuple_count(); ++k) {
    const Tuple t = out.tuple(k);
    std::uint64_t acc = 0;
    boundary_terms(x, t, [&](const Tuple& face, std::int64_t s) {
      const std::uint64_t v = f(face);
      acc = (acc + (s > 0 ? v : q - v)) % q;
    });
    out.set_flat(k, static_cast<std::int64_t>(acc));
  }
  return out;
}

namespace {

std::string tuple_key(const Tuple& t, const FiniteQuandle& x) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += "|";
    s += x.label(t[i]);
  }
  return s;
}

}  // namespace

nlohmann::json cochain_to_json(const Cochain& c, const FiniteQuandle& x) {
  nlohmann::json values = nlohmann::json::object();
  for (std::size_t k = 0; k < c.tuple_count(); ++k) {
    if (c.at(k) != 0) values[tuple_key(c.tuple(k), x)] = c.at(k);
  }
  return {{"degree", c.degree()}, {"q", c.modulus()}, {"labels", x.labels()}, {"values", values}};
}

Cochain cochain_from_json(const nlohmann::json& j, const FiniteQuandle& x) {
  try {
    const auto degree = j.at("degree").get<std::size_t>();
    const auto q = j.at("q").get<std::uint64_t>();
    if (j.contains("labels") && j.at("labels").get<std::vector<std::string>>() != x.labels()) {
      fail(ErrorCode::ParseError, "cochain labels do not match the quandle");
    }
    Cochain c(degree, q, x.size());
    for (const auto& [key, value] : j.at("values").items()) {
      Tuple t;
      std::string part;
      std::istringstream is(key);
      while (std::getline(is, part, '|')) t.push_back(x.index_of(part));
      if (t.size() != degree) fail(ErrorCode::ParseError, "cochain key '" + key + "' has the wrong length", key);
      c.set(t, value.get<std::int64_t>());
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("cochain JSON: ") + e.what());
  }
}

}  // namespace qf
