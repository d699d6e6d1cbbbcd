#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qf/algebra/fp_linalg.hpp"
#include "qf/algebra/group_ring.hpp"
#include "qf/algebra/laurent.hpp"
#include "qf/algebra/matrix.hpp"
#include "qf/algebra/modular.hpp"
#include "qf/algebra/poly_fp.hpp"
#include "qf/algebra/ring.hpp"
#include "qf/error.hpp"
#include "qf/kernels.hpp"

using namespace qf;

TEST_CASE("axpy_mod: avx2 matches scalar") {
  if (!kernels::isa_available(kernels::Isa::Avx2)) return;
  std::mt19937 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 251u, 4093u, 65521u}) {
    for (std::size_t len : {0u, 1u, 7u, 8u, 9u, 31u, 100u}) {
      std::vector<std::uint32_t> row(len), piv(len);
      for (auto& x : row) x = rng() % p;
      for (auto& x : piv) x = rng() % p;
      const std::uint32_t f = rng() % p;
      auto a = row, b = row;
      kernels::scalar::axpy_mod(a, piv, f, p);
      kernels::avx2::axpy_mod(b, piv, f, p);
      CHECK(a == b);
    }
  }
}

TEST_CASE("distributivity scan: avx2 matches scalar") {
  if (!kernels::isa_available(kernels::Isa::Avx2)) return;
  std::mt19937 rng(11);
  for (std::size_t n : {3u, 8u, 13u, 40u}) {
    std::vector<std::uint32_t> op(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) op[a * n + b] = static_cast<std::uint32_t>((2 * b + n - a) % n);
    for (int trial = 0; trial < 2; ++trial) {
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c)
          CHECK(kernels::scalar::first_distributivity_failure(op, n, b, c) ==
                kernels::avx2::first_distributivity_failure(op, n, b, c));
      op[rng() % (n * n)] = rng() % n;  // break it
    }
  }
}

TEST_CASE("modular helpers") {
  CHECK(mod_reduce(-7, 5) == 3);
  CHECK(gcd_u64(12, 18) == 6);
  CHECK(mod_inverse(3, 7) == 5u);
  CHECK_FALSE(mod_inverse(2, 4));
  CHECK(is_prime(4093));
  CHECK_FALSE(is_prime(1));
  CHECK(checked_pow(3, 4) == 81);
  CHECK_THROWS_AS(checked_pow(2, 64), Error);
}

TEST_CASE("laurent arithmetic and parsing") {
  const auto t = IntLaurent::t();
  const auto u = 1 - t;
  CHECK(u.pow(3) == IntLaurent(0, {1, -3, 3, -1}));
  CHECK(IntLaurent::parse("T^-1*(1-T)^3") == IntLaurent::t_inverse() * u.pow(3));
  CHECK(IntLaurent::parse("3(1-T)^2") == 3 * u * u);
  CHECK(IntLaurent::parse("1 - 3T + 2T^2") == IntLaurent(0, {1, -3, 2}));
  CHECK(IntLaurent::monomial(-1, -1).to_string() == "-T^-1");
  CHECK(IntLaurent::exact_divide(u.pow(3), u) == u * u);
  CHECK_THROWS_AS(IntLaurent::exact_divide(1 + t, u), Error);
  CHECK(IntLaurent::monomial(-1, 4).is_unit());
  CHECK_FALSE((2 * t).is_unit());
  CHECK(IntLaurent::parse(u.pow(5).to_string()) == u.pow(5));
}

TEST_CASE("poly gcd over F_p") {
  const auto f = PolyFp::from_laurent(IntLaurent::parse("(1+T)^2*(1+T+T^2)"), 3);
  const auto g = PolyFp::from_laurent(IntLaurent::parse("(1+T)*(2+T)"), 3);
  // over F_3, 1+T+T^2 = (T-1)^2 = (T+2)^2
  CHECK(PolyFp::gcd(f, g) == PolyFp::from_laurent(IntLaurent::parse("(1+T)*(2+T)"), 3));
  CHECK(PolyFp::gcd(PolyFp(5, {}), PolyFp(5, {})).is_zero());
  CHECK(PolyFp::from_laurent(IntLaurent::parse("T^-2 + T^-1"), 2).degree() == 1);
}

// Every pair and triple for rings up to 256 elements.
static void check_ring_axioms(const FiniteRing& r) {
  const auto n = static_cast<FiniteRing::Index>(r.size());
  const auto one = r.one().index();
  const auto ti = r.t_inverse().index();
  CHECK(r.mul(r.t().index(), ti) == one);
  for (FiniteRing::Index a = 0; a < n; ++a) {
    CHECK(r.add(a, r.neg(a)) == 0);
    CHECK(r.mul(a, one) == a);
    for (FiniteRing::Index b = 0; b < n; ++b) {
      REQUIRE(r.mul(a, b) == r.mul(b, a));
      REQUIRE(r.sub(r.add(a, b), b) == a);
      if (n <= 64) {
        for (FiniteRing::Index c = 0; c < n; ++c) {
          REQUIRE(r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)));
          REQUIRE(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("finite rings satisfy the ring axioms") {
  for (std::uint64_t q : {2u, 3u}) {
    for (unsigned m = 1; m <= 4; ++m) {
      if (std::pow(q, m) > 256) continue;
      CAPTURE(q);
      CAPTURE(m);
      check_ring_axioms(FiniteRing::w(q, m));
      check_ring_axioms(FiniteRing::u(q, m));
    }
  }
  check_ring_axioms(FiniteRing::make(5, IntLaurent::parse("1+T")));
  check_ring_axioms(FiniteRing::make(2, IntLaurent::parse("1+T+T^2")));
  check_ring_axioms(FiniteRing::make(4, IntLaurent::parse("1+T+T^2")));
}

TEST_CASE("W_m uses the (1-T) basis and strips (1-T)^m") {
  const auto w = FiniteRing::w(3, 3);
  CHECK(w.basis() == RingBasis::PowersOfOneMinusT);
  CHECK(w.size() == 27);
  const auto e = w.eval(IntLaurent::parse("2(1-T)^2"));
  CHECK(strip_ideal_factor(e, IdealKind::OneMinusTPower, 2) == 2);
  CHECK_THROWS_AS(strip_ideal_factor(w.eval(IntLaurent::parse("1-T")), IdealKind::OneMinusTPower, 2), Error);
  // T^-1 = 1 + (1-T) + (1-T)^2 mod (1-T)^3
  CHECK(w.t_inverse() == w.eval(IntLaurent::parse("1 + (1-T) + (1-T)^2")));
  const auto u = FiniteRing::u(2, 3);
  CHECK(u.size() == 8);
  CHECK(strip_ideal_factor(u.eval(IntLaurent(4)), IdealKind::QPower, 2, 2) == 1);
  CHECK_THROWS_AS(FiniteRing::make(4, IntLaurent::parse("2+T")), Error);
}

TEST_CASE("group ring printing") {
  GroupRingValue v(2);
  v.add_term(0, 32);
  v.add_term(-1, 32);
  CHECK(v.to_string() == "32 + 32t");
  CHECK(to_string(std::vector<GroupRingValue>{v, v}) == "(32 + 32t, 32 + 32t)");
  CHECK(GroupRingValue(3).to_string() == "0");
  GroupRingValue s(3);
  s.add_term(2, 2);
  s.add_term(3, 9);
  CHECK(s.to_string() == "9 + 2t^2");
  CHECK((v * v).coeff(0) == 2 * 32 * 32);
}

TEST_CASE("determinants: Bareiss equals cofactor expansion") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 5;
    LaurentMatrix m(n, n);
    for (auto& e : m.entries) {
      const int pick = static_cast<int>(rng() % 5);
      e = pick == 0 ? IntLaurent(0) : IntLaurent::monomial(static_cast<int>(rng() % 3) - 1, static_cast<int>(rng() % 3) - 1) +
                                          IntLaurent(static_cast<int>(rng() % 3) - 1);
    }
    CHECK(laurent_det(m) == laurent_det_cofactor(m));
  }
}

TEST_CASE("left kernel matches brute force") {
  const auto r = FiniteRing::w(2, 2);
  LaurentMatrix m(3, 2);
  m.at(0, 0) = IntLaurent::parse("1-T");
  m.at(1, 0) = IntLaurent::parse("T");
  m.at(2, 0) = -1;
  m.at(0, 1) = IntLaurent::parse("-1");
  m.at(1, 1) = IntLaurent::parse("1-T");
  m.at(2, 1) = IntLaurent::parse("T");
  const auto rm = specialize(m, r);
  const auto k = kernel(rm);
  std::vector<std::vector<FiniteRing::Index>> brute;
  const auto n = static_cast<FiniteRing::Index>(r.size());
  for (FiniteRing::Index a = 0; a < n; ++a)
    for (FiniteRing::Index b = 0; b < n; ++b)
      for (FiniteRing::Index c = 0; c < n; ++c) {
        std::vector<FiniteRing::Index> v{a, b, c};
        const auto z = left_multiply(v, rm);
        if (z[0] == 0 && z[1] == 0) brute.push_back(v);
      }
  CHECK(k == brute);
}

TEST_CASE("F_p linear algebra") {
  FpMatrix m(3, 2, 3);
  m.data = {1, 2, 0, 2, 1, 0};
  CHECK(rank(m) == 1);
  const auto ns = nullspace(m);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) {
    for (std::size_t i = 0; i < 2; ++i) {
      std::uint32_t s = 0;
      for (std::size_t j = 0; j < 3; ++j) s += m.at(i, j) * v[j];
      CHECK(s % 3 == 0);
    }
  }
  CHECK(solvable(m, {1, 2}));
  CHECK_FALSE(solvable(m, {1, 1}));
}
