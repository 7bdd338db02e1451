#include <doctest.h>

#include <complex>
#include <random>

#include "homfour/exactnum.hpp"

using namespace homfour;

namespace {

CycRat from_vec(int p, std::vector<long> c, long den = 1) {
  std::vector<BigInt> num;
  for (long v : c) num.emplace_back(v);
  return CycRat::from_parts(p, std::move(num), BigInt(den));
}

// Oracle: product of integer coefficient vectors reduced by long division by
// the cyclotomic polynomial 1 + x + ... + x^(p-1).
std::vector<long> oracle_mul(int p, const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
  const std::size_t deg = static_cast<std::size_t>(p - 1);
  for (std::size_t k = prod.size(); k-- > deg;) {
    const long lead = prod[k];
    if (lead == 0) continue;
    for (std::size_t i = 0; i <= deg; ++i) prod[k - deg + i] -= lead;
  }
  prod.resize(deg);
  return prod;
}

CycRat random_cyc(std::mt19937_64& rng, int p) {
  std::uniform_int_distribution<long> coef(-20, 20), den(1, 12);
  std::vector<long> c(p == 2 ? 1 : static_cast<std::size_t>(p - 1));
  for (auto& v : c) v = coef(rng);
  return from_vec(p, c, den(rng));
}

}  // namespace

TEST_CASE("integer embedding") {
  CHECK(CycRat::from_int(0, 3).is_zero());
  CHECK(CycRat::from_int(1, 3) == from_vec(3, {1, 0}));
  CHECK(CycRat::from_int(-5, 7) == from_vec(7, {-5, 0, 0, 0, 0, 0}));
  CHECK(CycRat::from_int(-5, 7).is_integer());
  CHECK_THROWS_AS(CycRat::from_int(1, 4), std::invalid_argument);
}

TEST_CASE("powers of zeta in the reduced basis") {
  CHECK(CycRat::zeta_pow(3, 1) == from_vec(3, {0, 1}));
  CHECK(CycRat::zeta_pow(3, 2) == from_vec(3, {-1, -1}));
  CHECK(CycRat::zeta_pow(2, 1) == CycRat::from_int(-1, 2));
  CHECK(CycRat::zeta_pow(5, 0) == CycRat::from_int(1, 5));
  CHECK_THROWS_AS(CycRat::zeta_pow(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(CycRat::zeta_pow(3, -1), std::invalid_argument);
}

TEST_CASE("field operations") {
  CHECK(CycRat::zeta_pow(3, 1) + CycRat::zeta_pow(3, 2) == CycRat::from_int(-1, 3));
  CHECK(CycRat::zeta_pow(3, 1) * CycRat::zeta_pow(3, 2) == CycRat::from_int(1, 3));
  for (int p : {2, 3, 5, 7, 11}) {
    CycRat s(p);
    for (int a = 0; a < p; ++a) s += CycRat::zeta_pow(p, a);
    CHECK(s.is_zero());
  }
  CHECK(-CycRat::zeta_pow(5, 2) + CycRat::zeta_pow(5, 2) == CycRat(5));
  CHECK_THROWS_AS(CycRat::from_int(1, 3) + CycRat::from_int(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(CycRat::from_int(1, 3) * CycRat::from_int(1, 5), std::invalid_argument);
}

TEST_CASE("division by integers") {
  CHECK(cyc_div_int(CycRat::from_int(6, 3), 3) == CycRat::from_int(2, 3));
  const CycRat half_zeta = cyc_div_int(CycRat::zeta_pow(3, 1), 2);
  CHECK(half_zeta.den() == 2);
  CHECK(half_zeta.num() == std::vector<BigInt>{0, 1});
  const CycRat x = from_vec(3, {7, -2}, 5);
  CHECK(cyc_div_int(CycRat(x).mul_int(3), 3) == x);
  CHECK_THROWS_AS(cyc_div_int(x, 0), std::invalid_argument);
}

TEST_CASE("twist scaling") {
  CHECK(cyc_scale_q_pow(CycRat::from_int(1, 3), 3, -2) == CycRat::from_int(9, 3));
  CHECK(cyc_scale_q_pow(CycRat::from_int(1, 3), 3, 1) == cyc_div_int(CycRat::from_int(1, 3), 3));
  const CycRat x = from_vec(5, {1, 2, 3, 4}, 7);
  CHECK(cyc_scale_q_pow(x, 4, 0) == x);
  CHECK(cyc_scale_q_pow(cyc_scale_q_pow(x, 9, 3), 9, -3) == x);
}

TEST_CASE("complex evaluation is diagnostic only") {
  CHECK(std::abs(CycRat::zeta_pow(2, 1).to_complex() - std::complex<double>(-1.0, 0.0)) < 1e-12);
  const CycRat s = CycRat::from_int(1, 3) + CycRat::zeta_pow(3, 1) + CycRat::zeta_pow(3, 2);
  CHECK(std::abs(s.to_complex()) < 1e-12);
}

TEST_CASE("string form") {
  CHECK(CycRat::from_int(-2, 3).to_string() == "-2");
  CHECK(CycRat(3).to_string() == "0");
  CHECK(from_vec(3, {1, 1}, 2).to_string() == "(1 + z)/2");
  CHECK(from_vec(5, {0, 0, -1, 0}).to_string() == "-z^2");
}

TEST_CASE("multiplication agrees with the cyclotomic long-division oracle") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-30, 30);
  for (int p : {3, 5, 7}) {
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<long> a(static_cast<std::size_t>(p - 1)), b(a.size());
      for (auto& v : a) v = coef(rng);
      for (auto& v : b) v = coef(rng);
      CHECK(from_vec(p, a) * from_vec(p, b) == from_vec(p, oracle_mul(p, a, b)));
    }
  }
}

TEST_CASE("ring axioms on random samples") {
  std::mt19937_64 rng(11);
  for (int p : {2, 3, 5, 7}) {
    for (int trial = 0; trial < 100; ++trial) {
      const CycRat a = random_cyc(rng, p), b = random_cyc(rng, p), c = random_cyc(rng, p);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      const CycRat z = a - a;
      CHECK(z.is_zero());
      CHECK(z.den() == 1);
      // Canonical form: gcd(den, content) = 1 and den > 0.
      BigInt g = a.den();
      for (const auto& v : a.num()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      CHECK((a.is_zero() || g == 1));
      CHECK(a.den() > 0);
      // Evaluation is a ring homomorphism up to rounding.
      CHECK(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-9);
      CHECK(std::abs((a + b).to_complex() - (a.to_complex() + b.to_complex())) < 1e-9);
    }
  }
}

TEST_CASE("multiplying by zeta rotates") {
  for (int p : {2, 3, 5, 7}) {
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b)
        CHECK(CycRat::zeta_pow(p, a).mul_zeta(b) == CycRat::zeta_pow(p, (a + b) % p));
  }
}
