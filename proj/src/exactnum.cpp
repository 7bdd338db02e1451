#include "homfour/exactnum.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace homfour {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

namespace {

std::size_t basis_len(int p) { return p == 2 ? 1 : static_cast<std::size_t>(p - 1); }

int checked_prime(int p) {
  if (!is_prime(p)) throw std::invalid_argument("CycRat: modulus " + std::to_string(p) + " is not prime");
  return p;
}

}  // namespace

CycRat::CycRat(int p) : p_(checked_prime(p)), num_(basis_len(p)), den_(1) {}

CycRat::CycRat(int p, std::vector<BigInt> num, BigInt den)
    : p_(p), num_(std::move(num)), den_(std::move(den)) {}

CycRat CycRat::from_int(const BigInt& k, int p) {
  CycRat r(p);
  r.num_[0] = k;
  return r;
}

CycRat CycRat::zeta_pow(int p, int a) {
  CycRat r(p);
  if (a < 0 || a >= p) throw std::invalid_argument("zeta_pow: exponent out of range [0, p)");
  if (a < p - 1) {
    r.num_[static_cast<std::size_t>(a)] = 1;
  } else {
    // zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
    for (auto& c : r.num_) c = -1;
  }
  return r;
}

CycRat CycRat::from_parts(int p, std::vector<BigInt> num, BigInt den) {
  checked_prime(p);
  if (num.size() != basis_len(p))
    throw std::invalid_argument("CycRat: numerator length must be max(1, p-1)");
  if (den == 0) throw std::invalid_argument("CycRat: zero denominator");
  CycRat r(p, std::move(num), std::move(den));
  r.canonicalize();
  return r;
}

bool CycRat::is_zero() const noexcept {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

bool CycRat::is_integer() const {
  if (den_ != 1) return false;
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

void CycRat::canonicalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  if (den_ == 1) return;
  BigInt g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g != 1) {
    den_ /= g;
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

void CycRat::require_same_field(const CycRat& rhs) const {
  if (p_ != rhs.p_)
    throw std::invalid_argument("CycRat: mismatched fields Q(zeta_" + std::to_string(p_) + ") and Q(zeta_" +
                                std::to_string(rhs.p_) + ")");
}

CycRat& CycRat::operator+=(const CycRat& rhs) {
  require_same_field(rhs);
  if (den_ == rhs.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += rhs.num_[i];
    if (den_ != 1) canonicalize();
    return *this;
  }
  for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * rhs.den_ + rhs.num_[i] * den_;
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

CycRat& CycRat::operator-=(const CycRat& rhs) {
  require_same_field(rhs);
  if (den_ == rhs.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] -= rhs.num_[i];
    if (den_ != 1) canonicalize();
    return *this;
  }
  for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * rhs.den_ - rhs.num_[i] * den_;
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

CycRat& CycRat::operator*=(const CycRat& rhs) {
  require_same_field(rhs);
  if (p_ == 2) {
    num_[0] *= rhs.num_[0];
  } else {
    // Multiply in Z[x]/(x^p - 1), then fold the zeta^(p-1) coefficient back.
    const auto p = static_cast<std::size_t>(p_);
    std::vector<BigInt> acc(p);
    for (std::size_t i = 0; i < num_.size(); ++i) {
      if (num_[i] == 0) continue;
      for (std::size_t j = 0; j < rhs.num_.size(); ++j) {
        if (rhs.num_[j] == 0) continue;
        mpz_addmul(acc[(i + j) % p].get_mpz_t(), num_[i].get_mpz_t(), rhs.num_[j].get_mpz_t());
      }
    }
    for (std::size_t i = 0; i + 1 < p; ++i) num_[i] = acc[i] - acc[p - 1];
  }
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

CycRat& CycRat::mul_int(const BigInt& k) {
  for (auto& c : num_) c *= k;
  canonicalize();
  return *this;
}

CycRat& CycRat::div_int(const BigInt& k) {
  if (k == 0) throw std::invalid_argument("CycRat: division by zero");
  den_ *= k;
  canonicalize();
  return *this;
}

CycRat& CycRat::mul_zeta(int a) {
  a %= p_;
  if (a < 0) a += p_;
  if (a == 0) return *this;
  if (p_ == 2) {
    num_[0] = -num_[0];
    return *this;
  }
  const auto p = static_cast<std::size_t>(p_);
  std::vector<BigInt> full(p);
  for (std::size_t i = 0; i + 1 < p; ++i) full[(i + static_cast<std::size_t>(a)) % p] = num_[i];
  for (std::size_t i = 0; i + 1 < p; ++i) num_[i] = full[i] - full[p - 1];
  return *this;
}

CycRat& CycRat::scale_q_pow(const BigInt& q, long long m) {
  if (m == 0) return *this;
  if (q == 0) throw std::invalid_argument("CycRat: twist base must be nonzero");
  BigInt f = ipow(q, static_cast<unsigned long>(m < 0 ? -m : m));
  return m < 0 ? mul_int(f) : div_int(f);
}

std::complex<double> CycRat::to_complex() const {
  std::complex<double> z{0.0, 0.0};
  for (std::size_t i = 0; i < num_.size(); ++i) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / p_;
    z += num_[i].get_d() * std::polar(1.0, angle);
  }
  return z / den_.get_d();
}

std::string CycRat::to_string() const {
  std::ostringstream os;
  bool first = true;
  bool multi = false;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    if (!first) multi = true;
    BigInt c = num_[i];
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (i == 0) {
      os << c;
    } else {
      if (c == -1) os << "-";
      else if (c != 1) os << c << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) return "0";
  std::string body = os.str();
  if (den_ == 1) return body;
  return (multi ? "(" + body + ")" : body) + "/" + den_.get_str();
}

bool operator==(const CycRat& a, const CycRat& b) {
  return a.p_ == b.p_ && a.den_ == b.den_ && a.num_ == b.num_;
}

CycRat operator+(CycRat a, const CycRat& b) { return a += b; }
CycRat operator-(CycRat a, const CycRat& b) { return a -= b; }
CycRat operator*(CycRat a, const CycRat& b) { return a *= b; }
CycRat operator-(CycRat a) { return a.mul_int(-1); }

}  // namespace homfour
