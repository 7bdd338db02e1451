#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace homfour {

using BigInt = mpz_class;

bool is_prime(long long n);

/// Exact element of the cyclotomic field Q(zeta_p), p prime.
///
/// Stored as num / den with num a coefficient vector over the basis
/// zeta^0, ..., zeta^(p-2) (length max(1, p-1)) and den a positive integer.
/// The representation is canonical: den >= 1 and gcd(den, content(num)) = 1,
/// so equal values compare equal coefficient-wise. For p = 2 the basis is {1}
/// and zeta = -1.
///
/// Values are immutable from the outside apart from the compound assignment
/// operators; sharing const instances across threads is safe.
class CycRat {
 public:
  /// Zero of Q(zeta_p).
  explicit CycRat(int p);

  static CycRat from_int(const BigInt& k, int p);
  static CycRat from_int(long long k, int p) { return from_int(BigInt(static_cast<long>(k)), p); }
  /// zeta_p^a for 0 <= a < p.
  static CycRat zeta_pow(int p, int a);
  /// Builds num/den and canonicalizes; num must have length max(1, p-1).
  static CycRat from_parts(int p, std::vector<BigInt> num, BigInt den);

  int p() const noexcept { return p_; }
  const std::vector<BigInt>& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }
  bool is_zero() const noexcept;
  bool is_integer() const;

  CycRat& operator+=(const CycRat& rhs);
  CycRat& operator-=(const CycRat& rhs);
  CycRat& operator*=(const CycRat& rhs);
  CycRat& mul_int(const BigInt& k);
  /// Exact division by a nonzero rational integer.
  CycRat& div_int(const BigInt& k);
  /// Multiplies by zeta^a (a taken mod p).
  CycRat& mul_zeta(int a);
  /// Multiplies by q^(-m): the trace-level action of a Tate twist (m).
  CycRat& scale_q_pow(const BigInt& q, long long m);

  /// Floating evaluation at zeta = exp(2 pi i / p). Diagnostic only.
  std::complex<double> to_complex() const;

  std::string to_string() const;

  friend bool operator==(const CycRat& a, const CycRat& b);

 private:
  CycRat(int p, std::vector<BigInt> num, BigInt den);
  void canonicalize();
  void require_same_field(const CycRat& rhs) const;

  int p_;
  std::vector<BigInt> num_;
  BigInt den_;
};

CycRat operator+(CycRat a, const CycRat& b);
CycRat operator-(CycRat a, const CycRat& b);
CycRat operator*(CycRat a, const CycRat& b);
CycRat operator-(CycRat a);

inline CycRat cyc_div_int(CycRat a, const BigInt& k) { return a.div_int(k); }
inline CycRat cyc_scale_q_pow(CycRat a, const BigInt& q, long long m) {
  return a.scale_q_pow(q, m);
}

/// Integer power with exact BigInt result.
BigInt ipow(const BigInt& base, unsigned long e);

}  // namespace homfour
