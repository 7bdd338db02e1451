#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

#include "homfour/exactnum.hpp"

namespace homfour {

/// Element of F_q, identified with the base-p integer of its coefficient
/// vector: value = c_0 + c_1 p + ... + c_{n-1} p^{n-1}, c_i the coefficient
/// of x^i. This is also the enumeration order and the wire format.
struct FieldElem {
  std::uint32_t value = 0;
  friend auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

inline constexpr long long kDefaultFieldBound = 64;

/// Finite field F_{p^n} = F_p[x]/(m(x)).
///
/// The modulus m is the monic irreducible polynomial of degree n whose lower
/// coefficients have the smallest base-p value. Arithmetic goes through
/// q x q tables built once at construction; the context is immutable.
class FieldCtx {
 public:
  FieldCtx(int p, int n, long long bound = kDefaultFieldBound);

  int p() const noexcept { return p_; }
  int n() const noexcept { return n_; }
  int q() const noexcept { return q_; }
  /// Coefficients c_0..c_n of the modulus, c_n = 1.
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  FieldElem zero() const noexcept { return {0}; }
  FieldElem one() const noexcept { return {1}; }
  /// Image of the rational integer k in the prime field.
  FieldElem from_int(long long k) const;
  FieldElem from_coeffs(const std::vector<int>& coeffs) const;
  std::vector<int> coeffs(FieldElem a) const;
  FieldElem at(std::uint32_t index) const;

  FieldElem add(FieldElem a, FieldElem b) const { return {add_[idx(a, b)]}; }
  FieldElem sub(FieldElem a, FieldElem b) const { return {add_[idx(a, neg(b))]}; }
  FieldElem neg(FieldElem a) const { return {neg_[a.value]}; }
  FieldElem mul(FieldElem a, FieldElem b) const { return {mul_[idx(a, b)]}; }
  FieldElem inv(FieldElem a) const;
  FieldElem pow(FieldElem a, unsigned long long e) const;
  FieldElem frobenius(FieldElem a) const { return pow(a, static_cast<unsigned long long>(p_)); }

  /// Tr_{F_q/F_p}(a) as a residue in [0, p).
  int trace_to_prime(FieldElem a) const { return trace_[a.value]; }

  /// Additive character psi_q(a) = zeta_p^(unit * Tr(a)). unit = 1 is the
  /// fixed character; other units of F_p give the remaining nontrivial ones.
  CycRat psi_q(FieldElem a, int unit = 1) const;

  /// All q elements in index order.
  std::vector<FieldElem> enumerate() const;

  /// A fixed generator of F_q^x and its power / log tables.
  FieldElem generator() const noexcept { return {gen_pow_[1]}; }
  FieldElem gen_pow(std::uint32_t e) const { return {gen_pow_[e % static_cast<std::uint32_t>(q_ - 1)]}; }
  std::uint32_t gen_log(FieldElem a) const;

 private:
  std::size_t idx(FieldElem a, FieldElem b) const noexcept {
    return static_cast<std::size_t>(a.value) * static_cast<std::size_t>(q_) + b.value;
  }

  int p_;
  int n_;
  int q_;
  std::vector<int> modulus_;
  std::vector<std::uint32_t> add_, mul_, neg_, inv_;
  std::vector<int> trace_;
  std::vector<std::uint32_t> gen_pow_, gen_log_;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

FieldPtr field_make(int p, int n, long long bound = kDefaultFieldBound);

/// Whether the monic polynomial with coefficients c_0..c_n (c_n = 1) is
/// irreducible over F_p, by trial division by every monic polynomial of
/// degree 1..n/2.
bool is_irreducible_mod_p(const std::vector<int>& poly, int p);

}  // namespace homfour
