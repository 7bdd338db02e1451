#include "homfour/gf.hpp"

#include <stdexcept>
#include <string>

namespace homfour {

namespace {

using Poly = std::vector<int>;  // c_0..c_d over Z/p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b.
Poly poly_mod(Poly a, const Poly& b, int p) {
  const std::size_t db = b.size() - 1;
  trim(a);
  while (a.size() > db) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

// Monic polynomial of degree d whose lower coefficients encode `code` in base p.
Poly monic_from_code(long long code, int d, int p) {
  Poly f(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 0; i < d; ++i) {
    f[static_cast<std::size_t>(i)] = static_cast<int>(code % p);
    code /= p;
  }
  f[static_cast<std::size_t>(d)] = 1;
  return f;
}

long long ipow_ll(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<int>& poly, int p) {
  const int n = static_cast<int>(poly.size()) - 1;
  if (n < 1) return false;
  if (n == 1) return true;
  for (int d = 1; d <= n / 2; ++d) {
    const long long count = ipow_ll(p, d);
    for (long long code = 0; code < count; ++code) {
      if (poly_mod(poly, monic_from_code(code, d, p), p).empty()) return false;
    }
  }
  return true;
}

FieldCtx::FieldCtx(int p, int n, long long bound) : p_(p), n_(n) {
  if (!is_prime(p)) throw std::invalid_argument("field: characteristic " + std::to_string(p) + " is not prime");
  if (n < 1) throw std::invalid_argument("field: extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < n; ++i) {
    q *= p;
    if (q > bound) throw std::length_error("field: q = p^n exceeds the size bound " + std::to_string(bound));
  }
  q_ = static_cast<int>(q);

  const long long candidates = ipow_ll(p, n);
  for (long long code = 0; code < candidates; ++code) {
    Poly f = monic_from_code(code, n, p);
    if (is_irreducible_mod_p(f, p)) {
      modulus_ = std::move(f);
      break;
    }
  }

  const auto qs = static_cast<std::size_t>(q_);
  add_.resize(qs * qs);
  mul_.resize(qs * qs);
  neg_.resize(qs);
  inv_.assign(qs, 0);
  trace_.resize(qs);

  std::vector<Poly> elems(qs);
  for (std::size_t a = 0; a < qs; ++a) elems[a] = coeffs({static_cast<std::uint32_t>(a)});

  for (std::size_t a = 0; a < qs; ++a) {
    Poly ng(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ng[i] = (p - elems[a][i]) % p;
    neg_[a] = from_coeffs(ng).value;
    for (std::size_t b = 0; b < qs; ++b) {
      Poly s(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) s[i] = (elems[a][i] + elems[b][i]) % p;
      add_[a * qs + b] = from_coeffs(s).value;

      Poly prod(static_cast<std::size_t>(2 * n - 1), 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + elems[a][i] * elems[b][j]) % p;
      // The prime field needs no reduction (its modulus is x).
      Poly red = n == 1 ? prod : poly_mod(prod, modulus_, p);
      red.resize(static_cast<std::size_t>(n), 0);
      mul_[a * qs + b] = from_coeffs(red).value;
    }
  }
  for (std::size_t a = 1; a < qs; ++a)
    for (std::size_t b = 1; b < qs; ++b)
      if (mul_[a * qs + b] == 1) inv_[a] = static_cast<std::uint32_t>(b);

  for (std::size_t a = 0; a < qs; ++a) {
    FieldElem x{static_cast<std::uint32_t>(a)};
    FieldElem t = zero();
    FieldElem power = x;
    for (int i = 0; i < n; ++i) {
      t = add(t, power);
      power = frobenius(power);
    }
    if (t.value >= static_cast<std::uint32_t>(p)) throw std::logic_error("field: trace left the prime field");
    trace_[a] = static_cast<int>(t.value);
  }

  // Smallest-index generator of the multiplicative group.
  const auto order = static_cast<std::uint32_t>(q_ - 1);
  for (std::uint32_t g = 1; g < qs; ++g) {
    std::vector<std::uint32_t> powers;
    powers.reserve(order);
    std::uint32_t cur = 1;
    bool ok = true;
    for (std::uint32_t e = 0; e < order; ++e) {
      if (e > 0 && cur == 1) {
        ok = false;
        break;
      }
      powers.push_back(cur);
      cur = mul_[cur * qs + g];
    }
    if (!ok) continue;
    gen_pow_ = std::move(powers);
    break;
  }
  gen_log_.assign(qs, 0);
  for (std::uint32_t e = 0; e < order; ++e) gen_log_[gen_pow_[e]] = e;
}

FieldElem FieldCtx::from_int(long long k) const {
  long long r = k % p_;
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

FieldElem FieldCtx::from_coeffs(const std::vector<int>& c) const {
  if (c.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("field: coefficient vector has wrong length");
  std::uint32_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] < 0 || c[i] >= p_) throw std::invalid_argument("field: coefficient not reduced mod p");
    v = v * static_cast<std::uint32_t>(p_) + static_cast<std::uint32_t>(c[i]);
  }
  return {v};
}

std::vector<int> FieldCtx::coeffs(FieldElem a) const {
  std::vector<int> c(static_cast<std::size_t>(n_));
  std::uint32_t v = a.value;
  for (int i = 0; i < n_; ++i) {
    c[static_cast<std::size_t>(i)] = static_cast<int>(v % static_cast<std::uint32_t>(p_));
    v /= static_cast<std::uint32_t>(p_);
  }
  return c;
}

FieldElem FieldCtx::at(std::uint32_t index) const {
  if (index >= static_cast<std::uint32_t>(q_)) throw std::out_of_range("field: element index out of range");
  return {index};
}

FieldElem FieldCtx::inv(FieldElem a) const {
  if (a.value == 0) throw std::domain_error("field: inversion of zero");
  return {inv_[a.value]};
}

FieldElem FieldCtx::pow(FieldElem a, unsigned long long e) const {
  FieldElem r = one();
  while (e > 0) {
    if (e & 1ULL) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

CycRat FieldCtx::psi_q(FieldElem a, int unit) const {
  long long e = static_cast<long long>(unit) * trace_to_prime(a) % p_;
  if (e < 0) e += p_;
  return CycRat::zeta_pow(p_, static_cast<int>(e));
}

std::vector<FieldElem> FieldCtx::enumerate() const {
  std::vector<FieldElem> out(static_cast<std::size_t>(q_));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = {static_cast<std::uint32_t>(i)};
  return out;
}

std::uint32_t FieldCtx::gen_log(FieldElem a) const {
  if (a.value == 0) throw std::domain_error("field: logarithm of zero");
  return gen_log_[a.value];
}

FieldPtr field_make(int p, int n, long long bound) { return std::make_shared<const FieldCtx>(p, n, bound); }

}  // namespace homfour
