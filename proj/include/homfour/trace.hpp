#pragma once

#include <vector>

#include "homfour/exactnum.hpp"
#include "homfour/gspace.hpp"

namespace homfour {

/// A Q(zeta_p)-valued function on the isomorphism classes of a GSpace; for a
/// space with trivial torus the classes are the points themselves.
struct TraceFunction {
  GSpacePtr space;
  std::vector<CycRat> values;

  int p() const { return space->field().p(); }
  std::size_t size() const noexcept { return values.size(); }
  const CycRat& operator[](std::size_t c) const { return values.at(c); }
  CycRat& operator[](std::size_t c) { return values.at(c); }
};

/// Same point set, action and field (pointer identity not required).
bool same_space(const GSpace& a, const GSpace& b);

bool operator==(const TraceFunction& a, const TraceFunction& b);

TraceFunction zero_function(const GSpacePtr& space);
TraceFunction constant(const GSpacePtr& space, const CycRat& value);
TraceFunction constant(const GSpacePtr& space, long long value);
TraceFunction delta(const GSpacePtr& space, std::size_t cls);
/// Checks length and value field against the space.
TraceFunction make_function(const GSpacePtr& space, std::vector<CycRat> values);

/// tau_{f^*K}(x) = tau_K(f(x)).
TraceFunction pullback(const EquivariantMap& f, const TraceFunction& t);

/// Pair-sum rule: at a target class with representative y,
///   (1 / (q-1)^{k_src}) * sum over (x, g in T_tgt) with f(x) = g.y of t(x).
TraceFunction pushforward_shriek(const EquivariantMap& f, const TraceFunction& t);

/// Pointwise product.
TraceFunction tensor(const TraceFunction& a, const TraceFunction& b);
TraceFunction add(const TraceFunction& a, const TraceFunction& b);
TraceFunction sub(const TraceFunction& a, const TraceFunction& b);
TraceFunction scale(const TraceFunction& t, const CycRat& c);
TraceFunction scale(const TraceFunction& t, const BigInt& c);

/// [n]: multiplies by (-1)^n.
TraceFunction shift(const TraceFunction& t, long long n);
/// (m): multiplies by q^{-m}.
TraceFunction tate_twist(const TraceFunction& t, long long m);

/// a(x) * b(y) on the classes of a x b, via the two projections.
TraceFunction external_product(const TraceFunction& a, const TraceFunction& b, const GSpacePtr& prod);

/// The homogeneous kernel on [A^1/G_m]: closed class 1-q, open class 1.
TraceFunction builtin_Psi(const GSpacePtr& a1);
TraceFunction builtin_Psi(const FieldPtr& field);
/// Its extension-by-zero companion: closed 0, open 1.
TraceFunction builtin_Psi_prime(const GSpacePtr& a1);
TraceFunction builtin_Psi_prime(const FieldPtr& field);
/// Artin-Schreier function a -> psi_q(unit * a) on the scheme A^1(F_q).
TraceFunction builtin_Lpsi(const GSpacePtr& a1_scheme, int unit = 1);
TraceFunction builtin_Lpsi(const FieldPtr& field, int unit = 1);

}  // namespace homfour
