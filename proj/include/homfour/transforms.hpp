#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "homfour/trace.hpp"

namespace homfour {

enum class SignMode {
  Default,          // epsilon_r = (-1)^r, agrees with the definitional transform
  Unsigned,  // the unsigned incidence formula
};

class HomSpace;
using HomSpacePtr = std::shared_ptr<const HomSpace>;

/// The rank-r geometry over F_q shared by every transform: V and its dual
/// with homothety (class 0 is the zero class, then P(V) in normalized
/// lexicographic order), the punctured spaces whose classes are P(V) and
/// P(V^dual), the scheme-level copies, the quotient maps and the incidence
/// lists.
class HomSpace {
 public:
  static HomSpacePtr make(FieldPtr field, std::size_t r, long long bound = size_bound_from_env());

  const FieldCtx& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::size_t r() const noexcept { return r_; }
  int q() const noexcept { return field_->q(); }
  int p() const noexcept { return field_->p(); }

  const GSpacePtr& V() const noexcept { return v_; }
  const GSpacePtr& Vdual() const noexcept { return vdual_; }
  const GSpacePtr& PV() const noexcept { return pv_; }
  const GSpacePtr& PVdual() const noexcept { return pvdual_; }
  const GSpacePtr& V_scheme() const noexcept { return v_scheme_; }
  const GSpacePtr& Vdual_scheme() const noexcept { return vdual_scheme_; }

  const MapPtr& rho() const noexcept { return rho_; }
  const MapPtr& rho_dual() const noexcept { return rho_dual_; }
  /// Inclusions of the punctured spaces (classes P(V) -> |V|).
  const MapPtr& j() const noexcept { return j_; }
  const MapPtr& j_dual() const noexcept { return j_dual_; }

  /// Number of projective points (q^r - 1)/(q - 1).
  std::size_t proj_count() const noexcept { return incident_.size(); }
  /// For each projective index w, the projective indices v with <w, v> = 0.
  /// The pairing is symmetric, so the same lists serve both directions.
  const std::vector<std::vector<std::uint32_t>>& incident() const noexcept { return incident_; }

  /// Tr(<w, v>) for scheme points w, v, row-major; built on first use.
  const std::vector<std::uint8_t>& pair_trace() const;

 private:
  HomSpace() = default;

  FieldPtr field_;
  std::size_t r_ = 0;
  GSpacePtr v_, vdual_, pv_, pvdual_, v_scheme_, vdual_scheme_;
  MapPtr rho_, rho_dual_, j_, j_dual_;
  std::vector<std::vector<std::uint32_t>> incident_;
  mutable std::once_flag pair_once_;
  mutable std::vector<std::uint8_t> pair_trace_;
};

/// Closed-form homogeneous transform |V| -> |V^dual|:
///   t'(w) = e [ t(0) - sum_P t + q sum_{v in P, <w,v> = 0} t(v) ],
/// with the incidence condition read literally at w = 0 (all v).
TraceFunction four_hom(const HomSpace& hs, const TraceFunction& t, SignMode mode = SignMode::Default);
/// Same transform from |V^dual| back to |V|.
TraceFunction four_hom_dual(const HomSpace& hs, const TraceFunction& t, SignMode mode = SignMode::Default);

/// pr^dual_!(pr^* t (x) mu^* Psi)[r-1], evaluated with the trace engine on
/// V^dual x V with its two-dimensional torus.
class DefinitionalFourier {
 public:
  explicit DefinitionalFourier(HomSpacePtr hs);

  const GSpacePtr& product() const noexcept { return prod_; }
  TraceFunction apply(const TraceFunction& t) const;

 private:
  HomSpacePtr hs_;
  GSpacePtr prod_, a1_;
  MapPtr pr_, pr_dual_, mu_;
  TraceFunction mu_psi_;
};

TraceFunction four_hom_definitional(const HomSpacePtr& hs, const TraceFunction& t);

/// t'(w) = (-1)^r sum_{v in V(F_q)} t(v) psi_q(unit <w, v>) on scheme points.
TraceFunction four_deligne(const HomSpace& hs, const TraceFunction& t, int unit = 1);
TraceFunction four_deligne_dual(const HomSpace& hs, const TraceFunction& t, int unit = 1);

/// (-1)^r sum over incident v of g(v): functions on P(V) -> P(V^dual).
TraceFunction radon(const HomSpace& hs, const TraceFunction& g);
TraceFunction radon_dual(const HomSpace& hs, const TraceFunction& g);
/// radon_dual(radon(g)).
TraceFunction radon_double(const HomSpace& hs, const TraceFunction& g);
/// q_! q^* g [r-2] through the incidence correspondence H in
/// P(V^dual) x P(V), evaluated by the trace engine.
class DefinitionalRadon {
 public:
  explicit DefinitionalRadon(HomSpacePtr hs);

  const GSpacePtr& incidence_space() const noexcept { return h_; }
  TraceFunction apply(const TraceFunction& g) const;

 private:
  HomSpacePtr hs_;
  GSpacePtr h_;
  MapPtr q_dual_, q_;
};

TraceFunction radon_definitional(const HomSpacePtr& hs, const TraceFunction& g);

/// Class functions extended to scheme points.
TraceFunction rho_pullback(const HomSpace& hs, const TraceFunction& t);
TraceFunction rho_pullback_dual(const HomSpace& hs, const TraceFunction& t);

/// Extension by zero from P(V) to |V|, via the engine.
TraceFunction j_shriek(const HomSpace& hs, const TraceFunction& g);
/// Restriction from |V^dual| to P(V^dual).
TraceFunction restrict_dual(const HomSpace& hs, const TraceFunction& t);

}  // namespace homfour
