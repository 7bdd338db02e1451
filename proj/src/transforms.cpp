#include "homfour/transforms.hpp"

#include <limits>
#include <optional>
#include <stdexcept>

namespace homfour {

HomSpacePtr HomSpace::make(FieldPtr field, std::size_t r, long long bound) {
  std::shared_ptr<HomSpace> hs(new HomSpace());
  hs->field_ = field;
  hs->r_ = r;
  hs->v_ = build_V(field, r, "V", bound);
  hs->vdual_ = build_V(field, r, "Vdual", bound);
  hs->pv_ = build_V_punctured(field, r, "PV", bound);
  hs->pvdual_ = build_V_punctured(field, r, "PVdual", bound);
  hs->v_scheme_ = build_V_scheme(field, r, "V", bound);
  hs->vdual_scheme_ = build_V_scheme(field, r, "Vdual", bound);
  hs->rho_ = quotient_map(hs->v_scheme_, hs->v_, "rho");
  hs->rho_dual_ = quotient_map(hs->vdual_scheme_, hs->vdual_, "rho_dual");
  hs->j_ = inclusion_map(hs->pv_, hs->v_, "j");
  hs->j_dual_ = inclusion_map(hs->pvdual_, hs->vdual_, "j_dual");

  const auto pts = projective_points(*field, r);
  hs->incident_.resize(pts.size());
  for (std::size_t w = 0; w < pts.size(); ++w)
    for (std::size_t v = 0; v < pts.size(); ++v)
      if (pairing(*field, pts[w], pts[v]).value == 0) hs->incident_[w].push_back(static_cast<std::uint32_t>(v));
  return hs;
}

const std::vector<std::uint8_t>& HomSpace::pair_trace() const {
  std::call_once(pair_once_, [this] {
    const std::size_t n = v_scheme_->size();
    pair_trace_.resize(n * n);
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t v = 0; v < n; ++v)
        pair_trace_[w * n + v] =
            static_cast<std::uint8_t>(field_->trace_to_prime(pairing(*field_, v_scheme_->point(w), v_scheme_->point(v))));
  });
  return pair_trace_;
}

namespace {

void require_on(const TraceFunction& t, const GSpacePtr& space, const char* what) {
  if (!t.space || !same_space(*t.space, *space) || t.values.size() != space->orbits().size())
    throw std::invalid_argument(std::string(what) + ": input must be a function on " + space->label() + " (" +
                                std::to_string(space->orbits().size()) + " classes)");
}

TraceFunction incidence_transform(const HomSpace& hs, const TraceFunction& t, const GSpacePtr& target,
                                  SignMode mode) {
  const int p = hs.p();
  const std::size_t np = hs.proj_count();
  CycRat total(p);
  for (std::size_t c = 1; c <= np; ++c) total += t.values[c];
  const CycRat base = t.values[0] - total;
  const BigInt q(hs.q());

  TraceFunction out{target, {}};
  out.values.reserve(np + 1);
  out.values.push_back(base + CycRat(total).mul_int(q));
  for (std::size_t w = 0; w < np; ++w) {
    CycRat inc(p);
    for (auto v : hs.incident()[w]) inc += t.values[v + 1];
    out.values.push_back(base + inc.mul_int(q));
  }
  if (mode == SignMode::Default && hs.r() % 2 == 1)
    for (auto& v : out.values) v.mul_int(-1);
  return out;
}

// Values over a common denominator as int64 coefficient rows, when every
// partial sum of `terms` of them stays far from overflow.
struct IntRows {
  std::vector<std::int64_t> coeffs;  // row-major, width = basis length
  std::size_t width = 0;
  BigInt den;
};

std::optional<IntRows> to_int_rows(const std::vector<CycRat>& values, std::size_t terms) {
  IntRows rows;
  rows.den = 1;
  for (const auto& v : values) mpz_lcm(rows.den.get_mpz_t(), rows.den.get_mpz_t(), v.den().get_mpz_t());
  rows.width = values.empty() ? 1 : values[0].num().size();
  const BigInt limit = BigInt(std::numeric_limits<std::int64_t>::max() / 4) / BigInt(static_cast<unsigned long>(terms + 1));
  rows.coeffs.reserve(values.size() * rows.width);
  for (const auto& v : values) {
    const BigInt factor = rows.den / v.den();
    for (const auto& c : v.num()) {
      BigInt s = c * factor;
      if (abs(s) > limit) return std::nullopt;
      rows.coeffs.push_back(s.get_si());
    }
  }
  return rows;
}

TraceFunction deligne_transform(const HomSpace& hs, const TraceFunction& t, const GSpacePtr& target, int unit) {
  const int p = hs.p();
  const std::size_t n = target->size();
  const auto& tr = hs.pair_trace();
  long long u = unit % p;
  if (u < 0) u += p;
  if (u == 0) throw std::invalid_argument("four_deligne: character unit must be nonzero mod p");

  TraceFunction out{target, std::vector<CycRat>(n, CycRat(p))};
  const auto rows = to_int_rows(t.values, n);
  for (std::size_t w = 0; w < n; ++w) {
    const std::uint8_t* row = tr.data() + w * n;
    CycRat acc(p);
    if (rows) {
      std::vector<std::int64_t> bucket(static_cast<std::size_t>(p) * rows->width, 0);
      for (std::size_t v = 0; v < n; ++v) {
        const std::int64_t* c = rows->coeffs.data() + v * rows->width;
        std::int64_t* b = bucket.data() + static_cast<std::size_t>(row[v]) * rows->width;
        for (std::size_t i = 0; i < rows->width; ++i) b[i] += c[i];
      }
      for (int a = 0; a < p; ++a) {
        std::vector<BigInt> num(rows->width);
        bool nonzero = false;
        for (std::size_t i = 0; i < rows->width; ++i) {
          num[i] = static_cast<long>(bucket[static_cast<std::size_t>(a) * rows->width + i]);
          nonzero = nonzero || num[i] != 0;
        }
        if (!nonzero) continue;
        acc += CycRat::from_parts(p, std::move(num), rows->den).mul_zeta(static_cast<int>((a * u) % p));
      }
    } else {
      std::vector<CycRat> bucket(static_cast<std::size_t>(p), CycRat(p));
      for (std::size_t v = 0; v < n; ++v) bucket[row[v]] += t.values[v];
      for (int a = 0; a < p; ++a) acc += bucket[static_cast<std::size_t>(a)].mul_zeta(static_cast<int>((a * u) % p));
    }
    if (hs.r() % 2 == 1) acc.mul_int(-1);
    out.values[w] = std::move(acc);
  }
  return out;
}

TraceFunction incidence_sum(const HomSpace& hs, const TraceFunction& g, const GSpacePtr& target) {
  const int p = hs.p();
  TraceFunction out{target, std::vector<CycRat>(hs.proj_count(), CycRat(p))};
  for (std::size_t w = 0; w < hs.proj_count(); ++w) {
    for (auto v : hs.incident()[w]) out.values[w] += g.values[v];
    if (hs.r() % 2 == 1) out.values[w].mul_int(-1);
  }
  return out;
}

}  // namespace

TraceFunction four_hom(const HomSpace& hs, const TraceFunction& t, SignMode mode) {
  require_on(t, hs.V(), "four_hom");
  return incidence_transform(hs, t, hs.Vdual(), mode);
}

TraceFunction four_hom_dual(const HomSpace& hs, const TraceFunction& t, SignMode mode) {
  require_on(t, hs.Vdual(), "four_hom_dual");
  return incidence_transform(hs, t, hs.V(), mode);
}

DefinitionalFourier::DefinitionalFourier(HomSpacePtr hs) : hs_(std::move(hs)) {
  prod_ = homfour::product(hs_->Vdual(), hs_->V(), "Vdual x V");
  a1_ = build_A1(hs_->field_ptr());
  pr_dual_ = first_projection(prod_, hs_->Vdual(), "pr_dual");
  pr_ = second_projection(prod_, hs_->V(), "pr");
  mu_ = pairing_map(prod_, a1_, "mu");
  mu_psi_ = pullback(*mu_, builtin_Psi(a1_));
}

TraceFunction DefinitionalFourier::apply(const TraceFunction& t) const {
  require_on(t, hs_->V(), "four_hom_definitional");
  const TraceFunction kernel = tensor(pullback(*pr_, t), mu_psi_);
  return shift(pushforward_shriek(*pr_dual_, kernel), static_cast<long long>(hs_->r()) - 1);
}

TraceFunction four_hom_definitional(const HomSpacePtr& hs, const TraceFunction& t) {
  return DefinitionalFourier(hs).apply(t);
}

TraceFunction four_deligne(const HomSpace& hs, const TraceFunction& t, int unit) {
  require_on(t, hs.V_scheme(), "four_deligne");
  return deligne_transform(hs, t, hs.Vdual_scheme(), unit);
}

TraceFunction four_deligne_dual(const HomSpace& hs, const TraceFunction& t, int unit) {
  require_on(t, hs.Vdual_scheme(), "four_deligne_dual");
  return deligne_transform(hs, t, hs.V_scheme(), unit);
}

TraceFunction radon(const HomSpace& hs, const TraceFunction& g) {
  require_on(g, hs.PV(), "radon");
  return incidence_sum(hs, g, hs.PVdual());
}

TraceFunction radon_dual(const HomSpace& hs, const TraceFunction& g) {
  require_on(g, hs.PVdual(), "radon_dual");
  return incidence_sum(hs, g, hs.PV());
}

TraceFunction radon_double(const HomSpace& hs, const TraceFunction& g) { return radon_dual(hs, radon(hs, g)); }

DefinitionalRadon::DefinitionalRadon(HomSpacePtr hs) : hs_(std::move(hs)) {
  const FieldCtx& f = hs_->field();
  const std::size_t r = hs_->r();
  const GSpace& pvd = *hs_->PVdual();
  const GSpace& pv = *hs_->PV();
  std::vector<Point> pts;
  for (std::size_t i = 0; i < pvd.size(); ++i) {
    for (std::size_t k = 0; k < pv.size(); ++k) {
      if (pairing(f, pvd.point(i), pv.point(k)).value != 0) continue;
      Point x(pvd.point(i).begin(), pvd.point(i).end());
      x.insert(x.end(), pv.point(k).begin(), pv.point(k).end());
      pts.push_back(std::move(x));
    }
  }
  h_ = GSpace::make(hs_->field_ptr(), 2 * r, std::move(pts),
                    TorusAction::direct_sum(TorusAction::homothety(r), TorusAction::homothety(r)), "H");
  q_dual_ = first_projection(h_, hs_->PVdual(), "q_dual");
  q_ = second_projection(h_, hs_->PV(), "q");
}

TraceFunction DefinitionalRadon::apply(const TraceFunction& g) const {
  require_on(g, hs_->PV(), "radon_definitional");
  return shift(pushforward_shriek(*q_dual_, pullback(*q_, g)), static_cast<long long>(hs_->r()) - 2);
}

TraceFunction radon_definitional(const HomSpacePtr& hs, const TraceFunction& g) {
  return DefinitionalRadon(hs).apply(g);
}

TraceFunction rho_pullback(const HomSpace& hs, const TraceFunction& t) { return pullback(*hs.rho(), t); }

TraceFunction rho_pullback_dual(const HomSpace& hs, const TraceFunction& t) { return pullback(*hs.rho_dual(), t); }

TraceFunction j_shriek(const HomSpace& hs, const TraceFunction& g) { return pushforward_shriek(*hs.j(), g); }

TraceFunction restrict_dual(const HomSpace& hs, const TraceFunction& t) { return pullback(*hs.j_dual(), t); }

}  // namespace homfour
