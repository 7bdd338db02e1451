#include "homfour/gspace.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace homfour {

long long size_bound_from_env() {
  if (const char* env = std::getenv("HOMFOUR_SIZE_BOUND")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
    throw std::invalid_argument("HOMFOUR_SIZE_BOUND must be a positive integer");
  }
  return kDefaultSizeBound;
}

// ---------------------------------------------------------------------------
// TorusAction

TorusAction::TorusAction(std::size_t rank, std::size_t coords, IntMatrix weights)
    : rank_(rank), coords_(coords), weights_(std::move(weights)) {
  if (weights_.size() != rank_) throw std::invalid_argument("torus action: weight matrix must have `rank` rows");
  for (const auto& row : weights_)
    if (row.size() != coords_) throw std::invalid_argument("torus action: weight row length must equal coordinate count");
}

TorusAction TorusAction::trivial(std::size_t coords) { return TorusAction(0, coords, {}); }

TorusAction TorusAction::homothety(std::size_t coords) {
  return TorusAction(1, coords, IntMatrix{std::vector<int>(coords, 1)});
}

TorusAction TorusAction::on_point(std::size_t rank) { return TorusAction(rank, 0, IntMatrix(rank)); }

TorusAction TorusAction::direct_sum(const TorusAction& a, const TorusAction& b) {
  IntMatrix w;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    std::vector<int> row(a.weights()[i]);
    row.resize(a.coords() + b.coords(), 0);
    w.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < b.rank(); ++i) {
    std::vector<int> row(a.coords(), 0);
    row.insert(row.end(), b.weights()[i].begin(), b.weights()[i].end());
    w.push_back(std::move(row));
  }
  return TorusAction(a.rank() + b.rank(), a.coords() + b.coords(), std::move(w));
}

// ---------------------------------------------------------------------------
// GSpace

namespace {

constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;

std::uint64_t checked_pow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / (b == 0 ? 1 : b)) return std::numeric_limits<std::uint64_t>::max();
    r *= b;
  }
  return r;
}

std::string point_str(PointView x) {
  std::ostringstream os;
  os << "(";
  for (std::size_t j = 0; j < x.size(); ++j) os << (j ? "," : "") << x[j].value;
  os << ")";
  return os.str();
}

std::string torus_str(const TorusElem& g) {
  std::ostringstream os;
  os << "gamma^(";
  for (std::size_t j = 0; j < g.size(); ++j) os << (j ? "," : "") << g[j];
  os << ")";
  return os.str();
}

// Per-coordinate multipliers chi_j(g) for a torus element.
std::vector<FieldElem> multipliers(const FieldCtx& f, const TorusAction& a, const TorusElem& g) {
  const long long order = f.q() - 1;
  std::vector<FieldElem> m(a.coords());
  for (std::size_t j = 0; j < a.coords(); ++j) {
    long long e = 0;
    for (std::size_t i = 0; i < a.rank(); ++i) e += static_cast<long long>(a.weight(i, j)) * g[i];
    e %= order;
    if (e < 0) e += order;
    m[j] = f.gen_pow(static_cast<std::uint32_t>(e));
  }
  return m;
}

void apply(const FieldCtx& f, const std::vector<FieldElem>& mult, PointView x, Point& out) {
  out.resize(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) out[j] = f.mul(mult[j], x[j]);
}

std::vector<TorusElem> generators(std::size_t rank) {
  std::vector<TorusElem> gens;
  for (std::size_t i = 0; i < rank; ++i) {
    TorusElem g(rank, 0);
    g[i] = 1;
    gens.push_back(std::move(g));
  }
  return gens;
}

}  // namespace

GSpace::GSpace(FieldPtr field, std::size_t coords, TorusAction action, std::string label)
    : field_(std::move(field)), coords_(coords), action_(std::move(action)), label_(std::move(label)) {
  torus_order_ = checked_pow(static_cast<std::uint64_t>(field_->q() - 1), action_.rank());
}

GSpacePtr GSpace::make(FieldPtr field, std::size_t coords, std::vector<Point> points, TorusAction action,
                       std::string label) {
  if (!field) throw std::invalid_argument("gspace: null field");
  if (action.coords() != coords) throw std::invalid_argument("gspace: action coordinate count mismatch");
  if (points.size() > kMaxSpacePoints) throw std::length_error("gspace: too many points in " + label);
  std::shared_ptr<GSpace> s(new GSpace(std::move(field), coords, std::move(action), std::move(label)));
  const auto q = static_cast<std::uint32_t>(s->field_->q());

  std::vector<std::pair<std::uint64_t, std::size_t>> keyed;
  keyed.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != coords) throw std::invalid_argument("gspace: point has wrong coordinate count");
    for (auto e : points[i])
      if (e.value >= q) throw std::invalid_argument("gspace: coordinate outside the field");
    keyed.emplace_back(s->code_of(points[i]), i);
  }
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 1; i < keyed.size(); ++i)
    if (keyed[i].first == keyed[i - 1].first)
      throw std::invalid_argument("gspace: duplicate point " + point_str(points[keyed[i].second]));

  s->codes_.reserve(keyed.size());
  s->coords_flat_.reserve(keyed.size() * coords);
  for (const auto& [code, i] : keyed) {
    s->codes_.push_back(code);
    s->coords_flat_.insert(s->coords_flat_.end(), points[i].begin(), points[i].end());
  }
  const std::uint64_t ambient = checked_pow(q, coords);
  if (ambient <= kDenseLimit) {
    s->dense_index_.assign(ambient, -1);
    for (std::size_t i = 0; i < s->codes_.size(); ++i) s->dense_index_[s->codes_[i]] = static_cast<std::int32_t>(i);
  }
  s->check_closed();
  s->build_orbits();
  return s;
}

std::uint64_t GSpace::code_of(PointView x) const {
  std::uint64_t c = 0;
  const auto q = static_cast<std::uint64_t>(field_->q());
  for (auto e : x) c = c * q + e.value;
  return c;
}

std::optional<std::size_t> GSpace::find(PointView x) const {
  if (x.size() != coords_) return std::nullopt;
  const auto q = static_cast<std::uint32_t>(field_->q());
  for (auto e : x)
    if (e.value >= q) return std::nullopt;
  const std::uint64_t c = code_of(x);
  if (!dense_index_.empty()) {
    const std::int32_t i = dense_index_[c];
    if (i < 0) return std::nullopt;
    return static_cast<std::size_t>(i);
  }
  auto it = std::lower_bound(codes_.begin(), codes_.end(), c);
  if (it == codes_.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - codes_.begin());
}

std::size_t GSpace::index_of(PointView x) const {
  auto i = find(x);
  if (!i) throw std::out_of_range("gspace: point " + point_str(x) + " is not in " + label_);
  return *i;
}

TorusElem GSpace::torus_elem(std::uint64_t i) const {
  const auto base = static_cast<std::uint64_t>(field_->q() - 1);
  TorusElem g(action_.rank());
  for (std::size_t k = action_.rank(); k-- > 0;) {
    g[k] = static_cast<std::uint32_t>(i % base);
    i /= base;
  }
  return g;
}

Point GSpace::act(const TorusElem& g, PointView x) const {
  if (g.size() != action_.rank()) throw std::invalid_argument("gspace: torus element has wrong rank");
  Point out;
  apply(*field_, multipliers(*field_, action_, g), x, out);
  return out;
}

void GSpace::check_closed() const {
  Point y;
  for (const auto& g : generators(action_.rank())) {
    const auto mult = multipliers(*field_, action_, g);
    for (std::size_t i = 0; i < size(); ++i) {
      apply(*field_, mult, point(i), y);
      if (!find(y))
        throw std::invalid_argument("gspace: " + label_ + " is not closed under the action: " + torus_str(g) + " . " +
                                    point_str(point(i)) + " = " + point_str(y));
    }
  }
}

void GSpace::build_orbits() {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  orbits_.class_of_.assign(size(), kUnset);
  std::vector<std::vector<FieldElem>> mults;
  mults.reserve(torus_order_);
  for (std::uint64_t t = 0; t < torus_order_; ++t) mults.push_back(multipliers(*field_, action_, torus_elem(t)));

  Point y;
  for (std::size_t i = 0; i < size(); ++i) {
    if (orbits_.class_of_[i] != kUnset) continue;
    const auto c = static_cast<std::uint32_t>(orbits_.orbits_.size());
    std::uint64_t count = 0;
    for (const auto& m : mults) {
      apply(*field_, m, point(i), y);
      const std::size_t j = index_of(y);
      if (orbits_.class_of_[j] == kUnset) {
        orbits_.class_of_[j] = c;
        ++count;
      }
    }
    orbits_.orbits_.push_back({i, count, torus_order_ / count});
  }
}

// ---------------------------------------------------------------------------
// EquivariantMap

MapPtr EquivariantMap::make(GSpacePtr source, GSpacePtr target, const PointFn& f, IntMatrix gpmap, std::string name) {
  if (!source || !target) throw std::invalid_argument("map: null space");
  if (source->field().p() != target->field().p() || source->field().q() != target->field().q())
    throw std::invalid_argument("map " + name + ": source and target live over different fields");
  if (gpmap.size() != target->action().rank())
    throw std::invalid_argument("map " + name + ": torus homomorphism must have one row per target torus factor");
  for (const auto& row : gpmap)
    if (row.size() != source->action().rank())
      throw std::invalid_argument("map " + name + ": torus homomorphism row length must equal source rank");

  std::shared_ptr<EquivariantMap> m(new EquivariantMap());
  m->source_ = std::move(source);
  m->target_ = std::move(target);
  m->gpmap_ = std::move(gpmap);
  m->name_ = std::move(name);
  m->image_.resize(m->source_->size());
  for (std::size_t i = 0; i < m->source_->size(); ++i) {
    Point y = f(m->source_->point(i));
    auto j = m->target_->find(y);
    if (!j)
      throw std::invalid_argument("map " + m->name_ + ": image " + point_str(y) + " of " +
                                  point_str(m->source_->point(i)) + " is not in " + m->target_->label());
    m->image_[i] = static_cast<std::uint32_t>(*j);
  }
  m->validate();
  const auto& so = m->source_->orbits();
  m->class_image_.resize(so.size());
  for (std::size_t c = 0; c < so.size(); ++c)
    m->class_image_[c] = static_cast<std::uint32_t>(m->target_->orbits().class_of(m->image_[so[c].rep]));
  return m;
}

TorusElem EquivariantMap::map_torus(const TorusElem& g) const {
  const long long order = source_->field().q() - 1;
  TorusElem h(gpmap_.size());
  for (std::size_t i = 0; i < gpmap_.size(); ++i) {
    long long e = 0;
    for (std::size_t j = 0; j < g.size(); ++j) e += static_cast<long long>(gpmap_[i][j]) * g[j];
    e %= order;
    if (e < 0) e += order;
    h[i] = static_cast<std::uint32_t>(e);
  }
  return h;
}

void EquivariantMap::validate() const {
  // Every group element when affordable; otherwise the coordinate generators,
  // which is equivalent since both sides are group actions.
  const GSpace& src = *source_;
  const GSpace& tgt = *target_;
  std::vector<TorusElem> elems;
  if (src.size() * src.torus_order() <= (std::uint64_t{1} << 22)) {
    for (std::uint64_t t = 0; t < src.torus_order(); ++t) elems.push_back(src.torus_elem(t));
  } else {
    elems = generators(src.action().rank());
  }
  Point gx, hy;
  for (const auto& g : elems) {
    const auto ms = multipliers(src.field(), src.action(), g);
    const auto mt = multipliers(tgt.field(), tgt.action(), map_torus(g));
    for (std::size_t i = 0; i < src.size(); ++i) {
      apply(src.field(), ms, src.point(i), gx);
      const std::size_t lhs = image_[src.index_of(gx)];
      apply(tgt.field(), mt, tgt.point(image_[i]), hy);
      auto rhs = tgt.find(hy);
      if (!rhs || *rhs != lhs) {
        PointView x = src.point(i);
        throw EquivarianceError("map " + name_ + " is not equivariant: witness x = " + point_str(x) + ", g = " +
                                    torus_str(g),
                                Point(x.begin(), x.end()), g);
      }
    }
  }
}

MapPtr compose(const MapPtr& g, const MapPtr& f) {
  if (f->target() != g->source()) throw std::invalid_argument("compose: maps are not composable");
  IntMatrix m(g->gpmap().size(), std::vector<int>(f->source()->action().rank(), 0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      for (std::size_t k = 0; k < f->gpmap().size(); ++k) m[i][j] += g->gpmap()[i][k] * f->gpmap()[k][j];
  const GSpace& mid = *f->target();
  const GSpace& tgt = *g->target();
  auto fn = [&](PointView x) {
    std::size_t y = f->image(f->source()->index_of(x));
    PointView z = tgt.point(g->image(y));
    (void)mid;
    return Point(z.begin(), z.end());
  };
  return EquivariantMap::make(f->source(), g->target(), fn, std::move(m), g->name() + "." + f->name());
}

// ---------------------------------------------------------------------------
// Builders

namespace {

std::vector<Point> all_tuples(const FieldCtx& f, std::size_t r) {
  const auto q = static_cast<std::uint64_t>(f.q());
  const std::uint64_t total = checked_pow(q, r);
  std::vector<Point> pts;
  pts.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    Point x(r);
    std::uint64_t c = code;
    for (std::size_t j = r; j-- > 0;) {
      x[j] = {static_cast<std::uint32_t>(c % q)};
      c /= q;
    }
    pts.push_back(std::move(x));
  }
  return pts;
}

void check_bound(const FieldCtx& f, std::size_t r, long long bound) {
  const std::uint64_t n = checked_pow(static_cast<std::uint64_t>(f.q()), r);
  if (bound <= 0 || n > static_cast<std::uint64_t>(bound))
    throw std::length_error("q^r = " + std::to_string(f.q()) + "^" + std::to_string(r) +
                            " exceeds the size bound " + std::to_string(bound));
}

bool is_zero(PointView x) {
  return std::all_of(x.begin(), x.end(), [](FieldElem e) { return e.value == 0; });
}

}  // namespace

GSpacePtr build_V(const FieldPtr& field, std::size_t r, std::string label, long long bound) {
  check_bound(*field, r, bound);
  return GSpace::make(field, r, all_tuples(*field, r), TorusAction::homothety(r), std::move(label));
}

GSpacePtr build_V_dual(const FieldPtr& field, std::size_t r, long long bound) {
  return build_V(field, r, "Vdual", bound);
}

GSpacePtr build_V_scheme(const FieldPtr& field, std::size_t r, std::string label, long long bound) {
  check_bound(*field, r, bound);
  return GSpace::make(field, r, all_tuples(*field, r), TorusAction::trivial(r), std::move(label));
}

GSpacePtr build_V_punctured(const FieldPtr& field, std::size_t r, std::string label, long long bound) {
  check_bound(*field, r, bound);
  std::vector<Point> pts;
  for (auto& x : all_tuples(*field, r))
    if (!is_zero(x)) pts.push_back(std::move(x));
  return GSpace::make(field, r, std::move(pts), TorusAction::homothety(r), std::move(label));
}

GSpacePtr build_A1(const FieldPtr& field) { return build_V(field, 1, "A1", field->q()); }

GSpacePtr build_A1_scheme(const FieldPtr& field) { return build_V_scheme(field, 1, "A1", field->q()); }

GSpacePtr build_Gm(const FieldPtr& field) { return build_V_punctured(field, 1, "Gm", field->q()); }

GSpacePtr build_point(const FieldPtr& field, std::size_t rank, std::string label) {
  return GSpace::make(field, 0, {Point{}}, TorusAction::on_point(rank), std::move(label));
}

GSpacePtr product(const GSpacePtr& a, const GSpacePtr& b, std::string label) {
  if (a->field().q() != b->field().q() || a->field().p() != b->field().p())
    throw std::invalid_argument("product: factors over different fields");
  if (a->size() * b->size() > kMaxSpacePoints) throw std::length_error("product: " + label + " is too large");
  std::vector<Point> pts;
  pts.reserve(a->size() * b->size());
  for (std::size_t i = 0; i < a->size(); ++i) {
    for (std::size_t j = 0; j < b->size(); ++j) {
      Point x(a->point(i).begin(), a->point(i).end());
      x.insert(x.end(), b->point(j).begin(), b->point(j).end());
      pts.push_back(std::move(x));
    }
  }
  return GSpace::make(a->field_ptr(), a->coords() + b->coords(), std::move(pts),
                      TorusAction::direct_sum(a->action(), b->action()), std::move(label));
}

GSpacePtr with_action(const GSpacePtr& space, TorusAction action, std::string label) {
  std::vector<Point> pts;
  pts.reserve(space->size());
  for (std::size_t i = 0; i < space->size(); ++i) pts.emplace_back(space->point(i).begin(), space->point(i).end());
  return GSpace::make(space->field_ptr(), space->coords(), std::move(pts), std::move(action), std::move(label));
}

GSpacePtr subspace(const GSpacePtr& space, const std::function<bool(PointView)>& keep, std::string label) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < space->size(); ++i)
    if (keep(space->point(i))) pts.emplace_back(space->point(i).begin(), space->point(i).end());
  return GSpace::make(space->field_ptr(), space->coords(), std::move(pts), space->action(), std::move(label));
}

std::vector<Point> projective_points(const FieldCtx& field, std::size_t r) {
  std::vector<Point> out;
  for (auto& x : all_tuples(field, r)) {
    auto it = std::find_if(x.begin(), x.end(), [](FieldElem e) { return e.value != 0; });
    if (it != x.end() && it->value == 1) out.push_back(std::move(x));
  }
  return out;
}

FieldElem pairing(const FieldCtx& field, PointView w, PointView v) {
  if (w.size() != v.size()) throw std::invalid_argument("pairing: length mismatch");
  FieldElem s = field.zero();
  for (std::size_t i = 0; i < w.size(); ++i) s = field.add(s, field.mul(w[i], v[i]));
  return s;
}

std::vector<std::pair<std::size_t, std::size_t>> incidence(const FieldCtx& field, std::size_t r) {
  const auto pts = projective_points(field, r);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t w = 0; w < pts.size(); ++w)
    for (std::size_t v = 0; v < pts.size(); ++v)
      if (pairing(field, pts[w], pts[v]).value == 0) out.emplace_back(w, v);
  return out;
}

// ---------------------------------------------------------------------------
// Map constructors

namespace {

IntMatrix identity_block(std::size_t rows, std::size_t cols, std::size_t offset) {
  IntMatrix m(rows, std::vector<int>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i) m[i][offset + i] = 1;
  return m;
}

}  // namespace

MapPtr quotient_map(const GSpacePtr& scheme, const GSpacePtr& stack, std::string name) {
  if (scheme->action().rank() != 0) throw std::invalid_argument("quotient_map: source must carry the trivial action");
  return EquivariantMap::make(
      scheme, stack, [](PointView x) { return Point(x.begin(), x.end()); },
      IntMatrix(stack->action().rank()), std::move(name));
}

MapPtr first_projection(const GSpacePtr& prod, const GSpacePtr& first, std::string name) {
  const std::size_t m = first->coords();
  return EquivariantMap::make(
      prod, first, [m](PointView x) { return Point(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(m)); },
      identity_block(first->action().rank(), prod->action().rank(), 0), std::move(name));
}

MapPtr second_projection(const GSpacePtr& prod, const GSpacePtr& second, std::string name) {
  const std::size_t skip = prod->coords() - second->coords();
  const std::size_t rank_skip = prod->action().rank() - second->action().rank();
  return EquivariantMap::make(
      prod, second, [skip](PointView x) { return Point(x.begin() + static_cast<std::ptrdiff_t>(skip), x.end()); },
      identity_block(second->action().rank(), prod->action().rank(), rank_skip), std::move(name));
}

MapPtr pairing_map(const GSpacePtr& dual_times_v, const GSpacePtr& a1, std::string name) {
  const FieldCtx& f = dual_times_v->field();
  const std::size_t r = dual_times_v->coords() / 2;
  return EquivariantMap::make(
      dual_times_v, a1,
      [&f, r](PointView x) { return Point{pairing(f, x.subspan(0, r), x.subspan(r, r))}; },
      IntMatrix{std::vector<int>(dual_times_v->action().rank(), 1)}, std::move(name));
}

MapPtr diagonal_map(const GSpacePtr& v, const GSpacePtr& v_times_v, std::string name) {
  IntMatrix m;
  for (std::size_t copy = 0; copy < 2; ++copy)
    for (std::size_t i = 0; i < v->action().rank(); ++i) {
      std::vector<int> row(v->action().rank(), 0);
      row[i] = 1;
      m.push_back(std::move(row));
    }
  return EquivariantMap::make(
      v, v_times_v,
      [](PointView x) {
        Point y(x.begin(), x.end());
        y.insert(y.end(), x.begin(), x.end());
        return y;
      },
      std::move(m), std::move(name));
}

MapPtr difference_map(const GSpacePtr& a2_diag, const GSpacePtr& a1, std::string name) {
  const FieldCtx& f = a2_diag->field();
  return EquivariantMap::make(
      a2_diag, a1, [&f](PointView x) { return Point{f.sub(x[0], x[1])}; }, IntMatrix{{1}}, std::move(name));
}

MapPtr linear_map(const GSpacePtr& v, const GSpacePtr& w, const std::vector<std::vector<FieldElem>>& matrix,
                  std::string name) {
  if (matrix.size() != w->coords()) throw std::invalid_argument("linear_map: matrix row count must equal target rank");
  for (const auto& row : matrix)
    if (row.size() != v->coords()) throw std::invalid_argument("linear_map: matrix column count must equal source rank");
  const FieldCtx& f = v->field();
  return EquivariantMap::make(
      v, w,
      [&f, matrix](PointView x) {
        Point y(matrix.size());
        for (std::size_t i = 0; i < matrix.size(); ++i) y[i] = pairing(f, matrix[i], x);
        return y;
      },
      IntMatrix{{1}}, std::move(name));
}

std::vector<std::vector<FieldElem>> transpose(const std::vector<std::vector<FieldElem>>& matrix) {
  if (matrix.empty()) return {};
  std::vector<std::vector<FieldElem>> t(matrix[0].size(), std::vector<FieldElem>(matrix.size()));
  for (std::size_t i = 0; i < matrix.size(); ++i)
    for (std::size_t j = 0; j < matrix[i].size(); ++j) t[j][i] = matrix[i][j];
  return t;
}

MapPtr zero_section(const GSpacePtr& point, const GSpacePtr& v, std::string name) {
  const std::size_t r = v->coords();
  return EquivariantMap::make(
      point, v, [r](PointView) { return Point(r, FieldElem{0}); },
      identity_block(v->action().rank(), point->action().rank(), 0), std::move(name));
}

MapPtr structural_map(const GSpacePtr& space, const GSpacePtr& point, std::string name) {
  return EquivariantMap::make(
      space, point, [](PointView) { return Point{}; },
      identity_block(point->action().rank(), space->action().rank(), 0), std::move(name));
}

MapPtr inclusion_map(const GSpacePtr& sub, const GSpacePtr& ambient, std::string name) {
  const std::size_t k = sub->action().rank();
  return EquivariantMap::make(
      sub, ambient, [](PointView x) { return Point(x.begin(), x.end()); }, identity_block(k, k, 0),
      std::move(name));
}

}  // namespace homfour
