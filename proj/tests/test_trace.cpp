#include <doctest.h>

#include "homfour/trace.hpp"
#include "homfour/verify.hpp"

using namespace homfour;

namespace {

CycRat I(long long k, int p) { return CycRat::from_int(k, p); }

// Oracle: the pair sum over (x, g) with f(x) = g.y, point by point.
TraceFunction pair_sum_oracle(const EquivariantMap& f, const TraceFunction& t) {
  const GSpace& src = *f.source();
  const GSpace& tgt = *f.target();
  const int p = src.field().p();
  TraceFunction out = zero_function(f.target());
  for (std::size_t d = 0; d < tgt.orbits().size(); ++d) {
    PointView y = tgt.class_rep(d);
    CycRat acc(p);
    for (std::size_t x = 0; x < src.size(); ++x) {
      PointView fx = tgt.point(f.image(x));
      for (std::uint64_t k = 0; k < tgt.torus_order(); ++k) {
        const Point gy = tgt.act(tgt.torus_elem(k), y);
        if (std::equal(gy.begin(), gy.end(), fx.begin())) acc += t.values[src.orbits().class_of(x)];
      }
    }
    acc.div_int(BigInt(static_cast<unsigned long>(src.torus_order())));
    out.values[d] = acc;
  }
  return out;
}

struct Diagram {
  GSpacePtr a1, a1s, pt0, bgm;
  MapPtr quotient, to_point, stack_to_point, g;
};

Diagram diagram(const FieldPtr& f) {
  Diagram d;
  d.a1 = build_A1(f);
  d.a1s = build_A1_scheme(f);
  d.pt0 = build_point(f, 0, "Spec");
  d.bgm = build_point(f, 1, "BGm");
  d.quotient = quotient_map(d.a1s, d.a1);
  d.to_point = structural_map(d.a1s, d.pt0);
  d.stack_to_point = structural_map(d.a1, d.pt0);
  d.g = EquivariantMap::make(d.pt0, d.bgm, [](PointView) { return Point{}; }, IntMatrix(1), "g");
  return d;
}

}  // namespace

TEST_CASE("pullback") {
  auto f3 = field_make(3, 1);
  auto v = build_V(f3, 2);
  auto vs = build_V_scheme(f3, 2);
  auto rho = quotient_map(vs, v);
  auto id = inclusion_map(v, v);
  const TraceFunction t = random_function(v, 5);
  CHECK(pullback(*id, t) == t);
  const TraceFunction d0 = pullback(*rho, delta(v, 0));
  CHECK(d0 == delta(vs, 0));
  CHECK(pullback(*rho, constant(v, 1)) == constant(vs, 1));
  CHECK_THROWS_AS(pullback(*rho, constant(vs, 1)), std::invalid_argument);
}

TEST_CASE("pushforward: Psi from the Artin-Schreier function") {
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
    auto f = field_make(p, n);
    const Diagram d = diagram(f);
    const int q = f->q();
    const TraceFunction psi = shift(pushforward_shriek(*d.quotient, builtin_Lpsi(d.a1s)), 1);
    CHECK(psi == make_function(d.a1, {I(1 - q, p), I(1, p)}));
    CHECK(psi == builtin_Psi(d.a1));
    // Mass of Psi vanishes.
    CHECK(pushforward_shriek(*d.stack_to_point, psi) == zero_function(d.pt0));
    // Point -> B Gm.
    CHECK(pushforward_shriek(*d.g, constant(d.pt0, 1)) == constant(d.bgm, q - 1));
  }
}

TEST_CASE("section function sums to zero") {
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {7, 1}}) {
    auto f = field_make(p, n);
    const Diagram d = diagram(f);
    for (std::size_t a = 0; a < d.a1s->size(); ++a) {
      TraceFunction phi = constant(d.a1s, 1);
      phi.values[a] = I(1 - f->q(), p);
      CHECK(pushforward_shriek(*d.to_point, phi) == zero_function(d.pt0));
    }
  }
}

TEST_CASE("class-form pushforward equals the pair-sum oracle") {
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    auto f = field_make(p, n);
    const Diagram d = diagram(f);
    auto v = build_V(f, 2);
    auto vd = build_V_dual(f, 2);
    auto prod = product(vd, v, "Vdual x V");
    auto a1 = d.a1;
    std::vector<MapPtr> maps = {d.quotient,
                                d.to_point,
                                d.stack_to_point,
                                d.g,
                                first_projection(prod, vd),
                                second_projection(prod, v),
                                pairing_map(prod, a1),
                                inclusion_map(build_V_punctured(f, 2), v),
                                quotient_map(build_V_scheme(f, 2), v),
                                structural_map(v, d.bgm),
                                zero_section(d.bgm, v)};
    std::uint64_t seed = 1;
    for (const auto& m : maps) {
      const TraceFunction t = random_function(m->source(), seed++);
      CHECK_MESSAGE(pushforward_shriek(*m, t) == pair_sum_oracle(*m, t), m->name());
    }
  }
}

TEST_CASE("tensor, shift, twist") {
  auto f3 = field_make(3, 1);
  auto a1 = build_A1(f3);
  const TraceFunction psi = builtin_Psi(a1);
  const TraceFunction psi_prime = builtin_Psi_prime(a1);
  CHECK(psi.values[1] == I(1, 3));
  CHECK(psi.values[0] == I(-2, 3));
  CHECK(psi_prime.values[0].is_zero());
  CHECK(tensor(psi, constant(a1, 1)) == psi);
  CHECK(tensor(delta(a1, 0), delta(a1, 1)) == zero_function(a1));
  CHECK(tensor(psi, psi_prime) == make_function(a1, {I(0, 3), I(1, 3)}));
  CHECK(shift(psi, 2) == psi);
  CHECK(shift(psi, 1) == make_function(a1, {I(2, 3), I(-1, 3)}));
  CHECK(shift(shift(psi, 1), 1) == psi);
  CHECK(tate_twist(psi, -1) == scale(psi, BigInt(3)));
  CHECK(tate_twist(tate_twist(psi, 2), -2) == psi);
  CHECK_THROWS_AS(tensor(psi, constant(build_V(f3, 2), 1)), std::invalid_argument);
}

TEST_CASE("linearity, functoriality, projection formula") {
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
    auto f = field_make(p, n);
    auto v = build_V(f, 2);
    auto vd = build_V_dual(f, 2);
    auto prod = product(vd, v, "Vdual x V");
    auto a1 = build_A1(f);
    auto pt = build_point(f, 0);
    auto pr_dual = first_projection(prod, vd);
    auto mu = pairing_map(prod, a1);
    auto vd_to_pt = structural_map(vd, pt);
    auto prod_to_pt = structural_map(prod, pt);
    for (std::uint64_t s = 0; s < 5; ++s) {
      const TraceFunction a = random_function(prod, 100 + s), b = random_function(prod, 200 + s);
      const CycRat c = CycRat::zeta_pow(p, static_cast<int>(s % static_cast<std::uint64_t>(p))) + I(3, p);
      CHECK(pushforward_shriek(*pr_dual, add(scale(a, c), b)) ==
            add(scale(pushforward_shriek(*pr_dual, a), c), pushforward_shriek(*pr_dual, b)));
      const TraceFunction x = random_function(a1, 300 + s), y = random_function(a1, 400 + s);
      CHECK(pullback(*mu, add(x, scale(y, c))) == add(pullback(*mu, x), scale(pullback(*mu, y), c)));
      CHECK(shift(add(x, y), 1) == add(shift(x, 1), shift(y, 1)));
      CHECK(tate_twist(add(x, y), 3) == add(tate_twist(x, 3), tate_twist(y, 3)));
      // Pushforward along a composite.
      CHECK(pushforward_shriek(*vd_to_pt, pushforward_shriek(*pr_dual, a)) == pushforward_shriek(*prod_to_pt, a));
      // Projection formula.
      const TraceFunction e = random_function(vd, 500 + s);
      CHECK(pushforward_shriek(*pr_dual, tensor(pullback(*pr_dual, e), a)) ==
            tensor(e, pushforward_shriek(*pr_dual, a)));
    }
  }
}

TEST_CASE("difference-map table") {
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    auto f = field_make(p, n);
    const long long q = f->q();
    auto a1 = build_A1(f);
    auto a1a1 = product(a1, a1, "A1 x A1");
    auto a2 = with_action(a1a1, TorusAction::homothety(2), "A2");
    auto sigma = difference_map(a2, a1);
    auto qmap = EquivariantMap::make(
        a2, a1a1, [](PointView x) { return Point(x.begin(), x.end()); }, IntMatrix{{1}, {1}}, "q");
    const TraceFunction psi = builtin_Psi(a1);
    const TraceFunction got = shift(pushforward_shriek(*qmap, pullback(*sigma, psi)), 1);
    CHECK(got == make_function(a1a1, {I((1 - q) * (1 - q), p), I(1 - q, p), I(1 - q, p), I(1, p)}));
    CHECK(got == external_product(psi, psi, a1a1));
  }
}
