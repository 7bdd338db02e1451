#include <doctest.h>

#include <algorithm>
#include <set>

#include "homfour/gspace.hpp"

using namespace homfour;

namespace {

Point pt(std::initializer_list<std::uint32_t> xs) {
  Point p;
  for (auto x : xs) p.push_back({x});
  return p;
}

bool proportional(const FieldCtx& f, PointView a, PointView b) {
  for (std::uint32_t t = 1; t < static_cast<std::uint32_t>(f.q()); ++t) {
    bool same = true;
    for (std::size_t i = 0; i < a.size() && same; ++i) same = f.mul({t}, a[i]) == b[i];
    if (same) return true;
  }
  return false;
}

void check_orbit_invariants(const GSpace& s) {
  std::uint64_t total = 0;
  for (std::size_t c = 0; c < s.orbits().size(); ++c) {
    const auto& o = s.orbits()[c];
    CHECK(o.size * o.stabilizer == s.torus_order());
    total += o.size;
    // Representative is the least point of its class.
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s.orbits().class_of(i) == c) CHECK(o.rep <= i);
  }
  CHECK(total == s.size());
}

}  // namespace

TEST_CASE("vector bundle spaces") {
  auto f3 = field_make(3, 1);
  auto v = build_V(f3, 2);
  CHECK(v->size() == 9);
  CHECK(v->orbits().size() == 5);
  CHECK(v->orbits()[0].stabilizer == 2);
  for (std::size_t c = 1; c < 5; ++c) CHECK(v->orbits()[c].stabilizer == 1);
  check_orbit_invariants(*v);

  auto gm = build_Gm(f3);
  CHECK(gm->size() == 2);
  CHECK(gm->orbits().size() == 1);

  auto a1 = build_A1(f3);
  REQUIRE(a1->orbits().size() == 2);
  CHECK(a1->orbits()[0].size == 1);
  CHECK(a1->orbits()[0].stabilizer == 2);
  CHECK(a1->orbits()[1].size == 2);
  CHECK(a1->orbits()[1].stabilizer == 1);

  auto bgm = build_point(f3, 1);
  CHECK(bgm->orbits().size() == 1);
  CHECK(bgm->orbits()[0].stabilizer == 2);

  CHECK_THROWS_AS(build_V(f3, 8, "V", 2048), std::length_error);
}

TEST_CASE("orbit invariants across fields and ranks") {
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}}) {
    auto f = field_make(p, n);
    for (std::size_t r = 1; r <= 3; ++r) {
      auto v = build_V(f, r);
      check_orbit_invariants(*v);
      CHECK(v->orbits().size() == 1 + projective_points(*f, r).size());
      // Class reps after the zero class are the normalized projective points, in order.
      const auto pts = projective_points(*f, r);
      for (std::size_t c = 1; c < v->orbits().size(); ++c) {
        PointView rep = v->class_rep(c);
        CHECK(std::equal(rep.begin(), rep.end(), pts[c - 1].begin()));
      }
    }
  }
  auto f3 = field_make(3, 1);
  auto vv = product(build_V(f3, 1), build_V(f3, 2), "V1 x V2");
  check_orbit_invariants(*vv);
}

TEST_CASE("projective points") {
  auto f3 = field_make(3, 1);
  CHECK(projective_points(*f3, 2) == std::vector<Point>{pt({0, 1}), pt({1, 0}), pt({1, 1}), pt({1, 2})});
  auto f2 = field_make(2, 1);
  CHECK(projective_points(*f2, 3).size() == 7);
  CHECK(projective_points(*field_make(2, 2), 1) == std::vector<Point>{pt({1})});
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 1}, {5, 1}}) {
    auto f = field_make(p, n);
    const auto pts = projective_points(*f, 3);
    CHECK(pts.size() == static_cast<std::size_t>((f->q() * f->q() * f->q() - 1) / (f->q() - 1)));
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) CHECK_FALSE(proportional(*f, pts[i], pts[j]));
  }
}

TEST_CASE("pairing") {
  auto f3 = field_make(3, 1);
  CHECK(pairing(*f3, pt({1, 0}), pt({0, 1})).value == 0);
  CHECK(pairing(*f3, pt({1, 1}), pt({1, 2})).value == 0);
  CHECK(pairing(*f3, pt({1}), pt({2})).value == 2);
  CHECK_THROWS_AS(pairing(*f3, pt({1}), pt({1, 2})), std::invalid_argument);
}

TEST_CASE("incidence") {
  CHECK(incidence(*field_make(3, 1), 1).empty());
  const auto inc32 = incidence(*field_make(3, 1), 2);
  CHECK(inc32.size() == 4);
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    auto f = field_make(p, n);
    for (std::size_t r = 2; r <= 3; ++r) {
      const auto pts = projective_points(*f, r);
      const auto inc = incidence(*f, r);
      long long qr1 = 1;
      for (std::size_t i = 0; i + 1 < r; ++i) qr1 *= f->q();
      const auto want = static_cast<std::size_t>((qr1 - 1) / (f->q() - 1));
      std::vector<std::size_t> deg(pts.size(), 0);
      std::set<std::pair<std::size_t, std::size_t>> as_set(inc.begin(), inc.end());
      for (auto [w, v] : inc) {
        ++deg[w];
        CHECK(as_set.count({v, w}) == 1);
      }
      for (auto d : deg) CHECK(d == want);
    }
  }
  auto f2 = field_make(2, 1);
  const auto inc23 = incidence(*f2, 3);
  CHECK(inc23.size() == 7 * 3);
}

TEST_CASE("equivariant maps are validated") {
  auto f3 = field_make(3, 1);
  auto a1 = build_A1(f3);
  const FieldCtx& f = *f3;
  try {
    EquivariantMap::make(a1, a1, [&f](PointView x) { return Point{f.add(x[0], f.one())}; }, IntMatrix{{1}}, "shift");
    FAIL("expected an equivariance violation");
  } catch (const EquivarianceError& e) {
    // The witness really violates f(g.x) = g.f(x).
    const Point gx = a1->act(e.torus_elem(), e.point());
    const Point lhs{f.add(gx[0], f.one())};
    const Point rhs = a1->act(e.torus_elem(), Point{f.add(e.point()[0], f.one())});
    CHECK(lhs != rhs);
  }
  // Wrong torus homomorphism for a linear map.
  CHECK_THROWS_AS(EquivariantMap::make(
                      a1, a1, [](PointView x) { return Point(x.begin(), x.end()); }, IntMatrix{{2}}, "wrong"),
                  EquivarianceError);
  // Image outside the target.
  auto gm = build_Gm(f3);
  CHECK_THROWS_AS(inclusion_map(a1, gm), std::invalid_argument);
}

TEST_CASE("map constructors pass the equivariance check") {
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
    auto f = field_make(p, n);
    auto a1 = build_A1(f);
    for (std::size_t r = 1; r <= 2; ++r) {
      auto v = build_V(f, r);
      auto vd = build_V_dual(f, r);
      auto prod = product(vd, v, "Vdual x V");
      CHECK_NOTHROW(pairing_map(prod, a1));
      CHECK_NOTHROW(first_projection(prod, vd));
      CHECK_NOTHROW(second_projection(prod, v));
      CHECK_NOTHROW(diagonal_map(v, product(v, v, "V x V")));
      CHECK_NOTHROW(quotient_map(build_V_scheme(f, r), v));
      CHECK_NOTHROW(zero_section(build_point(f, 1), v));
      CHECK_NOTHROW(structural_map(v, build_point(f, 1)));
      CHECK_NOTHROW(inclusion_map(build_V_punctured(f, r), v));
      std::vector<std::vector<FieldElem>> m(r + 1, std::vector<FieldElem>(r, f->zero()));
      for (std::size_t i = 0; i < r; ++i) m[i][i] = f->one();
      auto w = build_V(f, r + 1);
      CHECK_NOTHROW(linear_map(v, w, m));
      CHECK_NOTHROW(linear_map(build_V_dual(f, r + 1), vd, transpose(m)));
    }
    auto a2 = with_action(product(a1, a1, "A1 x A1"), TorusAction::homothety(2), "A2");
    CHECK_NOTHROW(difference_map(a2, a1));
  }
}

TEST_CASE("composition") {
  auto f3 = field_make(3, 1);
  auto v = build_V(f3, 2);
  auto vv = product(v, v, "V x V");
  auto diag = diagonal_map(v, vv);
  auto pr1 = first_projection(vv, v);
  auto id = compose(pr1, diag);
  for (std::size_t i = 0; i < v->size(); ++i) CHECK(id->image(i) == i);
  CHECK(id->gpmap() == IntMatrix{{1}});
}

TEST_CASE("actions") {
  auto f3 = field_make(3, 1);
  auto v = build_V(f3, 2);
  CHECK(v->act({1}, pt({1, 2})) == pt({2, 1}));
  CHECK(v->torus_order() == 2);
  const TorusAction a = TorusAction::direct_sum(TorusAction::homothety(1), TorusAction::homothety(2));
  CHECK(a.rank() == 2);
  CHECK(a.weights() == IntMatrix{{1, 0, 0}, {0, 1, 1}});
  CHECK_THROWS_AS(GSpace::make(f3, 1, {pt({1})}, TorusAction::homothety(1), "not closed"), std::invalid_argument);
  CHECK_THROWS_AS(GSpace::make(f3, 1, {pt({1}), pt({1})}, TorusAction::trivial(1), "dup"), std::invalid_argument);
}
