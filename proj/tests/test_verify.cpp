#include <doctest.h>

#include <algorithm>

#include "homfour/verify.hpp"

using namespace homfour;

namespace {

GridSpec small_grid() {
  GridSpec g;
  g.fields = {{2, 1}, {3, 1}};
  g.ranks = {1, 2};
  g.random_count = 4;
  return g;
}

}  // namespace

TEST_CASE("hash and mixing constants") {
  CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
  // First output of the reference splitmix64 generator seeded with 0.
  CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
}

TEST_CASE("xorshift64* stream") {
  std::uint64_t x = 1;
  Xorshift64Star rng(1);
  for (int i = 0; i < 5; ++i) {
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    CHECK(rng.next() == x * 0x2545F4914F6CDD1DULL);
  }
  // Seed 0 would be a fixed point; it is replaced.
  Xorshift64Star z(0);
  CHECK(z.next() != 0);
  Xorshift64Star u(99);
  for (int i = 0; i < 1000; ++i) {
    const long long v = u.uniform(-9, 9);
    CHECK(v >= -9);
    CHECK(v <= 9);
  }
}

TEST_CASE("random functions are reproducible and in range") {
  auto hs = HomSpace::make(field_make(5, 1), 2);
  const TraceFunction a = random_function(hs->V(), 42);
  CHECK(a == random_function(hs->V(), 42));
  CHECK_FALSE(a == random_function(hs->V(), 43));
  for (const auto& v : a.values) {
    for (const auto& c : v.num()) CHECK(abs(c) <= 2 * 25);
  }
  const GridCell cell{5, 1, 2};
  const std::size_t classes = hs->V()->orbits().size();
  for (std::size_t i = 0; i < classes; ++i) CHECK(test_function(hs->V(), 7, "oracle", cell, i) == delta(hs->V(), i));
  CHECK(test_function(hs->V(), 7, "oracle", cell, classes + 3) ==
        random_function(hs->V(), stream_seed(7, "oracle", cell, classes + 3)));
  CHECK(stream_seed(7, "oracle", cell, 0) != stream_seed(7, "involution", cell, 0));
  CHECK(stream_seed(7, "oracle", cell, 0) != stream_seed(8, "oracle", cell, 0));
}

TEST_CASE("matrices") {
  auto f = field_make(3, 1);
  using M = std::vector<std::vector<FieldElem>>;
  CHECK(matrix_rank(*f, M{{f->one(), f->zero()}, {f->zero(), f->one()}}) == 2);
  CHECK(matrix_rank(*f, M{{f->one(), f->one()}, {f->from_int(2), f->from_int(2)}}) == 1);
  CHECK(matrix_rank(*f, M{{f->zero(), f->zero()}}) == 0);
  for (std::uint64_t s = 1; s < 20; ++s) CHECK(matrix_rank(*f, random_invertible(*f, 3, s)) == 3);
}

TEST_CASE("grid validation") {
  GridSpec g = small_grid();
  CHECK(grid_cells(g).size() == 4);
  g.fields = {{4, 1}};
  CHECK_THROWS_AS(grid_cells(g), ConfigError);
  g = small_grid();
  g.checks = {"nope"};
  CHECK_THROWS_AS(grid_cells(g), ConfigError);
  g = small_grid();
  g.fields = {{3, 1}};
  g.ranks = {3};
  g.bound = 20;
  CHECK_THROWS_AS(grid_cells(g), ConfigError);
  g.fields = {};
  CHECK(grid_cells(g).empty());
  CHECK(run_suite(g).results.empty());
  CHECK(fields_up_to(3, 9) == std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {2, 3}, {3, 2}});
  CHECK(fields_up_to(1, 100).empty());
  CHECK(default_grid().fields.size() == 7);
  CHECK(grid_cells(default_grid()).size() == 21);
}

TEST_CASE("every check passes on a small grid") {
  const Report rep = run_suite(small_grid());
  CHECK(rep.results.size() == 4 * all_check_ids().size());
  for (const auto& res : rep.results)
    CHECK_MESSAGE(res.status != Status::Fail, res.id << " p=" << res.p << " r=" << res.r << " " << res.detail);
  CHECK(rep.all_pass());
}

TEST_CASE("reports are deterministic and subsets agree") {
  const GridSpec g = small_grid();
  const Report a = run_suite(g), b = run_suite(g);
  CHECK(format_json(a) == format_json(b));
  CHECK(format_text(a) == format_text(b));
  CHECK(format_csv(a) == format_csv(b));
  GridSpec sub = g;
  sub.checks = {"oracle", "radon_inversion"};
  const Report s = run_suite(sub);
  for (const auto& res : s.results) {
    auto it = std::find_if(a.results.begin(), a.results.end(), [&](const CheckResult& x) {
      return x.id == res.id && x.p == res.p && x.n == res.n && x.r == res.r;
    });
    REQUIRE(it != a.results.end());
    CHECK(it->status == res.status);
    CHECK(it->functions == res.functions);
    CHECK(it->detail == res.detail);
  }
  CHECK(format_json(a).find("\"seconds\"") == std::string::npos);
  CHECK(format_json(a, true).find("\"seconds\"") != std::string::npos);
}

TEST_CASE("check function counts and skips") {
  const CheckOptions opt{1, 3, kDefaultSizeBound};
  const CheckResult inv = run_check("involution", {3, 1, 2}, opt);
  CHECK(inv.status == Status::Pass);
  CHECK(inv.functions == 5 + 3);
  CHECK(run_check("radon_inversion", {3, 1, 1}, opt).status == Status::Skip);
  CHECK(run_check("involution_kernel", {7, 1, 1}, opt).status == Status::Skip);
  CHECK(run_check("involution_kernel", {2, 1, 3}, opt).status == Status::Skip);
  CHECK_THROWS_AS(run_check("nope", {3, 1, 1}, opt), ConfigError);
  // Errors inside a check become failing results.
  const CheckResult bad = run_check("oracle", {3, 1, 3}, CheckOptions{1, 3, 10});
  CHECK(bad.status == Status::Fail);
  CHECK(bad.detail.rfind("error:", 0) == 0);
}

TEST_CASE("sign report") {
  const CheckOptions opt{5, 5, kDefaultSizeBound};
  for (std::size_t r = 1; r <= 3; ++r) {
    const CheckResult res = run_check("sign_report", {3, 1, r}, opt);
    CHECK(res.status == Status::Pass);
    CHECK(res.detail.rfind(r % 2 == 0 ? "match:" : "negated:", 0) == 0);
  }
}
