#include "homfour/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

namespace homfour {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "?";
}

int CheckResult::q() const {
  int v = 1;
  for (int i = 0; i < n; ++i) v *= p;
  return v;
}

GridSpec default_grid() {
  GridSpec g;
  g.fields = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}};
  g.ranks = {1, 2, 3};
  return g;
}

std::vector<std::pair<int, int>> fields_up_to(int pmax, int qmax) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p <= pmax; ++p) {
    if (!is_prime(p)) continue;
    long long q = p;
    for (int n = 1; q <= qmax; ++n, q *= p) out.emplace_back(p, n);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    long long qa = 1, qb = 1;
    for (int i = 0; i < a.second; ++i) qa *= a.first;
    for (int i = 0; i < b.second; ++i) qb *= b.first;
    return qa < qb;
  });
  return out;
}

const std::vector<std::string>& all_check_ids() {
  static const std::vector<std::string> ids = {
      "involution",      "deligne",        "oracle",          "radon_devissage", "functoriality",
      "bgm_identity",    "kernel_calculus", "involution_kernel", "radon_inversion", "sign_report"};
  return ids;
}

std::vector<GridCell> grid_cells(const GridSpec& grid) {
  for (const auto& id : grid.checks)
    if (std::find(all_check_ids().begin(), all_check_ids().end(), id) == all_check_ids().end())
      throw ConfigError("unknown check \"" + id + "\"");
  std::vector<GridCell> cells;
  for (const auto& [p, n] : grid.fields) {
    if (!is_prime(p)) throw ConfigError("p = " + std::to_string(p) + " is not prime");
    if (n < 1) throw ConfigError("n must be at least 1");
    long long q = 1;
    for (int i = 0; i < n; ++i) {
      q *= p;
      if (q > kDefaultFieldBound) throw ConfigError("q = " + std::to_string(p) + "^" + std::to_string(n) +
                                                    " exceeds the field bound " + std::to_string(kDefaultFieldBound));
    }
    for (auto r : grid.ranks) {
      if (r < 1) throw ConfigError("r must be at least 1");
      long long size = 1;
      for (std::size_t i = 0; i < r && size <= grid.bound; ++i) size *= q;
      if (size > grid.bound)
        throw ConfigError("cell (p=" + std::to_string(p) + ", n=" + std::to_string(n) + ", r=" + std::to_string(r) +
                          "): q^r exceeds the size bound " + std::to_string(grid.bound));
      cells.push_back({p, n, r});
    }
  }
  return cells;
}

// ---------------------------------------------------------------------------
// Randomness

Xorshift64Star::Xorshift64Star(std::uint64_t seed) : state_(seed == 0 ? 0x9E3779B97F4A7C15ULL : seed) {}

std::uint64_t Xorshift64Star::next() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1DULL;
}

long long Xorshift64Star::uniform(long long lo, long long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long long>(next() % span);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t stream_seed(std::uint64_t seed, const std::string& check, const GridCell& cell, std::size_t index) {
  std::uint64_t h = splitmix64(seed);
  for (std::uint64_t part : {fnv1a(check), static_cast<std::uint64_t>(cell.p), static_cast<std::uint64_t>(cell.n),
                             static_cast<std::uint64_t>(cell.r), static_cast<std::uint64_t>(index)})
    h = splitmix64(h ^ part);
  return h;
}

TraceFunction random_function(const GSpacePtr& space, std::uint64_t stream) {
  Xorshift64Star rng(stream);
  const int p = space->field().p();
  const long long q = space->field().q();
  TraceFunction t = zero_function(space);
  for (auto& v : t.values) {
    const long long a = rng.uniform(-q * q, q * q);
    const long long b = rng.uniform(-q * q, q * q);
    const int k = static_cast<int>(rng.uniform(0, p - 1));
    v = CycRat::from_int(a, p) + CycRat::from_int(b, p) * CycRat::zeta_pow(p, k);
  }
  return t;
}

TraceFunction test_function(const GSpacePtr& space, std::uint64_t seed, const std::string& check, const GridCell& cell,
                            std::size_t index) {
  const std::size_t basis = space->orbits().size();
  if (index < basis) return delta(space, index);
  return random_function(space, stream_seed(seed, check, cell, index));
}

std::size_t matrix_rank(const FieldCtx& f, std::vector<std::vector<FieldElem>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c].value == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    const FieldElem inv = f.inv(m[rank][c]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c].value == 0) continue;
      const FieldElem factor = f.mul(m[i][c], inv);
      for (std::size_t j = c; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[rank][j]));
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<FieldElem>> random_invertible(const FieldCtx& field, std::size_t r, std::uint64_t stream) {
  Xorshift64Star rng(stream);
  for (;;) {
    std::vector<std::vector<FieldElem>> m(r, std::vector<FieldElem>(r));
    for (auto& row : m)
      for (auto& e : row) e = field.at(static_cast<std::uint32_t>(rng.uniform(0, field.q() - 1)));
    if (matrix_rank(field, m) == r) return m;
  }
}

// ---------------------------------------------------------------------------
// Checks

namespace {

std::optional<std::size_t> first_mismatch(const TraceFunction& a, const TraceFunction& b) {
  if (a.values.size() != b.values.size()) return std::size_t{0};
  for (std::size_t c = 0; c < a.values.size(); ++c)
    if (!(a.values[c] == b.values[c])) return c;
  return std::nullopt;
}

struct Mismatch {
  std::size_t cls;
  std::string note;
};
using Compare = std::function<std::optional<Mismatch>(const TraceFunction&)>;

struct Ctx {
  GridCell cell;
  CheckOptions opt;
  FieldPtr field;
};

// Feeds the delta basis and the random functions of `space` through `cmp`,
// stopping at the first mismatch.
void over_functions(CheckResult& res, const Ctx& ctx, const std::string& stream_id, const GSpacePtr& space,
                    const Compare& cmp) {
  const std::size_t total = space->orbits().size() + ctx.opt.random_count;
  for (std::size_t i = 0; i < total; ++i) {
    const TraceFunction t = test_function(space, ctx.opt.seed, stream_id, ctx.cell, i);
    ++res.functions;
    if (auto m = cmp(t)) {
      res.status = Status::Fail;
      res.witness = Witness{ctx.opt.seed, i, m->cls, stream_id + (m->note.empty() ? "" : ": " + m->note)};
      return;
    }
  }
}

std::optional<Mismatch> compare(const TraceFunction& a, const TraceFunction& b, const std::string& note = {}) {
  if (auto c = first_mismatch(a, b)) return Mismatch{*c, note};
  return std::nullopt;
}

BigInt q_pow(const FieldCtx& f, long long e) { return ipow(BigInt(f.q()), static_cast<unsigned long>(e)); }

CycRat class_sum(const TraceFunction& t) {
  CycRat s(t.p());
  for (const auto& v : t.values) s += v;
  return s;
}

void check_involution(CheckResult& res, const Ctx& ctx) {
  auto hs = HomSpace::make(ctx.field, ctx.cell.r, ctx.opt.bound);
  const BigInt qr = q_pow(*ctx.field, static_cast<long long>(ctx.cell.r));
  over_functions(res, ctx, res.id, hs->V(), [&](const TraceFunction& t) {
    return compare(four_hom_dual(*hs, four_hom(*hs, t)), scale(t, qr));
  });
  res.detail = "dual transform after transform = q^r id, q^r = " + qr.get_str();
}

void check_deligne(CheckResult& res, const Ctx& ctx) {
  auto hs = HomSpace::make(ctx.field, ctx.cell.r, ctx.opt.bound);
  over_functions(res, ctx, res.id, hs->V(), [&](const TraceFunction& t) {
    return compare(four_deligne(*hs, rho_pullback(*hs, t)), rho_pullback_dual(*hs, four_hom(*hs, t)));
  });
  res.detail = "Fourier-Deligne of the pulled-back function = pullback of the homogeneous transform";
}

void check_oracle(CheckResult& res, const Ctx& ctx) {
  auto hs = HomSpace::make(ctx.field, ctx.cell.r, ctx.opt.bound);
  DefinitionalFourier def(hs);
  over_functions(res, ctx, res.id, hs->V(),
                 [&](const TraceFunction& t) { return compare(four_hom(*hs, t), def.apply(t)); });
  res.detail = "closed form = engine evaluation on " + std::to_string(def.product()->orbits().size()) +
               " classes of Vdual x V";
}

void check_radon_devissage(CheckResult& res, const Ctx& ctx) {
  auto hs = HomSpace::make(ctx.field, ctx.cell.r, ctx.opt.bound);
  const long long r = static_cast<long long>(ctx.cell.r);
  const BigInt q(ctx.field->q());
  DefinitionalRadon def(hs);
  over_functions(res, ctx, res.id, hs->PV(), [&](const TraceFunction& g) -> std::optional<Mismatch> {
    const TraceFunction rad = radon(*hs, g);
    if (auto m = compare(rad, def.apply(g), "closed-form Radon vs engine")) return m;
    const TraceFunction lhs = restrict_dual(*hs, four_hom(*hs, j_shriek(*hs, g)));
    const TraceFunction rhs = add(shift(constant(hs->PVdual(), class_sum(g)), r - 1), scale(rad, q));
    return compare(lhs, rhs, "restriction of the transform of j_! g");
  });
  res.detail = ctx.cell.r == 1 ? "degenerate rank: empty incidence, constant term only"
                               : "transform of j_! g on P(Vdual) = (-1)^(r-1) (sum g) + q Rad g";
}

void check_functoriality(CheckResult& res, const Ctx& ctx) {
  const std::size_t r = ctx.cell.r;
  const FieldCtx& f = *ctx.field;
  auto hs_r = HomSpace::make(ctx.field, r, ctx.opt.bound);
  long long qr1 = 1;
  for (std::size_t i = 0; i <= r; ++i) qr1 *= f.q();
  const bool bigger = qr1 <= ctx.opt.bound;
  auto hs_r1 = bigger ? HomSpace::make(ctx.field, r + 1, ctx.opt.bound) : nullptr;

  using Matrix = std::vector<std::vector<FieldElem>>;
  struct Case {
    std::string name;
    HomSpacePtr src, tgt;
    Matrix m;  // rows = target rank
  };
  std::vector<Case> cases;
  if (bigger) {
    Matrix inc(r + 1, std::vector<FieldElem>(r, f.zero()));
    for (std::size_t i = 0; i < r; ++i) inc[i][i] = f.one();
    cases.push_back({"inclusion", hs_r, hs_r1, inc});
    Matrix proj(r, std::vector<FieldElem>(r + 1, f.zero()));
    for (std::size_t i = 0; i < r; ++i) proj[i][i] = f.one();
    cases.push_back({"projection", hs_r1, hs_r, proj});
  }
  cases.push_back({"zero", hs_r, hs_r, Matrix(r, std::vector<FieldElem>(r, f.zero()))});
  cases.push_back({"invertible", hs_r, hs_r,
                   random_invertible(f, r, stream_seed(ctx.opt.seed, res.id + ":matrix", ctx.cell, 0))});

  std::string names;
  for (const auto& c : cases) {
    const auto fmap = linear_map(c.src->V(), c.tgt->V(), c.m, c.name);
    const auto tmap = linear_map(c.tgt->Vdual(), c.src->Vdual(), transpose(c.m), c.name + "^t");
    const long long ds = static_cast<long long>(c.tgt->r()) - static_cast<long long>(c.src->r());
    over_functions(res, ctx, res.id + ":" + c.name, c.src->V(), [&](const TraceFunction& t) {
      return compare(four_hom(*c.tgt, pushforward_shriek(*fmap, t)), shift(pullback(*tmap, four_hom(*c.src, t)), ds));
    });
    if (res.status == Status::Fail) break;
    names += (names.empty() ? "" : ", ") + c.name;
  }
  res.detail = "linear maps: " + names + (bigger ? "" : " (rank r+1 over the size bound)");
}

void check_bgm_identity(CheckResult& res, const Ctx& ctx) {
  auto hs = HomSpace::make(ctx.field, 0, ctx.opt.bound);
  DefinitionalFourier def(hs);
  over_functions(res, ctx, res.id, hs->V(), [&](const TraceFunction& t) -> std::optional<Mismatch> {
    if (auto m = compare(def.apply(t), t, "engine transform on B Gm")) return m;
    return compare(four_hom(*hs, t), t, "closed form on B Gm");
  });
  res.detail = "rank 0: transform is the identity on the single class";
}

void check_kernel_calculus(CheckResult& res, const Ctx& ctx) {
  const FieldPtr& field = ctx.field;
  const int p = field->p();
  const long long q = field->q();
  auto a1 = build_A1(field);
  auto a1s = build_A1_scheme(field);
  auto pt0 = build_point(field, 0, "Spec F_q");
  auto bgm = build_point(field, 1, "B Gm");
  const TraceFunction psi = builtin_Psi(a1);
  auto quotient = quotient_map(a1s, a1, "torsor");
  res.functions = 0;

  auto fail = [&](const std::string& note, std::size_t cls) {
    res.status = Status::Fail;
    res.witness = Witness{ctx.opt.seed, 0, cls, note};
  };
  auto expect = [&](const TraceFunction& got, const TraceFunction& want, const std::string& note) {
    ++res.functions;
    if (res.status == Status::Fail) return;
    if (auto c = first_mismatch(got, want)) fail(note, *c);
  };

  // Fibre sums of the section function vanish, and its torsor pushforward is Psi.
  auto to_point = structural_map(a1s, pt0, "h");
  for (std::size_t a = 0; a < a1s->size(); ++a) {
    TraceFunction phi = constant(a1s, 1);
    phi.values[a] = CycRat::from_int(1 - q, p);
    expect(pushforward_shriek(*to_point, phi), zero_function(pt0), "section function sums to 0, a = " + std::to_string(a));
    if (a != 0) expect(shift(pushforward_shriek(*quotient, phi), 1), psi, "torsor pushforward of section function");
  }
  // Torsor pushforward of the Artin-Schreier function, for every character.
  for (int u = 1; u < p; ++u)
    expect(shift(pushforward_shriek(*quotient, builtin_Lpsi(a1s, u)), 1), psi,
           "torsor pushforward of L_psi, unit " + std::to_string(u));
  // Pushforward of the constant along Spec F_q -> B Gm, against the closed fibre of Psi.
  auto g = EquivariantMap::make(pt0, bgm, [](PointView) { return Point{}; }, IntMatrix(1), "g");
  auto alpha = zero_section(bgm, a1, "alpha");
  expect(shift(pushforward_shriek(*g, constant(pt0, 1)), 1), pullback(*alpha, psi), "closed fibre of Psi");
  expect(psi, make_function(a1, {CycRat::from_int(1 - q, p), CycRat::from_int(1, p)}), "Psi table");
  // Mass of Psi.
  auto h_bar = structural_map(a1, pt0, "h_bar");
  expect(pushforward_shriek(*h_bar, psi), zero_function(pt0), "mass of Psi");
  // Psi against its extension-by-zero companion.
  expect(tensor(psi, builtin_Psi_prime(a1)), make_function(a1, {CycRat(p), CycRat::from_int(1, p)}), "Psi x Psi'");
  // Difference map: q_! sigma^* Psi [1] = Psi boxtimes Psi.
  auto a1a1 = product(a1, a1, "A1 x A1");
  auto a2 = with_action(a1a1, TorusAction::homothety(2), "A2 diagonal");
  auto sigma = difference_map(a2, a1, "sigma");
  auto qmap = EquivariantMap::make(
      a2, a1a1, [](PointView x) { return Point(x.begin(), x.end()); }, IntMatrix{{1}, {1}}, "q");
  const TraceFunction lhs = shift(pushforward_shriek(*qmap, pullback(*sigma, psi)), 1);
  expect(lhs, external_product(psi, psi, a1a1), "difference-map kernel vs Psi boxtimes Psi");
  expect(lhs,
         make_function(a1a1, {CycRat::from_int((1 - q) * (1 - q), p), CycRat::from_int(1 - q, p),
                              CycRat::from_int(1 - q, p), CycRat::from_int(1, p)}),
         "four-class table");
  res.detail = "Psi = (1-q, 1) = (" + std::to_string(1 - q) + ", 1) by torsor, section and closed-fibre routes; mass 0";
}

void check_involution_kernel(CheckResult& res, const Ctx& ctx) {
  const FieldPtr& field = ctx.field;
  const std::size_t r = ctx.cell.r;
  const int p = field->p();
  if (field->q() > 5 || r > 2) {
    res.status = Status::Skip;
    res.detail = "kernel evaluated only for q <= 5, r <= 2";
    return;
  }
  auto hs = HomSpace::make(field, r, ctx.opt.bound);
  auto v = hs->V();
  auto vv = product(v, v, "V x V");
  auto triple = product(product(v, hs->Vdual(), "V x Vdual"), v, "V x Vdual x V");
  auto a1 = build_A1(field);
  auto a1a1 = product(a1, a1, "A1 x A1");
  const FieldCtx& f = *field;
  auto nu = EquivariantMap::make(
      triple, a1a1,
      [&f, r](PointView x) {
        return Point{pairing(f, x.subspan(r, r), x.subspan(0, r)), pairing(f, x.subspan(r, r), x.subspan(2 * r, r))};
      },
      IntMatrix{{1, 1, 0}, {0, 1, 1}}, "nu");
  auto pr13 = EquivariantMap::make(
      triple, vv,
      [r](PointView x) {
        Point y(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(r));
        y.insert(y.end(), x.begin() + static_cast<std::ptrdiff_t>(2 * r), x.end());
        return y;
      },
      IntMatrix{{1, 0, 0}, {0, 0, 1}}, "pr13");
  const TraceFunction psi = builtin_Psi(a1);
  const TraceFunction kernel = pushforward_shriek(*pr13, pullback(*nu, external_product(psi, psi, a1a1)));

  auto diag = diagonal_map(v, vv);
  const long long rr = static_cast<long long>(r);
  const TraceFunction via_diag = tate_twist(shift(pushforward_shriek(*diag, constant(v, 1)), 2 - 2 * rr), -rr);

  const BigInt qr = q_pow(f, rr);
  TraceFunction table = zero_function(vv);
  for (std::size_t c = 0; c < vv->orbits().size(); ++c) {
    PointView x = vv->class_rep(c);
    PointView y1 = x.subspan(0, r), y2 = x.subspan(r, r);
    const bool z1 = std::all_of(y1.begin(), y1.end(), [](FieldElem e) { return e.value == 0; });
    const bool z2 = std::all_of(y2.begin(), y2.end(), [](FieldElem e) { return e.value == 0; });
    if (z1 && z2) table.values[c] = CycRat::from_int(qr * (f.q() - 1), p);
    else if (!z1 && !z2 && v->class_of_point(y1) == v->class_of_point(y2)) table.values[c] = CycRat::from_int(qr, p);
  }
  res.functions = 1;
  if (auto c = first_mismatch(kernel, via_diag)) {
    res.status = Status::Fail;
    res.witness = Witness{ctx.opt.seed, 0, *c, "kernel vs diagonal pushforward"};
  } else if (auto c2 = first_mismatch(kernel, table)) {
    res.status = Status::Fail;
    res.witness = Witness{ctx.opt.seed, 0, *c2, "kernel vs explicit table"};
  }
  res.detail = "pr13_! nu^*(Psi x Psi) = Delta_! 1 [2-2r](-r): q^r = " + qr.get_str() +
               " on diagonal classes, q^r (q-1) at the zero class";
}

void check_radon_inversion(CheckResult& res, const Ctx& ctx) {
  const std::size_t r = ctx.cell.r;
  if (r < 2) {
    res.status = Status::Skip;
    res.detail = "requires r >= 2";
    return;
  }
  auto hs = HomSpace::make(ctx.field, r, ctx.opt.bound);
  const long long e = static_cast<long long>(r) - 2;
  const BigInt qe = q_pow(*ctx.field, e);
  const BigInt coeff = (qe - 1) / (ctx.field->q() - 1);
  const auto np = static_cast<long>(hs->proj_count());
  over_functions(res, ctx, res.id, hs->PV(), [&](const TraceFunction& g) -> std::optional<Mismatch> {
    const CycRat total = class_sum(g);
    CycRat tail = total;
    tail.mul_int(coeff);
    const TraceFunction law = add(scale(g, qe), constant(hs->PV(), tail));
    if (auto m = compare(radon_double(*hs, g), law, "double transform law")) return m;
    CycRat mean = total;
    mean.div_int(np);
    const TraceFunction g0 = sub(g, constant(hs->PV(), mean));
    const TraceFunction back = radon_double(*hs, g0);
    if (auto m = compare(back, scale(g0, qe), "sum-zero part")) return m;
    return compare(tate_twist(back, e), g0, "twisted inverse on the sum-zero part");
  });
  res.detail = "Rad Rad g = q^(r-2) g + ((q^(r-2)-1)/(q-1)) sum g, q^(r-2) = " + qe.get_str();
}

void check_sign_report(CheckResult& res, const Ctx& ctx) {
  auto hs = HomSpace::make(ctx.field, ctx.cell.r, ctx.opt.bound);
  DefinitionalFourier def(hs);
  bool equal = true, negated = true;
  over_functions(res, ctx, res.id, hs->V(), [&](const TraceFunction& t) -> std::optional<Mismatch> {
    const TraceFunction verbatim = four_hom(*hs, t, SignMode::Unsigned);
    const TraceFunction oracle = def.apply(t);
    const auto eq = first_mismatch(verbatim, oracle);
    const auto neg = first_mismatch(verbatim, scale(oracle, BigInt(-1)));
    equal = equal && !eq;
    negated = negated && !neg;
    if (!equal && !negated) return Mismatch{eq ? *eq : *neg, "verbatim formula has no uniform sign against the oracle"};
    return std::nullopt;
  });
  if (res.status == Status::Fail) {
    res.detail = "inconsistent";
  } else if (equal) {
    res.detail = "match: unsigned incidence formula equals the definitional transform";
  } else {
    res.detail = "negated: unsigned incidence formula equals minus the definitional transform";
  }
}

}  // namespace

CheckResult run_check(const std::string& id, const GridCell& cell, const CheckOptions& options) {
  static const std::vector<std::pair<std::string, void (*)(CheckResult&, const Ctx&)>> table = {
      {"involution", check_involution},
      {"deligne", check_deligne},
      {"oracle", check_oracle},
      {"radon_devissage", check_radon_devissage},
      {"functoriality", check_functoriality},
      {"bgm_identity", check_bgm_identity},
      {"kernel_calculus", check_kernel_calculus},
      {"involution_kernel", check_involution_kernel},
      {"radon_inversion", check_radon_inversion},
      {"sign_report", check_sign_report},
  };
  auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == id; });
  if (it == table.end()) throw ConfigError("unknown check \"" + id + "\"");

  CheckResult res;
  res.id = id;
  res.p = cell.p;
  res.n = cell.n;
  res.r = cell.r;
  res.seed = options.seed;
  const auto start = std::chrono::steady_clock::now();
  try {
    Ctx ctx{cell, options, field_make(cell.p, cell.n)};
    it->second(res, ctx);
  } catch (const std::exception& e) {
    res.status = Status::Fail;
    res.detail = std::string("error: ") + e.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

bool Report::all_pass() const { return count(Status::Fail) == 0; }

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [s](const CheckResult& c) { return c.status == s; }));
}

Report run_suite(const GridSpec& grid) {
  Report report{grid, {}};
  const auto cells = grid_cells(grid);
  const auto& ids = grid.checks.empty() ? all_check_ids() : grid.checks;
  const CheckOptions opt{grid.seed, grid.random_count, grid.bound};
  for (const auto& cell : cells)
    for (const auto& id : ids) report.results.push_back(run_check(id, cell, opt));
  return report;
}

}  // namespace homfour
