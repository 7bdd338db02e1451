#include "homfour/trace.hpp"

#include <stdexcept>

namespace homfour {

namespace {

void require_on(const TraceFunction& t, const GSpace& space, const char* what) {
  if (!t.space || !same_space(*t.space, space))
    throw std::invalid_argument(std::string(what) + ": function lives on " + (t.space ? t.space->label() : "nothing") +
                                ", expected " + space.label());
  if (t.values.size() != space.orbits().size())
    throw std::invalid_argument(std::string(what) + ": value count does not match class count");
}

void require_same(const TraceFunction& a, const TraceFunction& b, const char* what) {
  require_on(b, *a.space, what);
}

}  // namespace

bool same_space(const GSpace& a, const GSpace& b) {
  if (&a == &b) return true;
  if (a.field().p() != b.field().p() || a.field().q() != b.field().q()) return false;
  if (a.coords() != b.coords() || a.size() != b.size()) return false;
  if (a.action().rank() != b.action().rank() || a.action().weights() != b.action().weights()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto x = a.point(i);
    auto y = b.point(i);
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x[j] != y[j]) return false;
  }
  return true;
}

bool operator==(const TraceFunction& a, const TraceFunction& b) {
  return a.space && b.space && same_space(*a.space, *b.space) && a.values == b.values;
}

TraceFunction zero_function(const GSpacePtr& space) {
  return {space, std::vector<CycRat>(space->orbits().size(), CycRat(space->field().p()))};
}

TraceFunction constant(const GSpacePtr& space, const CycRat& value) {
  if (value.p() != space->field().p()) throw std::invalid_argument("constant: value field does not match the space");
  return {space, std::vector<CycRat>(space->orbits().size(), value)};
}

TraceFunction constant(const GSpacePtr& space, long long value) {
  return constant(space, CycRat::from_int(value, space->field().p()));
}

TraceFunction delta(const GSpacePtr& space, std::size_t cls) {
  if (cls >= space->orbits().size()) throw std::out_of_range("delta: class index out of range");
  TraceFunction t = zero_function(space);
  t.values[cls] = CycRat::from_int(1, space->field().p());
  return t;
}

TraceFunction make_function(const GSpacePtr& space, std::vector<CycRat> values) {
  if (values.size() != space->orbits().size())
    throw std::invalid_argument("function on " + space->label() + " needs " + std::to_string(space->orbits().size()) +
                                " values, got " + std::to_string(values.size()));
  for (const auto& v : values)
    if (v.p() != space->field().p()) throw std::invalid_argument("function value lives in the wrong cyclotomic field");
  return {space, std::move(values)};
}

TraceFunction pullback(const EquivariantMap& f, const TraceFunction& t) {
  require_on(t, *f.target(), "pullback");
  const auto& src = f.source();
  TraceFunction out{src, {}};
  out.values.reserve(src->orbits().size());
  for (std::size_t c = 0; c < src->orbits().size(); ++c) out.values.push_back(t.values[f.class_image(c)]);
  return out;
}

TraceFunction pushforward_shriek(const EquivariantMap& f, const TraceFunction& t) {
  require_on(t, *f.source(), "pushforward");
  const GSpace& src = *f.source();
  const GSpace& tgt = *f.target();
  const int p = src.field().p();
  // A source class C over the target class of y contributes |C| points x,
  // each hit by |Stab(y)| group elements g with f(x) = g.y.
  std::vector<CycRat> acc(tgt.orbits().size(), CycRat(p));
  for (std::size_t c = 0; c < src.orbits().size(); ++c) {
    if (t.values[c].is_zero()) continue;
    const std::size_t d = f.class_image(c);
    CycRat term = t.values[c];
    term.mul_int(BigInt(static_cast<unsigned long>(src.orbits()[c].size * tgt.orbits()[d].stabilizer)));
    acc[d] += term;
  }
  const BigInt norm(static_cast<unsigned long>(src.torus_order()));
  for (auto& v : acc) v.div_int(norm);
  return {f.target(), std::move(acc)};
}

TraceFunction tensor(const TraceFunction& a, const TraceFunction& b) {
  require_same(a, b, "tensor");
  TraceFunction out = a;
  for (std::size_t c = 0; c < out.values.size(); ++c) out.values[c] *= b.values[c];
  return out;
}

TraceFunction add(const TraceFunction& a, const TraceFunction& b) {
  require_same(a, b, "add");
  TraceFunction out = a;
  for (std::size_t c = 0; c < out.values.size(); ++c) out.values[c] += b.values[c];
  return out;
}

TraceFunction sub(const TraceFunction& a, const TraceFunction& b) {
  require_same(a, b, "sub");
  TraceFunction out = a;
  for (std::size_t c = 0; c < out.values.size(); ++c) out.values[c] -= b.values[c];
  return out;
}

TraceFunction scale(const TraceFunction& t, const CycRat& c) {
  TraceFunction out = t;
  for (auto& v : out.values) v *= c;
  return out;
}

TraceFunction scale(const TraceFunction& t, const BigInt& c) {
  TraceFunction out = t;
  for (auto& v : out.values) v.mul_int(c);
  return out;
}

TraceFunction shift(const TraceFunction& t, long long n) {
  if (n % 2 == 0) return t;
  return scale(t, BigInt(-1));
}

TraceFunction tate_twist(const TraceFunction& t, long long m) {
  TraceFunction out = t;
  const BigInt q(t.space->field().q());
  for (auto& v : out.values) v.scale_q_pow(q, m);
  return out;
}

TraceFunction external_product(const TraceFunction& a, const TraceFunction& b, const GSpacePtr& prod) {
  auto pr1 = first_projection(prod, a.space);
  auto pr2 = second_projection(prod, b.space);
  return tensor(pullback(*pr1, a), pullback(*pr2, b));
}

TraceFunction builtin_Psi(const GSpacePtr& a1) {
  if (a1->coords() != 1 || a1->orbits().size() != 2) throw std::invalid_argument("Psi lives on [A^1/G_m]");
  const int q = a1->field().q();
  return make_function(a1, {CycRat::from_int(1 - q, a1->field().p()), CycRat::from_int(1, a1->field().p())});
}

TraceFunction builtin_Psi(const FieldPtr& field) { return builtin_Psi(build_A1(field)); }

TraceFunction builtin_Psi_prime(const GSpacePtr& a1) {
  if (a1->coords() != 1 || a1->orbits().size() != 2) throw std::invalid_argument("Psi' lives on [A^1/G_m]");
  return make_function(a1, {CycRat(a1->field().p()), CycRat::from_int(1, a1->field().p())});
}

TraceFunction builtin_Psi_prime(const FieldPtr& field) { return builtin_Psi_prime(build_A1(field)); }

TraceFunction builtin_Lpsi(const GSpacePtr& a1_scheme, int unit) {
  if (a1_scheme->coords() != 1 || a1_scheme->action().rank() != 0)
    throw std::invalid_argument("L_psi lives on the scheme A^1");
  std::vector<CycRat> values;
  for (std::size_t i = 0; i < a1_scheme->size(); ++i)
    values.push_back(a1_scheme->field().psi_q(a1_scheme->point(i)[0], unit));
  return make_function(a1_scheme, std::move(values));
}

TraceFunction builtin_Lpsi(const FieldPtr& field, int unit) { return builtin_Lpsi(build_A1_scheme(field), unit); }

}  // namespace homfour
