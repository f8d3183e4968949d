#include "brickforge/constructors.hpp"

#include <stdexcept>

#include "brickforge/errors.hpp"

namespace brickforge {

std::optional<Brick> theorem1(const LegPair& p, const PythTriple& t1, const PythTriple& t2) {
  const Nat b = p.v0 * t1.u;
  if (b != p.u0 * t2.v) return std::nullopt;
  const Nat a = p.u0 * t2.u;
  const Nat c = p.v0 * t1.v;
  const auto e = perfect_square(sq(a) + sq(c));
  if (!e) return std::nullopt;
  return Brick{a, b, c, p.u0 * t2.w, *e, p.v0 * t1.w};
}

std::optional<Brick> corollary1(const PythTriple& t1, const PythTriple& t2) {
  const Nat a = t1.u * t2.u;
  const Nat c = t1.v * t2.v;
  const auto e = perfect_square(sq(a) + sq(c));
  if (!e) return std::nullopt;
  return Brick{a, t1.u * t2.v, c, t1.u * t2.w, *e, t2.v * t1.w};
}

std::optional<Brick> theorem2(const LegPair& p, const PythTriple& t1, const PythTriple& t2) {
  if (p.v0.even()) throw std::invalid_argument("theorem2: requires v0 odd");
  const Nat a = p.u0 * t2.u;
  if (a != p.v0 * t1.u) return std::nullopt;
  const Nat b = p.v0 * t1.v;
  const Nat c = p.u0 * t2.v;
  const auto f = perfect_square(sq(b) + sq(c));
  if (!f) return std::nullopt;
  return Brick{a, b, c, p.v0 * t1.w, p.u0 * t2.w, *f};
}

std::optional<Brick> corollary2(const PythTriple& t1, const PythTriple& t2) {
  const Nat b = t1.v * t2.u;
  const Nat c = t1.u * t2.v;
  const auto f = perfect_square(sq(b) + sq(c));
  if (!f) return std::nullopt;
  return Brick{t1.u * t2.u, b, c, t2.u * t1.w, t1.u * t2.w, *f};
}

std::optional<Brick> theorem3(const LegPair& p, const PythTriple& t1, const PythTriple& t2) {
  const Nat c = p.v0 * t1.v;
  if (c != p.u0 * t2.v) return std::nullopt;
  const Nat a = p.u0 * t2.u;
  const Nat b = p.v0 * t1.u;
  const auto d = perfect_square(sq(a) + sq(b));
  if (!d) return std::nullopt;
  return Brick{a, b, c, *d, p.u0 * t2.w, p.v0 * t1.w};
}

std::pair<PythTriple, PythTriple> lift_pair(const PythTriple& t0) {
  const Nat w2 = sq(t0.w);
  const Nat fu2 = Nat(4) * sq(t0.u);
  const Nat fv2 = Nat(4) * sq(t0.v);
  // make_triple re-checks primitivity and parity of both lifted triples.
  const PythTriple t1 = make_triple(absdiff(fu2, w2), Nat(4) * t0.u * t0.w, fu2 + w2);
  const PythTriple t2 = make_triple(absdiff(fv2, w2), Nat(4) * t0.v * t0.w, fv2 + w2);
  return {t1, t2};
}

Brick sounderson(const PythTriple& t0) {
  const Nat w2 = sq(t0.w);
  const Nat a = t0.u * absdiff(Nat(4) * sq(t0.v), w2);
  const Nat b = t0.v * absdiff(Nat(4) * sq(t0.u), w2);
  const Nat c = Nat(4) * t0.u * t0.v * t0.w;
  const Nat d = t0.w * w2;
  const Nat e = t0.u * (Nat(4) * sq(t0.v) + w2);
  const Nat f = t0.v * (Nat(4) * sq(t0.u) + w2);
  // Diagonals are recomputed from the edges; the formula values must agree.
  const auto checked = try_brick(a, b, c);
  if (!checked || checked->d != d || checked->e != e || checked->f != f)
    throw VerificationFailure("sounderson: diagonal recomputation disagrees with the formulas");
  return *checked;
}

PerfectCuboid perfect_from_parts(Nat x, Nat y, Nat z, Nat u, Nat v, Nat w) {
  if (sq(x) + sq(y) != sq(z) || sq(u) + sq(v) != sq(w))
    throw std::invalid_argument("perfect cuboid: inputs must satisfy x^2+y^2=z^2, u^2+v^2=w^2");
  const auto e = perfect_square(sq(z * u) + sq(y * v));
  const auto f = perfect_square(sq(z * v) + sq(y * u));
  if (!e || !f)
    throw HypothesisNotMet("perfect cuboid: (zu)^2+(yv)^2 and (zv)^2+(yu)^2 must both be square");
  const Nat a = x * u;
  const Nat b = x * v;
  const Nat c = y * w;
  if (a.is_zero() || b.is_zero() || c.is_zero())
    throw DegenerateEdge("perfect cuboid: construction produced a zero edge");
  const Nat d = x * w;
  const Nat g = w * z;
  if (sq(a) + sq(b) != sq(d) || sq(a) + sq(c) != sq(*e) || sq(b) + sq(c) != sq(*f) ||
      sq(a) + sq(b) + sq(c) != sq(g))
    throw VerificationFailure("perfect cuboid: re-verification of the full system failed");
  return PerfectCuboid{a, b, c, d, *e, *f, g};
}

PerfectCuboid perfect_from_counterexample(const PythTriple& txyz, const PythTriple& tuvw) {
  return perfect_from_parts(txyz.u, txyz.v, txyz.w, tuvw.u, tuvw.v, tuvw.w);
}

}  // namespace brickforge
