#pragma once

#include <optional>
#include <utility>

#include "brickforge/bricks.hpp"

namespace brickforge {

/// Euler brick whose space diagonal g is also an integer.
struct PerfectCuboid {
  Nat a;
  Nat b;
  Nat c;
  Nat d;
  Nat e;
  Nat f;
  Nat g;

  friend bool operator==(const PerfectCuboid&, const PerfectCuboid&) = default;
};

// The five parametrizations. Each returns its brick in theorem order
// (edges are deliberately not normalized so table fixtures compare raw),
// or empty when the square/product hypotheses fail.

/// Edges (u0*u2, v0*u1, v0*v1); requires v0*u1 = u0*v2 and
/// (u0*u2)^2 + (v0*v1)^2 square.
std::optional<Brick> theorem1(const LegPair& p, const PythTriple& t1, const PythTriple& t2);

/// Edges (u1*u2, u1*v2, v1*v2); requires (u1*u2)^2 + (v1*v2)^2 square.
std::optional<Brick> corollary1(const PythTriple& t1, const PythTriple& t2);

/// Edges (u0*u2, v0*v1, u0*v2); requires u0, v0 both odd,
/// u0*u2 = v0*u1 and (v0*v1)^2 + (u0*v2)^2 square. Throws
/// std::invalid_argument when v0 is even.
std::optional<Brick> theorem2(const LegPair& p, const PythTriple& t1, const PythTriple& t2);

/// Edges (u1*u2, v1*u2, u1*v2); requires (v1*u2)^2 + (u1*v2)^2 square.
std::optional<Brick> corollary2(const PythTriple& t1, const PythTriple& t2);

/// Edges (u0*u2, v0*u1, v0*v1); requires v0*v1 = u0*v2 and
/// (u0*u2)^2 + (v0*u1)^2 square.
std::optional<Brick> theorem3(const LegPair& p, const PythTriple& t1, const PythTriple& t2);

/// Lifts t0 = (u0, v0, w0) to the pair
///   t1 = (|4*u0^2 - w0^2|, 4*u0*w0, 4*u0^2 + w0^2)
///   t2 = (|4*v0^2 - w0^2|, 4*v0*w0, 4*v0^2 + w0^2),
/// both primitive, satisfying v0*t1.v = u0*t2.v.
std::pair<PythTriple, PythTriple> lift_pair(const PythTriple& t0);

/// The classical one-triple parametrization:
/// edges (|u0*(4*v0^2 - w0^2)|, |v0*(4*u0^2 - w0^2)|, 4*u0*v0*w0),
/// diagonals (w0^3, u0*(4*v0^2 + w0^2), v0*(4*u0^2 + w0^2)).
/// Always succeeds; equals theorem3 applied to lift_pair(t0).
Brick sounderson(const PythTriple& t0);

/// Builds the perfect cuboid from raw triple components (x,y,z), (u,v,w)
/// satisfying x^2+y^2=z^2 and u^2+v^2=w^2. Requires (zu)^2+(yv)^2 and
/// (zv)^2+(yu)^2 both square (HypothesisNotMet otherwise) and all edges
/// positive (DegenerateEdge otherwise); the full cuboid system is
/// re-verified before returning.
PerfectCuboid perfect_from_parts(Nat x, Nat y, Nat z, Nat u, Nat v, Nat w);

/// perfect_from_parts over canonical triples: x = odd leg, y = even leg.
PerfectCuboid perfect_from_counterexample(const PythTriple& txyz, const PythTriple& tuvw);

}  // namespace brickforge
