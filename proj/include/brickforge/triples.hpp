#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "brickforge/arith.hpp"

namespace brickforge {

/// Primitive Pythagorean triple in canonical parity order: u is the odd
/// leg, v the even leg, w the hypotenuse. Build through make_triple or
/// euclid; the validating paths are the only supported constructors.
struct PythTriple {
  Nat u;
  Nat v;
  Nat w;

  friend bool operator==(const PythTriple&, const PythTriple&) = default;
};

/// The (u0, v0) multiplier pair: u0 odd, v0 of either parity, coprime,
/// with t0 = u0^2 + v0^2 (t0 need not be a square).
struct LegPair {
  Nat u0;
  Nat v0;
  Nat t0;

  friend bool operator==(const LegPair&, const LegPair&) = default;
};

/// Validates (p, q, r) as a primitive Pythagorean triple and reorders the
/// legs so the odd one comes first. Throws std::invalid_argument with a
/// "not a Pythagorean triple" / "not primitive" message otherwise.
PythTriple make_triple(Nat p, Nat q, Nat r);

/// Euclid's parametrization (m^2 - n^2, 2mn, m^2 + n^2). Requires
/// m > n > 0, gcd(m, n) = 1, m + n odd.
PythTriple euclid(Nat m, Nat n);

/// Every primitive triple with hypotenuse <= w_max, each exactly once,
/// sorted by (w, u). The order is part of the scan/checkpoint contract.
std::vector<PythTriple> enumerate_primitive(Nat w_max);

/// (k*u, k*v, k*w); the result is generally not primitive.
std::array<Nat, 3> scale(const PythTriple& t, Nat k);

LegPair make_leg_pair(Nat u0, Nat v0);

std::ostream& operator<<(std::ostream& os, const PythTriple& t);

}  // namespace brickforge
