#include "brickforge/triples.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace brickforge {

PythTriple make_triple(Nat p, Nat q, Nat r) {
  if (p.is_zero() || q.is_zero() || r.is_zero())
    throw std::invalid_argument("not a Pythagorean triple: sides must be positive");
  if (sq(p) + sq(q) != sq(r))
    throw std::invalid_argument("not a Pythagorean triple: p^2 + q^2 != r^2");
  // Legs of equal parity cannot be coprime here: both odd fails the
  // square equation mod 4, both even shares the factor 2.
  if (p.odd() == q.odd()) throw std::invalid_argument("not primitive: legs of equal parity");
  if (gcd(p, q) != 1) throw std::invalid_argument("not primitive: legs share a factor");
  if (q.odd()) std::swap(p, q);
  return PythTriple{p, q, r};
}

PythTriple euclid(Nat m, Nat n) {
  if (n.is_zero() || m <= n) throw std::invalid_argument("euclid: requires m > n > 0");
  if (gcd(m, n) != 1) throw std::invalid_argument("euclid: requires gcd(m, n) = 1");
  if (m.odd() == n.odd()) throw std::invalid_argument("euclid: requires m + n odd");
  const Nat m2 = sq(m);
  const Nat n2 = sq(n);
  return PythTriple{m2 - n2, Nat(2) * m * n, m2 + n2};
}

std::vector<PythTriple> enumerate_primitive(Nat w_max) {
  std::vector<PythTriple> out;
  if (w_max < 5) return out;
  const Nat m_max = isqrt(w_max);
  for (Nat m = 2; m <= m_max; m += 1) {
    for (Nat n = 1; n < m; n += 1) {
      if (m.odd() == n.odd()) continue;
      if (gcd(m, n) != 1) continue;
      const Nat w = sq(m) + sq(n);
      if (w > w_max) break;  // n ascending => w ascending for fixed m
      out.push_back(PythTriple{sq(m) - sq(n), Nat(2) * m * n, w});
    }
  }
  std::sort(out.begin(), out.end(), [](const PythTriple& a, const PythTriple& b) {
    if (a.w != b.w) return a.w < b.w;
    return a.u < b.u;
  });
  return out;
}

std::array<Nat, 3> scale(const PythTriple& t, Nat k) {
  if (k.is_zero()) throw std::invalid_argument("scale: k must be >= 1");
  return {k * t.u, k * t.v, k * t.w};
}

LegPair make_leg_pair(Nat u0, Nat v0) {
  if (u0.is_zero() || u0.even()) throw std::invalid_argument("leg pair: u0 must be odd and positive");
  if (v0.is_zero()) throw std::invalid_argument("leg pair: v0 must be positive");
  if (gcd(u0, v0) != 1) throw std::invalid_argument("leg pair: u0 and v0 must be coprime");
  return LegPair{u0, v0, sq(u0) + sq(v0)};
}

std::ostream& operator<<(std::ostream& os, const PythTriple& t) {
  return os << '(' << t.u << ',' << t.v << ',' << t.w << ')';
}

}  // namespace brickforge
