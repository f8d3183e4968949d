#include "brickforge/bricks.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "brickforge/errors.hpp"

namespace brickforge {

namespace {

void require_euler(const Brick& br, const char* who) {
  if (br.a.is_zero() || br.b.is_zero() || br.c.is_zero() ||
      sq(br.a) + sq(br.b) != sq(br.d) || sq(br.a) + sq(br.c) != sq(br.e) ||
      sq(br.b) + sq(br.c) != sq(br.f))
    throw std::invalid_argument(std::string(who) + ": not an Euler brick");
}

}  // namespace

BrickReport verify_brick(Nat a, Nat b, Nat c) {
  if (a.is_zero() || b.is_zero() || c.is_zero())
    throw std::invalid_argument("verify_brick: edges must be positive");
  BrickReport rep;
  rep.edges = {a, b, c};
  const auto d = perfect_square(sq(a) + sq(b));
  const auto e = perfect_square(sq(a) + sq(c));
  const auto f = perfect_square(sq(b) + sq(c));
  rep.is_euler = d && e && f;
  if (rep.is_euler) rep.diagonals = std::array<Nat, 3>{*d, *e, *f};
  rep.is_primitive = rep.is_euler && gcd3(a, b, c) == 1;
  rep.space_diagonal = perfect_square(sq(a) + sq(b) + sq(c));
  return rep;
}

std::optional<Brick> try_brick(Nat a, Nat b, Nat c) {
  const BrickReport rep = verify_brick(a, b, c);
  if (!rep.is_euler) return std::nullopt;
  const auto& dg = *rep.diagonals;
  return Brick{a, b, c, dg[0], dg[1], dg[2]};
}

Brick normalize(const Brick& br) {
  require_euler(br, "normalize");
  const Nat g = gcd3(br.a, br.b, br.c);
  std::array<Nat, 3> edges = {br.a / g, br.b / g, br.c / g};
  std::array<unsigned, 3> val = {v2(edges[0]), v2(edges[1]), v2(edges[2])};
  if (val[0] == val[1] || val[0] == val[2] || val[1] == val[2])
    throw NonCanonicalizable("normalize: edges tie in 2-adic valuation");
  // Selection order by valuation; after the gcd division the minimum is 0.
  std::array<int, 3> idx = {0, 1, 2};
  std::sort(idx.begin(), idx.end(), [&](int i, int j) { return val[i] < val[j]; });
  const Nat a = edges[idx[0]];
  const Nat b = edges[idx[1]];
  const Nat c = edges[idx[2]];
  const auto reborn = try_brick(a, b, c);
  if (!reborn)
    throw VerificationFailure("normalize: gcd-reduced edges lost the Euler property");
  return *reborn;
}

Brick derived_brick(const Brick& br) {
  require_euler(br, "derived_brick");
  const auto out = try_brick(br.b * br.c, br.a * br.c, br.a * br.b);
  if (!out) throw VerificationFailure("derived_brick: product edges lost the Euler property");
  return *out;
}

Decomposition decompose(const Brick& br) {
  require_euler(br, "decompose");
  const Nat k1 = gcd(br.a, br.b);
  const Nat k2 = gcd(br.a, br.c);
  const Nat k3 = gcd(br.b, br.c);
  // Each reduced face is a primitive triple; make_triple re-checks that.
  return Decomposition{k1,
                       k2,
                       k3,
                       make_triple(br.a / k1, br.b / k1, br.d / k1),
                       make_triple(br.a / k2, br.c / k2, br.e / k2),
                       make_triple(br.b / k3, br.c / k3, br.f / k3)};
}

std::ostream& operator<<(std::ostream& os, const Brick& br) {
  return os << '(' << br.a << ',' << br.b << ',' << br.c << ';' << br.d << ',' << br.e << ','
            << br.f << ')';
}

}  // namespace brickforge
