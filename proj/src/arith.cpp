#include "brickforge/arith.hpp"

#include <array>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace brickforge {

namespace {

[[noreturn]] void overflow(const char* op) {
  throw std::overflow_error(std::string("Nat overflow in ") + op);
}

inline unsigned ctz128(u128 n) {
  const auto lo = static_cast<std::uint64_t>(n);
  if (lo != 0) return static_cast<unsigned>(__builtin_ctzll(lo));
  return 64u + static_cast<unsigned>(__builtin_ctzll(static_cast<std::uint64_t>(n >> 64)));
}

template <std::size_t M>
constexpr std::array<bool, M> square_residues() {
  std::array<bool, M> table{};
  for (std::size_t r = 0; r < M; ++r) table[r * r % M] = true;
  return table;
}

constexpr auto kSquaresMod64 = square_residues<64>();
constexpr auto kSquaresMod63 = square_residues<63>();
constexpr auto kSquaresMod65 = square_residues<65>();
constexpr auto kSquaresMod11 = square_residues<11>();

constexpr std::uint64_t pow2_64_mod(std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (int i = 0; i < 64; ++i) r = r * 2 % m;
  return r;
}

// n mod M in 64-bit arithmetic so the compiler can strength-reduce the
// constant divisions; a full 128-bit divide here would dominate the scan
// hot loop.
template <std::uint64_t M>
inline std::uint64_t mod_small(u128 n) {
  constexpr std::uint64_t kShift = pow2_64_mod(M);
  const std::uint64_t hi = static_cast<std::uint64_t>(n >> 64);
  const std::uint64_t lo = static_cast<std::uint64_t>(n);
  return (hi % M * kShift + lo % M) % M;
}

}  // namespace

Nat Nat::of(u128 raw) {
  if (raw > nat_max_raw) overflow("construction");
  Nat n;
  n.v_ = raw;
  return n;
}

Nat operator+(Nat a, Nat b) {
  const u128 r = a.v_ + b.v_;  // both < 2^127, cannot wrap mod 2^128
  if (r > nat_max_raw) overflow("addition");
  Nat n;
  n.v_ = r;
  return n;
}

Nat operator-(Nat a, Nat b) {
  if (a.v_ < b.v_) overflow("subtraction");
  Nat n;
  n.v_ = a.v_ - b.v_;
  return n;
}

Nat operator*(Nat a, Nat b) {
  u128 r = 0;
  if (__builtin_mul_overflow(a.v_, b.v_, &r) || r > nat_max_raw) overflow("multiplication");
  Nat n;
  n.v_ = r;
  return n;
}

Nat operator/(Nat a, Nat b) {
  if (b.v_ == 0) throw std::invalid_argument("Nat division by zero");
  Nat n;
  n.v_ = a.v_ / b.v_;
  return n;
}

Nat operator%(Nat a, Nat b) {
  if (b.v_ == 0) throw std::invalid_argument("Nat modulo by zero");
  Nat n;
  n.v_ = a.v_ % b.v_;
  return n;
}

Nat sq(Nat x) { return x * x; }

Nat absdiff(Nat a, Nat b) { return a >= b ? a - b : b - a; }

Nat isqrt(Nat n) {
  const u128 v = n.raw();
  if (v == 0) return Nat(0);
  // Hardware float seed, then integer Newton steps; the final corrections
  // make the postcondition r^2 <= v < (r+1)^2 unconditional.
  u128 r = static_cast<u128>(std::sqrt(static_cast<long double>(v)));
  if (r == 0) r = 1;
  for (;;) {
    const u128 next = (r + v / r) >> 1;
    if (next >= r) break;
    r = next;
  }
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;  // r+1 < 2^64, square fits in u128
  return Nat::of(r);
}

std::optional<Nat> perfect_square(Nat n) {
  const u128 v = n.raw();
  if (!kSquaresMod64[static_cast<std::size_t>(v & 63)]) return std::nullopt;
  if (!kSquaresMod63[mod_small<63>(v)]) return std::nullopt;
  if (!kSquaresMod65[mod_small<65>(v)]) return std::nullopt;
  if (!kSquaresMod11[mod_small<11>(v)]) return std::nullopt;
  const Nat r = isqrt(n);
  if (r.raw() * r.raw() != v) return std::nullopt;
  return r;
}

Nat gcd(Nat a, Nat b) {
  u128 x = a.raw();
  u128 y = b.raw();
  if (x == 0) return Nat::of(y);
  if (y == 0) return Nat::of(x);
  const unsigned shift = std::min(ctz128(x), ctz128(y));
  x >>= ctz128(x);
  do {
    y >>= ctz128(y);
    if (x > y) std::swap(x, y);
    y -= x;
  } while (y != 0);
  return Nat::of(x << shift);
}

Nat gcd3(Nat a, Nat b, Nat c) { return gcd(gcd(a, b), c); }

unsigned v2(Nat n) {
  if (n.is_zero()) throw std::invalid_argument("v2 is undefined for zero");
  return ctz128(n.raw());
}

std::string to_string(Nat n) {
  u128 v = n.raw();
  if (v == 0) return "0";
  std::string digits;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
    v /= 10;
  }
  return std::string(digits.rbegin(), digits.rend());
}

Nat parse_nat(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  u128 v = 0;
  for (const char ch : text) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("invalid digit in number");
    const unsigned d = static_cast<unsigned>(ch - '0');
    if (v > nat_max_raw / 10) throw std::out_of_range("number exceeds 2^127 - 1");
    v *= 10;
    if (v > nat_max_raw - d) throw std::out_of_range("number exceeds 2^127 - 1");
    v += d;
  }
  return Nat::of(v);
}

std::ostream& operator<<(std::ostream& os, Nat n) { return os << to_string(n); }

}  // namespace brickforge
