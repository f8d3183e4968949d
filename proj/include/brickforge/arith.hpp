#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace brickforge {

using u128 = unsigned __int128;

/// Unsigned integer kept strictly below 2^127. Every operator either
/// returns an in-range value or throws std::overflow_error; results are
/// never silently wrapped.
class Nat {
 public:
  constexpr Nat() = default;
  constexpr Nat(std::uint64_t value) : v_(value) {}  // always in range

  // Checked construction from a raw 128-bit value.
  static Nat of(u128 raw);

  constexpr u128 raw() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }
  constexpr bool odd() const { return (v_ & 1) != 0; }
  constexpr bool even() const { return (v_ & 1) == 0; }

  friend Nat operator+(Nat a, Nat b);
  friend Nat operator-(Nat a, Nat b);  // throws on underflow
  friend Nat operator*(Nat a, Nat b);
  friend Nat operator/(Nat a, Nat b);  // throws on division by zero
  friend Nat operator%(Nat a, Nat b);

  Nat& operator+=(Nat o) { return *this = *this + o; }
  Nat& operator-=(Nat o) { return *this = *this - o; }
  Nat& operator*=(Nat o) { return *this = *this * o; }

  friend constexpr bool operator==(Nat a, Nat b) { return a.v_ == b.v_; }
  friend constexpr std::strong_ordering operator<=>(Nat a, Nat b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  u128 v_ = 0;
};

inline constexpr u128 nat_max_raw = ((u128{1} << 127) - 1);

/// x*x with the same overflow check as operator*.
Nat sq(Nat x);

/// |a - b|
Nat absdiff(Nat a, Nat b);

/// Floor square root: the unique r with r^2 <= n < (r+1)^2.
Nat isqrt(Nat n);

/// r with r^2 == n when n is square, empty otherwise. Uses residue
/// pre-filters mod 64, 63, 65 and 11 before falling back to isqrt; the
/// filters are exact (they never reject a square).
std::optional<Nat> perfect_square(Nat n);

Nat gcd(Nat a, Nat b);
Nat gcd3(Nat a, Nat b, Nat c);

/// 2-adic valuation: largest k with 2^k | n. Throws std::invalid_argument
/// for n == 0.
unsigned v2(Nat n);

std::string to_string(Nat n);
Nat parse_nat(std::string_view text);  // throws std::invalid_argument / std::out_of_range
std::ostream& operator<<(std::ostream& os, Nat n);

}  // namespace brickforge
