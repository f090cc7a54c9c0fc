#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace thetalift {

// Raised on invalid user-supplied data (malformed files, parity or
// dimension violations). Internal invariant breaches use assert.
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact half-integer, stored as twice its value. All parameter
// arithmetic in the library goes through this type; there is no
// floating point anywhere.
struct HalfInt {
  std::int64_t twice = 0;

  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(std::int64_t t) {
    HalfInt h;
    h.twice = t;
    return h;
  }
  static constexpr HalfInt whole(std::int64_t v) { return from_twice(2 * v); }

  constexpr bool is_integer() const { return twice % 2 == 0; }
  constexpr bool is_zero() const { return twice == 0; }
  constexpr int sign() const { return twice > 0 ? 1 : (twice < 0 ? -1 : 0); }
  constexpr HalfInt abs() const { return from_twice(twice < 0 ? -twice : twice); }

  constexpr HalfInt operator-() const { return from_twice(-twice); }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
    return from_twice(a.twice + b.twice);
  }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) {
    return from_twice(a.twice - b.twice);
  }
  friend constexpr bool operator==(HalfInt a, HalfInt b) { return a.twice == b.twice; }
  friend constexpr bool operator!=(HalfInt a, HalfInt b) { return a.twice != b.twice; }
  friend constexpr bool operator<(HalfInt a, HalfInt b) { return a.twice < b.twice; }
  friend constexpr bool operator<=(HalfInt a, HalfInt b) { return a.twice <= b.twice; }
  friend constexpr bool operator>(HalfInt a, HalfInt b) { return a.twice > b.twice; }
  friend constexpr bool operator>=(HalfInt a, HalfInt b) { return a.twice >= b.twice; }
};

// "3", "-7/2"
std::string to_string(HalfInt h);

// Accepts "3", "-3" or a fraction over two: "7/2", "-7/2".
HalfInt parse_half_int(const std::string& text);

}  // namespace thetalift
