#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace thetatrunc {

/// A rational number whose denominator divides 2, stored as twice its value.
/// Theta parameters, Bessel orders and power exponents all live here.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  constexpr HalfInteger(std::int64_t value) : twice_(2 * value) {}  // NOLINT

  static constexpr HalfInteger from_twice(std::int64_t twice) {
    HalfInteger h;
    h.twice_ = twice;
    return h;
  }

  /// Accepts "7", "-3", "9/2", "-1/2" and "4/2".
  static HalfInteger parse(std::string_view text);

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double to_double() const { return static_cast<double>(twice_) / 2.0; }

  /// Only meaningful when is_integer().
  constexpr std::int64_t integer() const { return twice_ / 2; }

  constexpr HalfInteger operator-() const { return from_twice(-twice_); }
  constexpr HalfInteger operator+(HalfInteger o) const { return from_twice(twice_ + o.twice_); }
  constexpr HalfInteger operator-(HalfInteger o) const { return from_twice(twice_ - o.twice_); }
  constexpr HalfInteger operator*(std::int64_t n) const { return from_twice(twice_ * n); }

  constexpr auto operator<=>(const HalfInteger&) const = default;

  std::string str() const;

 private:
  std::int64_t twice_ = 0;
};

}  // namespace thetatrunc
