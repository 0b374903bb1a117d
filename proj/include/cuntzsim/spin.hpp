#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace cuntzsim {

/// Isospin (or its projection) stored exactly as twice its value.
class Spin {
 public:
  constexpr Spin() = default;
  static constexpr Spin from_twice(int twice) { return Spin(twice); }
  static constexpr Spin integer(int v) { return Spin(2 * v); }

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return twice_ / 2.0; }
  /// 2T + 1
  constexpr int multiplet_dim() const { return twice_ + 1; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  /// Exact fraction string: "0", "1", "-1", "1/2", "-3/2".
  std::string to_string() const;
  /// Inverse of to_string; also accepts decimal halves such as "1.5".
  static Spin parse(std::string_view text);

  constexpr auto operator<=>(const Spin&) const = default;

 private:
  constexpr explicit Spin(int twice) : twice_(twice) {}
  int twice_ = 0;
};

}  // namespace cuntzsim
