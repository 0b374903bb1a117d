#include "cuntzsim/spin.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "cuntzsim/errors.hpp"

namespace cuntzsim {

std::string Spin::to_string() const {
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

Spin Spin::parse(std::string_view text) {
  const auto bad = [&] { return ParseError("not a half-integer spin: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    int num = 0;
    const auto head = text.substr(0, slash);
    if (std::from_chars(head.data(), head.data() + head.size(), num).ptr != head.data() + head.size()) throw bad();
    if (text.substr(slash + 1) == "1") return Spin(2 * num);
    if (text.substr(slash + 1) != "2") throw bad();
    return Spin(num);
  }
  double v = 0.0;
  if (std::from_chars(text.data(), text.data() + text.size(), v).ptr != text.data() + text.size()) throw bad();
  const double twice = 2.0 * v;
  if (std::abs(twice - std::round(twice)) > 1e-12) throw bad();
  return Spin(static_cast<int>(std::lround(twice)));
}

}  // namespace cuntzsim
