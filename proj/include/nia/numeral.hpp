#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace nia {

// A ground term of the numeral sort: value counts applications of s to 0.
class Numeral {
 public:
  constexpr Numeral() = default;
  constexpr explicit Numeral(std::uint64_t value) : value_(value) {}

  constexpr std::uint64_t value() const { return value_; }

  Numeral succ() const;
  // Throws std::domain_error on 0.
  Numeral pred() const;

  // s(s(0)) style surface syntax.
  std::string toSurface() const;
  static Numeral parseSurface(std::string_view text);

  constexpr auto operator<=>(const Numeral&) const = default;

 private:
  std::uint64_t value_ = 0;
};

}  // namespace nia
