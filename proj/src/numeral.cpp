#include "nia/numeral.hpp"

#include <limits>
#include <stdexcept>

namespace nia {

Numeral Numeral::succ() const {
  if (value_ == std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("numeral overflow");
  }
  return Numeral(value_ + 1);
}

Numeral Numeral::pred() const {
  if (value_ == 0) throw std::domain_error("predecessor of 0");
  return Numeral(value_ - 1);
}

std::string Numeral::toSurface() const {
  std::string out;
  out.reserve(3 * value_ + 1);
  for (std::uint64_t i = 0; i < value_; ++i) out += "s(";
  out += '0';
  out.append(value_, ')');
  return out;
}

Numeral Numeral::parseSurface(std::string_view text) {
  std::uint64_t depth = 0;
  std::size_t pos = 0;
  while (text.substr(pos, 2) == "s(") {
    pos += 2;
    ++depth;
  }
  if (pos >= text.size() || text[pos] != '0') {
    throw std::invalid_argument("malformed numeral: " + std::string(text));
  }
  ++pos;
  for (std::uint64_t i = 0; i < depth; ++i, ++pos) {
    if (pos >= text.size() || text[pos] != ')') {
      throw std::invalid_argument("unbalanced numeral: " + std::string(text));
    }
  }
  if (pos != text.size()) {
    throw std::invalid_argument("trailing input in numeral: " + std::string(text));
  }
  return Numeral(depth);
}

}  // namespace nia
