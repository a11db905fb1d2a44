#include "nia/growth.hpp"

namespace nia {

BigInt recurrenceA(std::uint64_t m) {
  BigInt a = 1;
  for (std::uint64_t i = 1; i <= m; ++i) a = a * i + 1;
  return a;
}

BigInt closedFormA(std::uint64_t m) {
  // m!/i! = (i+1)(i+2)...m, accumulated from i = m downwards.
  BigInt sum = 0;
  BigInt term = 1;
  for (std::uint64_t i = m + 1; i-- > 0;) {
    sum += term;
    term *= i;
  }
  return sum;
}

}  // namespace nia
