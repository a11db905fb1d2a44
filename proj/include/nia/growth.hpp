#pragma once

#include <cstdint>

#include "nia/proof.hpp"

namespace nia {

// a(0) = 1, a(m+1) = (m+1) a(m) + 1.
BigInt recurrenceA(std::uint64_t m);
// sum_{i=0}^{m} m!/i!.
BigInt closedFormA(std::uint64_t m);

}  // namespace nia
