#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nia {

struct OrderedPair {
  std::uint64_t i = 0;
  std::uint64_t j = 0;

  std::string toString() const;
  friend auto operator<=>(const OrderedPair&, const OrderedPair&) = default;
};

// Pairs (i, j) with i <= j <= n.
std::vector<OrderedPair> pairsOf(std::uint64_t n);
bool inPairs(std::uint64_t n, const OrderedPair& p);

// (i,j) < (l,k) iff i,k,l <= n, j < n, l <= i, k <= j,
// (i = l <-> j != k) and (j = k <-> i != l).
// Throws std::invalid_argument if a pair is outside the set.
bool lessdot(std::uint64_t n, const OrderedPair& a, const OrderedPair& b);

struct PropertyCheck {
  std::string name;
  bool holds = true;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  // At most a handful of witnesses.
  std::vector<std::string> counterexamples;
};

struct OrderingReport {
  std::uint64_t n = 0;
  std::uint64_t elements = 0;
  std::uint64_t relatedPairs = 0;
  std::uint64_t chains = 0;
  std::vector<OrderedPair> isolated;
  PropertyCheck antiReflexive;
  PropertyCheck antiSymmetric;
  PropertyCheck transitive;
  PropertyCheck acyclic;
  // Every chain has a lower bound of the form (i, n) that is greatest
  // among its lower bounds. Chains are sets of pairwise related elements.
  PropertyCheck glbClaim;

  std::string toString() const;
};

OrderingReport checkOrderingProperties(std::uint64_t n);

}  // namespace nia
