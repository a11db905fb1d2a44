#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nia/clause.hpp"
#include "nia/proof.hpp"
#include "nia/refutation.hpp"

namespace nia {

struct ProverLimits {
  std::uint64_t maxClauses = 500000;
  double maxSeconds = 30.0;
  std::optional<std::size_t> maxTermDepth;
  // Every ageRatio-th given clause is the oldest instead of the lightest.
  std::uint64_t ageRatio = 5;
  // Ordered resolution with selection; see saturate(). Off means every
  // literal is eligible.
  bool ordered = true;
};

enum class ProverStatus { Refuted, Saturated, ResourceOut };
std::string toString(ProverStatus s);

struct ProverStats {
  std::uint64_t given = 0;
  std::uint64_t generated = 0;
  std::uint64_t kept = 0;
  std::uint64_t subsumed = 0;
  std::uint64_t tautologies = 0;
  std::uint64_t depthPruned = 0;
  std::map<std::string, BigInt> inputUses;

  friend bool operator==(const ProverStats&, const ProverStats&) = default;
};

struct ProverResult {
  ProverStatus status = ProverStatus::ResourceOut;
  // Set when refuted; checks under VerifyMode::Relaxed.
  std::optional<RefutationProof> proof;
  ProverStats stats;
  double seconds = 0;
};

// Standard binary resolution on one literal pair with their mgu. The
// premises should be variable-disjoint. Throws std::invalid_argument if a
// literal is not on its side.
std::optional<Resolvent> binaryResolve(const Clause& left, const Clause& right,
                                       const Atom& leftLit, const Atom& rightLit);
// Merges two literals of the same side by their mgu.
std::optional<Resolvent> factor(const Clause& c, const Atom& a, const Atom& b);

// Given-clause saturation with binary resolution, factoring, forward
// subsumption and tautology deletion. MTerms are unfolded first.
// When ordered, a clause with an le antecedent atom resolves on its heaviest
// such atom only; other clauses resolve on atoms that are maximal under a
// Knuth-Bendix order and factor on maximal succedent atoms.
ProverResult saturate(const ClauseSet& cs, const ProverLimits& limits = {});

}  // namespace nia
