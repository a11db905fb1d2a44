#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nia/clause.hpp"

namespace nia {

using BigInt = boost::multiprecision::cpp_int;

// Res is the all-occurrence rule: one pivot instance P, removed from the
// left succedent and the right antecedent. BinRes, Factor and Rename are
// the standard inferences used by the saturation prover.
enum class StepKind { Input, Res, Contract, EpsUnfold, BinRes, Factor, Rename };

std::string toString(StepKind k);
std::optional<StepKind> stepKindFromString(const std::string& s);

struct RefStep {
  StepKind kind = StepKind::Input;
  std::vector<std::size_t> children;
  std::string clauseId;
  // Res: the unified instance P.
  std::optional<Atom> pivot;
  // BinRes: literal of the left succedent and of the right antecedent.
  // Factor: the two merged literals, both on the side given by factorSucc.
  std::optional<Atom> leftLit;
  std::optional<Atom> rightLit;
  bool factorSucc = true;
  Substitution sigma;
  Clause conclusion;
};

class RefutationProof {
 public:
  RefutationProof() = default;
  explicit RefutationProof(ClauseSet inputs) : inputs_(std::move(inputs)) {}

  std::size_t add(RefStep step);
  const std::vector<RefStep>& nodes() const { return nodes_; }
  std::vector<RefStep>& mutableNodes() { return nodes_; }
  const RefStep& node(std::size_t i) const { return nodes_.at(i); }
  std::size_t size() const { return nodes_.size(); }

  const ClauseSet& inputs() const { return inputs_; }
  std::size_t root() const { return root_; }
  void setRoot(std::size_t r) { root_ = r; }
  const Clause& rootClause() const { return nodes_.at(root_).conclusion; }

  // Copy keeping only nodes reachable from `root`, renumbered in order.
  RefutationProof extract(std::size_t root) const;

 private:
  ClauseSet inputs_;
  std::vector<RefStep> nodes_;
  std::size_t root_ = 0;
};

enum class VerifyMode { Strict, Relaxed };

struct VerifyResult {
  bool ok = true;
  std::optional<std::size_t> failingNode;
  std::string reason;

  explicit operator bool() const { return ok; }
};

// Checks every node against its children; reports the least failing index.
// Strict mode accepts Input, Res, Contract and EpsUnfold only.
VerifyResult verifyProof(const RefutationProof& p, VerifyMode mode = VerifyMode::Strict);

// Verifies and additionally requires an empty root clause.
VerifyResult verifyRefutation(const RefutationProof& p, VerifyMode mode = VerifyMode::Strict);

// Input leaves labelled clauseId in the tree unfolding below the root.
// Throws std::invalid_argument for an id that is not an input.
BigInt occ(const std::string& clauseId, const RefutationProof& p);
std::map<std::string, BigInt> occTable(const RefutationProof& p);

}  // namespace nia
