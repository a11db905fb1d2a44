#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "nia/clause.hpp"
#include "nia/proof.hpp"

namespace nia {

struct Resolvent {
  Clause conclusion;
  Substitution sigma;
};

// All-occurrence resolution with sigma = mgu(leftPick, rightPick): every
// sigma-instance of the pivot leaves the left succedent and the right
// antecedent. The conclusion is canonicalized. nullopt if not unifiable.
// Throws std::invalid_argument if a pick is not on its side.
std::optional<Resolvent> resolve(const Clause& left, const Clause& right,
                                 const Atom& leftPick, const Atom& rightPick);

// Same rule for a given unifier sigma and pivot instance P; not canonicalized.
Clause resolveWith(const Clause& left, const Clause& right, const Substitution& sigma,
                   const Atom& pivot);

// Permutation of {0..m-1}.
class Bijection {
 public:
  explicit Bijection(std::vector<std::uint64_t> map);
  static Bijection identity(std::uint64_t m);
  // prefix first, the leftover values after it in ascending order.
  static Bijection completing(const std::vector<std::uint64_t>& prefix, std::uint64_t m);

  std::uint64_t size() const { return map_.size(); }
  std::uint64_t operator()(std::uint64_t i) const { return map_.at(i); }
  const std::vector<std::uint64_t>& values() const { return map_; }

  friend bool operator==(const Bijection&, const Bijection&) = default;

 private:
  std::vector<std::uint64_t> map_;
};

// f(x_1)=b(0), ..., f(x_{k+1})=b(k) |- f(m(k,x,s(x_{k+1})))=b(i) for i = k+1..j.
Clause cPrimeTemplate(std::uint64_t k, std::uint64_t j, const Bijection& b);

// Builds the lemma-driven refutation of C(n) into one shared proof DAG.
// Derived fragments are memoized, so repeated requests return the same node.
class RefutationBuilder {
 public:
  explicit RefutationBuilder(Numeral n);

  struct Derived {
    std::size_t node;
    // The free end term of the conclusion, where the lemma has one.
    std::optional<Term> end;
  };

  // |- t <= m(k,x,t), t fresh.
  Derived lemFirst(std::uint64_t k);
  // |- s(x_{k+1}) <= m(k,x,max(s(x_{k+1}),t)).
  Derived cor1(std::uint64_t k);
  // f(x_{k+1})=i, f(m(k,x,max(s(x_{k+1}),t)))=i |-.
  Derived cor2(std::uint64_t k, std::uint64_t i);
  // f(x_{k+1})=i, f(m(k,x,s(x_{k+1})))=i |-.
  Derived cor3(std::uint64_t k, std::uint64_t i);
  // f(x_1)=b(0), ..., f(x_{k+1})=b(k) |- f(m(k+1,x,z))=b(i) for i = k+1..n.
  Derived lbase(std::uint64_t k, const Bijection& b);
  // The c' clause at j = n.
  Derived lbase2(std::uint64_t k, const Bijection& b);
  // The c' clause for k <= j <= n.
  Derived cPrime(std::uint64_t k, std::uint64_t j, const Bijection& b);
  // Empty clause.
  std::size_t refute();

  Numeral parameter() const { return n_; }
  const RefutationProof& proof() const { return proof_; }
  RefutationProof fragment(std::size_t root) const { return proof_.extract(root); }

 private:
  Term fresh();
  // Input node holding a variant of the labelled input under `renaming`.
  std::size_t input(const std::string& id, const std::map<std::string, Term>& renaming);
  std::size_t res(std::size_t left, std::size_t right, Substitution sigma, Atom pivot);
  std::size_t step(StepKind kind, std::size_t child, Clause conclusion);
  const Clause& conclusion(std::size_t node) const { return proof_.node(node).conclusion; }
  void requireIndex(std::uint64_t i) const;
  void requireMaxRules() const;

  Numeral n_;
  RefutationProof proof_;
  std::uint64_t counter_ = 0;
  std::map<std::uint64_t, Derived> lem_, cor1_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, Derived> cor2_, cor3_;
  std::map<std::vector<std::uint64_t>, Derived> lbase_;
  std::map<Clause, Derived> cprime_;
};

struct Fragment {
  RefutationProof proof;
  std::optional<Term> end;
};

Fragment deriveLemFirst(std::uint64_t k, Numeral n);
Fragment deriveCor1(std::uint64_t k, Numeral n);
Fragment deriveCor2(std::uint64_t k, std::uint64_t i, Numeral n);
Fragment deriveCor3(std::uint64_t k, std::uint64_t i, Numeral n);
Fragment deriveLbase(std::uint64_t k, Numeral n, const Bijection& b);
Fragment deriveCPrime(std::uint64_t k, std::uint64_t j, Numeral n, const Bijection& b);
RefutationProof refute(Numeral n);

}  // namespace nia
