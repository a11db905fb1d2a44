#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nia/numeral.hpp"
#include "nia/term.hpp"

namespace nia {

// Predicate applied to terms, e.g. le(a, b) or eq(f(a), n0). Immutable and
// cheap to copy.
class Atom {
 public:
  Atom(std::string predicate, std::vector<Term> args);

  const std::string& predicate() const { return rep_->predicate; }
  std::span<const Term> args() const { return rep_->args; }
  std::size_t hash() const { return rep_->hash; }
  std::size_t size() const;
  std::size_t depth() const;
  bool containsMTerm() const;

  std::string toString() const;

  friend bool operator==(const Atom& a, const Atom& b);
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b);

 private:
  struct Rep {
    std::string predicate;
    std::vector<Term> args;
    std::size_t hash;
  };
  explicit Atom(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;

  friend Atom applySubst(const Substitution& sigma, const Atom& a);
};

Atom le(Term a, Term b);
Atom eq(Term a, Term b);

Atom applySubst(const Substitution& sigma, const Atom& a);
Atom unfoldAllM(const Atom& a);
void collectVariables(const Atom& a, std::vector<Term>& out);
std::optional<Substitution> unifyAtoms(const Atom& a, const Atom& b,
                                       Substitution seed = {});

// Sequent-style clause: antecedent atoms are the negative literals,
// succedent atoms the positive ones. Both sides are sets, kept sorted.
class Clause {
 public:
  Clause() = default;
  Clause(std::vector<Atom> antecedent, std::vector<Atom> succedent,
         std::optional<std::string> label = std::nullopt);

  const std::vector<Atom>& antecedent() const { return ante_; }
  const std::vector<Atom>& succedent() const { return succ_; }
  const std::optional<std::string>& label() const { return label_; }
  Clause withLabel(std::string label) const;

  bool isEmpty() const { return ante_.empty() && succ_.empty(); }
  std::size_t literalCount() const { return ante_.size() + succ_.size(); }
  std::size_t weight() const;
  std::size_t maxDepth() const;
  bool containsMTerm() const;
  bool hasInAntecedent(const Atom& a) const;
  bool hasInSuccedent(const Atom& a) const;

  std::vector<Term> variables() const;
  std::size_t hash() const;

  // "a, b |- c" syntax.
  std::string toString() const;

  // Equality ignores labels.
  friend bool operator==(const Clause& a, const Clause& b);
  friend std::strong_ordering operator<=>(const Clause& a, const Clause& b);

 private:
  std::vector<Atom> ante_;
  std::vector<Atom> succ_;
  std::optional<std::string> label_;
};

struct ClauseHash {
  std::size_t operator()(const Clause& c) const { return c.hash(); }
};

Clause applySubst(const Substitution& sigma, const Clause& c);
Clause unfoldAllM(const Clause& c);
// Renames variables apart with `prefix` followed by a counter.
Clause renameVariables(const Clause& c, const std::string& prefix);

// MTerms unfolded, variables renamed v0, v1, ... so that two clauses are
// equal up to renaming (and the m rules) iff their canonical forms are
// equal. Idempotent. The label is kept.
Clause canonicalize(const Clause& c);
bool variantOf(const Clause& a, const Clause& b);

// Some atom occurs on both sides.
bool isTautology(const Clause& c);

// There is sigma with c.ante*sigma ⊆ d.ante and c.succ*sigma ⊆ d.succ.
bool subsumes(const Clause& c, const Clause& d);

// Finite set of clauses up to renaming.
class ClauseSet {
 public:
  ClauseSet() = default;
  explicit ClauseSet(std::optional<Numeral> parameter) : parameter_(parameter) {}

  // Returns false if a variant is already present.
  bool insert(Clause c);
  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }
  const std::optional<Numeral>& parameter() const { return parameter_; }

  const Clause* findById(const std::string& id) const;
  bool containsVariant(const Clause& c) const;

  // Sorted canonical forms; labels dropped.
  std::vector<Clause> canonicalForms() const;
  bool equalUpToRenaming(const ClauseSet& other) const;

 private:
  std::optional<Numeral> parameter_;
  std::vector<Clause> clauses_;
  std::vector<Clause> canonical_;
};

}  // namespace nia
