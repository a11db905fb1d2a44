#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nia/numeral.hpp"

namespace nia {

enum class TermKind : std::uint8_t { Var, IndexedVar, NumConst, App, MTerm };

// Immutable individual-sort term with shared structure.
//
// Var and IndexedVar are the variable kinds. IndexedVar(x, i) is the
// schematic variable x_i with a ground index. MTerm(k, x, t) is the defined
// symbol m(k, x̄, t); it implicitly contains x_1..x_k.
class Term {
 public:
  static Term var(std::string name);
  static Term indexedVar(std::string family, Numeral index);
  static Term num(Numeral value);
  static Term app(std::string symbol, std::vector<Term> args);
  static Term mterm(Numeral depth, std::string family, Term body);

  TermKind kind() const;
  bool isVariable() const {
    return kind() == TermKind::Var || kind() == TermKind::IndexedVar;
  }
  // Variable name, variable family, function symbol or MTerm family.
  const std::string& name() const;
  // IndexedVar index, NumConst value or MTerm depth.
  Numeral index() const;
  // App arguments; for MTerm the single body.
  std::span<const Term> args() const;
  const Term& body() const;

  std::size_t hash() const;
  // Symbol count of the stored (folded) form.
  std::size_t size() const;
  std::size_t depth() const;
  bool containsMTerm() const;

  std::string toString() const;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

  bool sameNode(const Term& other) const { return rep_ == other.rep_; }

  struct Rep;

 private:
  explicit Term(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

// Signature shorthands.
Term f(Term t);
Term s(Term t);
Term max(Term a, Term b);
Term x(std::uint64_t i);

// Finite map from variables to terms, applied simultaneously.
//
// bind(v, v) is a no-op. Otherwise bind() enforces the occurs-check: a
// variable is never bound to a term containing it.
class Substitution {
 public:
  using Map = std::map<Term, Term>;

  Substitution() = default;
  Substitution(std::initializer_list<std::pair<Term, Term>> bindings);

  void bind(const Term& var, const Term& value);
  const Term* find(const Term& var) const;
  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }
  Map::const_iterator begin() const { return bindings_.begin(); }
  Map::const_iterator end() const { return bindings_.end(); }

  // No range term contains a domain variable.
  bool isIdempotent() const;
  // True if some IndexedVar(family, i) with 1 <= i <= depth is bound.
  bool bindsFamilyPrefix(const std::string& family, Numeral depth) const;

  Term apply(const Term& t) const;

  std::string toString() const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  Map bindings_;
};

Term applySubst(const Substitution& sigma, const Term& t);

// Most general unifier (idempotent) or nullopt. An MTerm only unifies with a
// variable or with an MTerm of equal depth and family.
std::optional<Substitution> unify(const Term& a, const Term& b);
// Extends `seed` (idempotent) to a unifier of all pairs.
std::optional<Substitution> unifyAll(
    const std::vector<std::pair<Term, Term>>& pairs, Substitution seed = {});

// One-way matching: returns sigma with applySubst(sigma, pattern) == target.
// MTerms are unfolded first. Pattern and target must be variable-disjoint.
std::optional<Substitution> match(const Term& pattern, const Term& target,
                                  Substitution seed = {});

// Rewrites the outermost-leftmost MTerm one step:
//   m(0, x, t) => t,  m(k+1, x, t) => m(k, x, max(s(x_{k+1}), t)).
// Throws std::invalid_argument if t contains no MTerm.
Term unfoldM(const Term& t);
// Normal form with respect to the rules above.
Term unfoldAllM(const Term& t);

// Variables in first-occurrence order, including those implicit in MTerms.
void collectVariables(const Term& t, std::vector<Term>& out);
bool occursIn(const Term& var, const Term& t);

}  // namespace nia
