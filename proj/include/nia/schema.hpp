#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nia/clause.hpp"
#include "nia/clause_term.hpp"

namespace nia {

// Atom, binary disjunction, or iterated disjunction over i = 0..bound of
// `body` with the index variable replaced by the numeral constant i.
class Formula {
 public:
  enum class Kind { Atom, Or, IteratedOr };

  static Formula atom(Atom a);
  static Formula disj(Formula l, Formula r);
  static Formula iteratedOr(Atom body, std::string indexVar, Numeral bound);

  Kind kind() const { return kind_; }
  const Atom& atomValue() const { return atoms_.front(); }
  const Formula& left() const { return parts_->first; }
  const Formula& right() const { return parts_->second; }
  const Atom& body() const { return atoms_.front(); }
  const std::string& indexVar() const { return indexVar_; }
  Numeral bound() const { return bound_; }

  std::string toString() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  Formula() = default;
  Kind kind_ = Kind::Atom;
  std::vector<Atom> atoms_;
  std::shared_ptr<const std::pair<Formula, Formula>> parts_;
  std::string indexVar_;
  Numeral bound_;
};

// Rewrites iterated disjunctions away:
//   OR_{i=0}^{0} P(i) => P(0),  OR_{i=0}^{y+1} P(i) => OR_{i=0}^{y} P(i) v P(y+1).
Formula unfoldIteratedOr(const Formula& f);
// Disjuncts of an iterated-or-free formula, left to right.
std::vector<Atom> disjuncts(const Formula& f);

struct Configuration {
  std::string id;
  std::string description;
};

struct ProofNodeIR {
  enum class Kind { Axiom, Link, Unary, Binary };

  Kind kind = Kind::Axiom;
  std::string rule;

  // Axiom partitions.
  std::vector<Formula> gammaOmega, gammaCut, gamma;
  std::vector<Formula> deltaOmega, deltaCut, delta;

  // Link.
  std::string proofsym;
  std::string config;
  ArithExpr arg;

  std::vector<ProofNodeIR> children;
  bool auxIsAncestor = false;

  static ProofNodeIR axiom(std::string rule, std::vector<Formula> gammaCut,
                           std::vector<Formula> deltaCut, std::vector<Formula> gamma = {},
                           std::vector<Formula> delta = {});
  static ProofNodeIR link(std::string proofsym, std::string config, ArithExpr arg);
  static ProofNodeIR unary(std::string rule, ProofNodeIR child);
  static ProofNodeIR binary(std::string rule, ProofNodeIR l, ProofNodeIR r, bool auxIsAncestor);

  std::size_t countLinks() const;
  std::vector<const ProofNodeIR*> links() const;
};

// base is the proof at 0; step(k) the proof at k+1.
struct ProofSchemaPair {
  std::string proofsym;
  std::string config;
  ProofNodeIR base;
  std::function<ProofNodeIR(Numeral)> step;
};

// The four cases of the characteristic term: axioms give their ancestor
// part, links give clause-set symbols, unary rules pass through, binary
// rules give (+) when the auxiliary formulas are ancestors and (x) otherwise.
ClauseTerm extractCharTerm(const ProofNodeIR& node, const Configuration& cfg);

struct ClSymDefinition {
  ClauseTerm base;
  std::function<ClauseTerm(Numeral)> step;
};
using ClSymDefs = std::map<std::pair<std::string, std::string>, ClSymDefinition>;

// Replaces every clause-set symbol by its definition at the symbol's
// argument (param := n) until none remain.
ClauseTerm unfoldClSymbols(const ClauseTerm& t, Numeral n, const ClSymDefs& defs);

struct NiaFixture {
  ProofSchemaPair omega;
  ProofSchemaPair psi;
  std::vector<Configuration> configurations;

  const Configuration& configuration(const std::string& id) const;
  ClSymDefs definitions() const;
  // cl[omega, empty](n).
  static ClauseTerm topTerm();
};

NiaFixture niaFixture();

// Clause set of the fixture at n: unfold, evaluate, drop tautologies.
ClauseSet extractClauseSet(Numeral n);

// C1..C5 built directly.
ClauseSet generateC(Numeral n);

}  // namespace nia
