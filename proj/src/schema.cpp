#include "nia/schema.hpp"

#include <stdexcept>

namespace nia {

// ---------------------------------------------------------------------------
// Formula

Formula Formula::atom(Atom a) {
  Formula f;
  f.kind_ = Kind::Atom;
  f.atoms_.push_back(std::move(a));
  return f;
}

Formula Formula::disj(Formula l, Formula r) {
  Formula f;
  f.kind_ = Kind::Or;
  f.parts_ = std::make_shared<const std::pair<Formula, Formula>>(std::move(l), std::move(r));
  return f;
}

Formula Formula::iteratedOr(Atom body, std::string indexVar, Numeral bound) {
  Formula f;
  f.kind_ = Kind::IteratedOr;
  f.atoms_.push_back(std::move(body));
  f.indexVar_ = std::move(indexVar);
  f.bound_ = bound;
  return f;
}

std::string Formula::toString() const {
  switch (kind_) {
    case Kind::Atom: return atomValue().toString();
    case Kind::Or: return "(" + left().toString() + " | " + right().toString() + ")";
    case Kind::IteratedOr:
      return "OR[" + indexVar_ + "=0.." + std::to_string(bound_.value()) + "] " +
             body().toString();
  }
  return {};
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Formula::Kind::Atom: return a.atomValue() == b.atomValue();
    case Formula::Kind::Or: return a.left() == b.left() && a.right() == b.right();
    case Formula::Kind::IteratedOr:
      return a.body() == b.body() && a.indexVar_ == b.indexVar_ && a.bound_ == b.bound_;
  }
  return false;
}

namespace {

Atom instanceAt(const Formula& f, std::uint64_t i) {
  Substitution sigma;
  sigma.bind(Term::var(f.indexVar()), Term::num(Numeral(i)));
  return applySubst(sigma, f.body());
}

}  // namespace

Formula unfoldIteratedOr(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return f;
    case Formula::Kind::Or:
      return Formula::disj(unfoldIteratedOr(f.left()), unfoldIteratedOr(f.right()));
    case Formula::Kind::IteratedOr: {
      Formula out = Formula::atom(instanceAt(f, 0));
      for (std::uint64_t i = 1; i <= f.bound().value(); ++i) {
        out = Formula::disj(std::move(out), Formula::atom(instanceAt(f, i)));
      }
      return out;
    }
  }
  return f;
}

std::vector<Atom> disjuncts(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return {f.atomValue()};
    case Formula::Kind::Or: {
      auto out = disjuncts(f.left());
      auto rest = disjuncts(f.right());
      out.insert(out.end(), rest.begin(), rest.end());
      return out;
    }
    case Formula::Kind::IteratedOr:
      throw std::invalid_argument("iterated disjunction not unfolded: " + f.toString());
  }
  return {};
}

// ---------------------------------------------------------------------------
// Proof IR

ProofNodeIR ProofNodeIR::axiom(std::string rule, std::vector<Formula> gammaCut,
                               std::vector<Formula> deltaCut, std::vector<Formula> gamma,
                               std::vector<Formula> delta) {
  ProofNodeIR n;
  n.kind = Kind::Axiom;
  n.rule = std::move(rule);
  n.gammaCut = std::move(gammaCut);
  n.deltaCut = std::move(deltaCut);
  n.gamma = std::move(gamma);
  n.delta = std::move(delta);
  return n;
}

ProofNodeIR ProofNodeIR::link(std::string proofsym, std::string config, ArithExpr arg) {
  ProofNodeIR n;
  n.kind = Kind::Link;
  n.rule = "link";
  n.proofsym = std::move(proofsym);
  n.config = std::move(config);
  n.arg = std::move(arg);
  return n;
}

ProofNodeIR ProofNodeIR::unary(std::string rule, ProofNodeIR child) {
  ProofNodeIR n;
  n.kind = Kind::Unary;
  n.rule = std::move(rule);
  n.children.push_back(std::move(child));
  return n;
}

ProofNodeIR ProofNodeIR::binary(std::string rule, ProofNodeIR l, ProofNodeIR r,
                                bool auxIsAncestor) {
  ProofNodeIR n;
  n.kind = Kind::Binary;
  n.rule = std::move(rule);
  n.children.push_back(std::move(l));
  n.children.push_back(std::move(r));
  n.auxIsAncestor = auxIsAncestor;
  return n;
}

std::size_t ProofNodeIR::countLinks() const { return links().size(); }

std::vector<const ProofNodeIR*> ProofNodeIR::links() const {
  std::vector<const ProofNodeIR*> out;
  if (kind == Kind::Link) out.push_back(this);
  for (const ProofNodeIR& c : children) {
    auto sub = c.links();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

namespace {

void appendAtoms(std::vector<Atom>& out, const std::vector<Formula>& fs) {
  for (const Formula& f : fs) {
    auto atoms = disjuncts(unfoldIteratedOr(f));
    out.insert(out.end(), atoms.begin(), atoms.end());
  }
}

}  // namespace

ClauseTerm extractCharTerm(const ProofNodeIR& node, const Configuration& cfg) {
  switch (node.kind) {
    case ProofNodeIR::Kind::Axiom: {
      if (!node.children.empty()) throw std::invalid_argument("axiom with premises");
      std::vector<Atom> ante, succ;
      for (const auto* part : {&node.gammaOmega, &node.gammaCut}) {
        for (const Formula& f : *part) {
          if (f.kind() != Formula::Kind::Atom) {
            throw std::invalid_argument("compound ancestor in antecedent: " + f.toString());
          }
        }
        appendAtoms(ante, *part);
      }
      appendAtoms(succ, node.deltaOmega);
      appendAtoms(succ, node.deltaCut);
      return ClauseTerm::leaf({Clause(std::move(ante), std::move(succ))});
    }
    case ProofNodeIR::Kind::Link:
      if (!node.children.empty()) throw std::invalid_argument("link with premises");
      return ClauseTerm::clSym(node.proofsym, node.config, node.arg);
    case ProofNodeIR::Kind::Unary:
      if (node.children.size() != 1) throw std::invalid_argument("unary rule arity");
      return extractCharTerm(node.children[0], cfg);
    case ProofNodeIR::Kind::Binary: {
      if (node.children.size() != 2) throw std::invalid_argument("binary rule arity");
      ClauseTerm l = extractCharTerm(node.children[0], cfg);
      ClauseTerm r = extractCharTerm(node.children[1], cfg);
      return node.auxIsAncestor ? ClauseTerm::oplus(std::move(l), std::move(r))
                                : ClauseTerm::otimes(std::move(l), std::move(r));
    }
  }
  throw std::invalid_argument("unknown IR node");
}

// ---------------------------------------------------------------------------
// Symbol unfolding

namespace {

using Active = std::map<std::pair<std::string, std::string>, std::uint64_t>;

ClauseTerm unfoldRec(const ClauseTerm& t, Numeral n, const ClSymDefs& defs, Active& active) {
  switch (t.kind()) {
    case ClauseTermKind::Leaf: return t;
    case ClauseTermKind::Oplus:
      return ClauseTerm::oplus(unfoldRec(t.left(), n, defs, active),
                               unfoldRec(t.right(), n, defs, active));
    case ClauseTermKind::Otimes:
      return ClauseTerm::otimes(unfoldRec(t.left(), n, defs, active),
                                unfoldRec(t.right(), n, defs, active));
    case ClauseTermKind::ClSym: {
      auto key = std::make_pair(t.proofsym(), t.config());
      auto def = defs.find(key);
      if (def == defs.end()) {
        throw std::invalid_argument("no definition for " + t.toString());
      }
      Numeral k = t.arg().evaluate(n);
      auto outer = active.find(key);
      if (outer != active.end() && k.value() >= outer->second) {
        throw std::invalid_argument("non-decreasing recursion at " + t.toString());
      }
      std::optional<std::uint64_t> saved;
      if (outer != active.end()) saved = outer->second;
      active[key] = k.value();
      ClauseTerm body = k.value() == 0 ? def->second.base : def->second.step(k.pred());
      ClauseTerm out = unfoldRec(body, n, defs, active);
      if (saved) {
        active[key] = *saved;
      } else {
        active.erase(key);
      }
      return out;
    }
  }
  return t;
}

}  // namespace

ClauseTerm unfoldClSymbols(const ClauseTerm& t, Numeral n, const ClSymDefs& defs) {
  Active active;
  return unfoldRec(t, n, defs, active);
}

// ---------------------------------------------------------------------------
// The NiA proof schema

namespace {

const Term kAlpha = Term::var("A");
const Term kBeta = Term::var("B");
const Term kGamma = Term::var("G");

Formula fa(Atom a) { return Formula::atom(std::move(a)); }
Atom fEq(const Term& t, std::uint64_t i) { return eq(f(t), Term::num(Numeral(i))); }

Formula codomainOr(const Term& t, Numeral bound) {
  return Formula::iteratedOr(eq(f(t), Term::var("I")), "I", bound);
}

// s(B) <= A |- s(B) <= A, the left occurrence a cut ancestor.
ProofNodeIR successorAxiom() {
  return ProofNodeIR::axiom("ax", {fa(le(s(kBeta), kAlpha))}, {}, {},
                            {fa(le(s(kBeta), kAlpha))});
}

// f(B)=i*, f(A)=i* |- f(B)=f(A).
ProofNodeIR equalityAxiom(std::uint64_t i) {
  return ProofNodeIR::axiom("ax_eq", {fa(fEq(kBeta, i)), fa(fEq(kAlpha, i))}, {}, {},
                            {fa(eq(f(kBeta), f(kAlpha)))});
}

ProofNodeIR collision(std::uint64_t i) {
  return ProofNodeIR::binary(
      "and:l", ProofNodeIR::unary("weak:l", successorAxiom()),
      ProofNodeIR::unary("weak:l", equalityAxiom(i)), false);
}

ProofNodeIR omegaBase() {
  ProofNodeIR left = ProofNodeIR::binary(
      "and:r", ProofNodeIR::axiom("ax", {}, {fa(le(kAlpha, kAlpha))}),
      ProofNodeIR::axiom("ax", {}, {codomainOr(kAlpha, Numeral(0))},
                         {codomainOr(kAlpha, Numeral(0))}),
      true);
  ProofNodeIR right = ProofNodeIR::unary("all:l", ProofNodeIR::unary("all:l", collision(0)));
  return ProofNodeIR::binary("cut", ProofNodeIR::unary("all:r", left), right, true);
}

ProofNodeIR omegaStep(Numeral k) {
  Numeral bound = k.succ();
  ProofNodeIR left = ProofNodeIR::binary(
      "and:r", ProofNodeIR::axiom("ax", {}, {fa(le(kAlpha, kAlpha))}),
      ProofNodeIR::axiom("ax", {}, {codomainOr(kAlpha, bound)}, {codomainOr(kAlpha, bound)}),
      true);
  return ProofNodeIR::binary(
      "cut", ProofNodeIR::link("psi", "Omega", ArithExpr::constant(bound.value())),
      ProofNodeIR::unary("all:r", left), true);
}

ProofNodeIR psiBase() {
  return ProofNodeIR::unary("all:l", ProofNodeIR::unary("all:l", collision(0)));
}

ProofNodeIR psiStep(Numeral k) {
  const std::uint64_t top = k.value() + 1;
  Atom maxLe = le(max(kAlpha, kBeta), kGamma);
  ProofNodeIR cascade = ProofNodeIR::axiom("ax", {fa(fEq(kGamma, 0))}, {fa(fEq(kGamma, 0))});
  for (std::uint64_t i = 1; i <= top; ++i) {
    cascade = ProofNodeIR::binary(
        "or:l", std::move(cascade),
        ProofNodeIR::axiom("ax", {fa(fEq(kGamma, i))}, {fa(fEq(kGamma, i))}), true);
  }
  ProofNodeIR leftMax = ProofNodeIR::axiom("ax_max1", {fa(maxLe)}, {fa(le(kAlpha, kGamma))});
  ProofNodeIR rightMax = ProofNodeIR::axiom("ax_max2", {fa(maxLe)}, {fa(le(kBeta, kGamma))});
  ProofNodeIR upper = ProofNodeIR::binary("cut", leftMax, ProofNodeIR::unary("all:l", cascade), true);
  upper = ProofNodeIR::binary("cut", std::move(upper), rightMax, true);
  upper = ProofNodeIR::binary(
      "cut", std::move(upper),
      ProofNodeIR::link("psi", "Omega", ArithExpr::constant(k.value())), true);
  ProofNodeIR lower = ProofNodeIR::unary("all:l", ProofNodeIR::unary("all:l", collision(top)));
  return ProofNodeIR::binary("cut", std::move(upper), std::move(lower), true);
}

}  // namespace

const Configuration& NiaFixture::configuration(const std::string& id) const {
  for (const Configuration& c : configurations) {
    if (c.id == id) return c;
  }
  throw std::invalid_argument("unknown configuration " + id);
}

ClSymDefs NiaFixture::definitions() const {
  ClSymDefs defs;
  for (const ProofSchemaPair* pair : {&omega, &psi}) {
    const Configuration cfg = configuration(pair->config);
    auto step = pair->step;
    defs.insert_or_assign({pair->proofsym, pair->config}, ClSymDefinition{
        extractCharTerm(pair->base, cfg),
        [step, cfg](Numeral k) { return extractCharTerm(step(k), cfg); }});
  }
  return defs;
}

ClauseTerm NiaFixture::topTerm() {
  return ClauseTerm::clSym("omega", "empty", ArithExpr::parameter("n"));
}

NiaFixture niaFixture() {
  NiaFixture fx;
  fx.omega = {"omega", "empty", omegaBase(), omegaStep};
  fx.psi = {"psi", "Omega", psiBase(), psiStep};
  fx.configurations = {
      {"empty", "no end-sequent occurrence is marked"},
      {"Omega", "the universally quantified codomain formula of the end-sequent"},
  };
  return fx;
}

ClauseSet extractClauseSet(Numeral n) {
  NiaFixture fx = niaFixture();
  ClauseTerm t = unfoldClSymbols(NiaFixture::topTerm(), n, fx.definitions());
  ClauseSet out(n);
  for (Clause& c : evalClauseTerm(t)) {
    if (!isTautology(c)) out.insert(std::move(c));
  }
  return out;
}

ClauseSet generateC(Numeral n) {
  ClauseSet out(n);
  out.insert(Clause({}, {le(kAlpha, kAlpha)}, "C1"));
  if (n.value() >= 1) {
    out.insert(Clause({le(max(kAlpha, kBeta), kGamma)}, {le(kAlpha, kGamma)}, "C2"));
    out.insert(Clause({le(max(kAlpha, kBeta), kGamma)}, {le(kBeta, kGamma)}, "C3"));
  }
  for (std::uint64_t i = 0; i <= n.value(); ++i) {
    out.insert(Clause({fEq(kBeta, i), fEq(kAlpha, i), le(s(kBeta), kAlpha)}, {},
                      "C4_" + std::to_string(i)));
  }
  std::vector<Atom> codomain;
  for (std::uint64_t i = 0; i <= n.value(); ++i) codomain.push_back(fEq(kAlpha, i));
  out.insert(Clause({}, std::move(codomain), "C5"));
  return out;
}

}  // namespace nia
