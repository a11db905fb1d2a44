#include "nia/proof.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace nia {

namespace {

constexpr std::pair<StepKind, const char*> kStepNames[] = {
    {StepKind::Input, "input"},         {StepKind::Res, "res"},
    {StepKind::Contract, "contract"},   {StepKind::EpsUnfold, "eps"},
    {StepKind::BinRes, "binres"},       {StepKind::Factor, "factor"},
    {StepKind::Rename, "rename"},
};

}  // namespace

std::string toString(StepKind k) {
  for (auto [kind, name] : kStepNames) {
    if (kind == k) return name;
  }
  return "?";
}

std::optional<StepKind> stepKindFromString(const std::string& s) {
  for (auto [kind, name] : kStepNames) {
    if (s == name) return kind;
  }
  return std::nullopt;
}

std::size_t RefutationProof::add(RefStep step) {
  for (std::size_t c : step.children) {
    if (c >= nodes_.size()) throw std::out_of_range("child index not yet defined");
  }
  nodes_.push_back(std::move(step));
  root_ = nodes_.size() - 1;
  return root_;
}

RefutationProof RefutationProof::extract(std::size_t root) const {
  std::vector<bool> keep(nodes_.size());
  keep.at(root) = true;
  for (std::size_t i = root + 1; i-- > 0;) {
    if (!keep[i]) continue;
    for (std::size_t c : nodes_[i].children) keep[c] = true;
  }
  std::vector<std::size_t> index(nodes_.size());
  RefutationProof out(inputs_);
  for (std::size_t i = 0; i <= root; ++i) {
    if (!keep[i]) continue;
    RefStep step = nodes_[i];
    for (std::size_t& c : step.children) c = index[c];
    index[i] = out.add(std::move(step));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verification

namespace {

struct Failure {
  std::string reason;
};

void require(bool cond, const std::string& reason) {
  if (!cond) throw Failure{reason};
}

std::vector<Atom> substituted(const Substitution& sigma, const std::vector<Atom>& atoms) {
  std::vector<Atom> out;
  out.reserve(atoms.size());
  for (const Atom& a : atoms) out.push_back(applySubst(sigma, a));
  return out;
}

void checkDomain(const Substitution& sigma, const std::vector<const Clause*>& premises) {
  std::vector<Term> vars;
  for (const Clause* c : premises) {
    auto v = c->variables();
    vars.insert(vars.end(), v.begin(), v.end());
  }
  std::set<Term> present(vars.begin(), vars.end());
  for (const auto& [v, t] : sigma) {
    require(present.count(v) > 0, "substitution binds " + v.toString() +
                                      " which does not occur in the premises");
    require(!occursIn(v, t), "substitution fails the occurs check at " + v.toString());
  }
}

void checkRes(const RefStep& step, const Clause& left, const Clause& right) {
  require(step.pivot.has_value(), "resolution step without pivot");
  checkDomain(step.sigma, {&left, &right});
  const Atom pivot = unfoldAllM(*step.pivot);
  auto isPivot = [&](const Atom& a) { return unfoldAllM(a) == pivot; };

  std::vector<Atom> leftSucc = substituted(step.sigma, left.succedent());
  std::vector<Atom> rightAnte = substituted(step.sigma, right.antecedent());
  require(std::any_of(leftSucc.begin(), leftSucc.end(), isPivot),
          "pivot is not an instance of a left succedent atom");
  require(std::any_of(rightAnte.begin(), rightAnte.end(), isPivot),
          "pivot is not an instance of a right antecedent atom");

  std::vector<Atom> ante = substituted(step.sigma, left.antecedent());
  for (Atom& a : rightAnte) {
    if (!isPivot(a)) ante.push_back(std::move(a));
  }
  std::vector<Atom> succ;
  for (Atom& a : leftSucc) {
    if (!isPivot(a)) succ.push_back(std::move(a));
  }
  for (Atom& a : substituted(step.sigma, right.succedent())) succ.push_back(std::move(a));
  Clause expected(std::move(ante), std::move(succ));
  require(unfoldAllM(expected) == unfoldAllM(step.conclusion),
          "conclusion differs from the resolvent " + expected.toString());
}

void checkBinRes(const RefStep& step, const Clause& left, const Clause& right) {
  require(step.leftLit && step.rightLit, "binary resolution without literals");
  require(left.hasInSuccedent(*step.leftLit), "left literal not in left succedent");
  require(right.hasInAntecedent(*step.rightLit), "right literal not in right antecedent");
  checkDomain(step.sigma, {&left, &right});
  require(applySubst(step.sigma, *step.leftLit) == applySubst(step.sigma, *step.rightLit),
          "substitution does not unify the resolved literals");
  std::vector<Atom> ante = left.antecedent();
  for (const Atom& a : right.antecedent()) {
    if (!(a == *step.rightLit)) ante.push_back(a);
  }
  std::vector<Atom> succ;
  for (const Atom& a : left.succedent()) {
    if (!(a == *step.leftLit)) succ.push_back(a);
  }
  succ.insert(succ.end(), right.succedent().begin(), right.succedent().end());
  Clause expected = applySubst(step.sigma, Clause(std::move(ante), std::move(succ)));
  require(expected == step.conclusion,
          "conclusion differs from the binary resolvent " + expected.toString());
}

void checkFactor(const RefStep& step, const Clause& child) {
  require(step.leftLit && step.rightLit, "factoring without literals");
  require(!(*step.leftLit == *step.rightLit), "factoring a literal with itself");
  auto present = [&](const Atom& a) {
    return step.factorSucc ? child.hasInSuccedent(a) : child.hasInAntecedent(a);
  };
  require(present(*step.leftLit) && present(*step.rightLit), "factored literals not in premise");
  checkDomain(step.sigma, {&child});
  require(applySubst(step.sigma, *step.leftLit) == applySubst(step.sigma, *step.rightLit),
          "substitution does not unify the factored literals");
  require(applySubst(step.sigma, child) == step.conclusion, "conclusion is not the factor");
}

void checkNode(const RefutationProof& p, std::size_t i, VerifyMode mode) {
  const RefStep& step = p.node(i);
  for (std::size_t c : step.children) require(c < i, "child does not precede its parent");
  auto arity = [&](std::size_t n) {
    require(step.children.size() == n, "wrong number of premises for " + toString(step.kind));
  };
  auto child = [&](std::size_t k) -> const Clause& {
    return p.node(step.children[k]).conclusion;
  };
  const bool relaxed = mode == VerifyMode::Relaxed;
  switch (step.kind) {
    case StepKind::Input: {
      arity(0);
      const Clause* input = p.inputs().findById(step.clauseId);
      require(input != nullptr, "unknown input clause '" + step.clauseId + "'");
      require(variantOf(*input, step.conclusion), "input is not a variant of " + step.clauseId);
      return;
    }
    case StepKind::Res:
      arity(2);
      checkRes(step, child(0), child(1));
      return;
    case StepKind::Contract:
      arity(1);
      require(unfoldAllM(child(0)) == unfoldAllM(step.conclusion),
              "contraction changed the clause");
      return;
    case StepKind::EpsUnfold:
      arity(1);
      require(unfoldAllM(child(0)) == unfoldAllM(step.conclusion),
              "not a rewrite by the m rules");
      return;
    case StepKind::BinRes:
      require(relaxed, "binary resolution outside relaxed mode");
      arity(2);
      checkBinRes(step, child(0), child(1));
      return;
    case StepKind::Factor:
      require(relaxed, "factoring outside relaxed mode");
      arity(1);
      checkFactor(step, child(0));
      return;
    case StepKind::Rename:
      require(relaxed, "renaming outside relaxed mode");
      arity(1);
      require(variantOf(child(0), step.conclusion), "not a variant of the premise");
      return;
  }
  require(false, "unknown step kind");
}

}  // namespace

VerifyResult verifyProof(const RefutationProof& p, VerifyMode mode) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    try {
      checkNode(p, i, mode);
    } catch (const Failure& f) {
      return {false, i, f.reason};
    } catch (const std::exception& e) {
      return {false, i, e.what()};
    }
  }
  if (p.size() > 0 && p.root() >= p.size()) return {false, std::nullopt, "root out of range"};
  return {};
}

VerifyResult verifyRefutation(const RefutationProof& p, VerifyMode mode) {
  if (p.size() == 0) return {false, std::nullopt, "empty proof"};
  VerifyResult r = verifyProof(p, mode);
  if (!r) return r;
  if (!p.rootClause().isEmpty()) return {false, p.root(), "root clause is not empty"};
  return r;
}

// ---------------------------------------------------------------------------
// Occurrence counting

namespace {

std::vector<BigInt> multiplicities(const RefutationProof& p) {
  std::vector<BigInt> mult(p.size());
  if (p.size() == 0) return mult;
  mult[p.root()] = 1;
  for (std::size_t i = p.root() + 1; i-- > 0;) {
    if (mult[i] == 0) continue;
    for (std::size_t c : p.node(i).children) mult[c] += mult[i];
  }
  return mult;
}

}  // namespace

BigInt occ(const std::string& clauseId, const RefutationProof& p) {
  if (p.inputs().findById(clauseId) == nullptr) {
    throw std::invalid_argument("unknown input clause " + clauseId);
  }
  auto table = occTable(p);
  auto it = table.find(clauseId);
  return it == table.end() ? BigInt(0) : it->second;
}

std::map<std::string, BigInt> occTable(const RefutationProof& p) {
  std::map<std::string, BigInt> out;
  for (const Clause& c : p.inputs().clauses()) {
    if (c.label()) out[*c.label()] = 0;
  }
  auto mult = multiplicities(p);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.node(i).kind == StepKind::Input) out[p.node(i).clauseId] += mult[i];
  }
  return out;
}

}  // namespace nia
