#include "nia/refutation.hpp"

#include "nia/schema.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nia {

namespace {

Term mt(std::uint64_t k, Term body) { return Term::mterm(Numeral(k), "x", std::move(body)); }
Atom fIs(Term t, std::uint64_t i) { return eq(f(std::move(t)), Term::num(Numeral(i))); }

bool contains(const std::vector<Atom>& atoms, const Atom& a) {
  return std::find(atoms.begin(), atoms.end(), a) != atoms.end();
}

}  // namespace

Clause resolveWith(const Clause& left, const Clause& right, const Substitution& sigma,
                   const Atom& pivot) {
  std::vector<Atom> ante, succ, leftSucc, rightAnte;
  for (const Atom& a : left.succedent()) leftSucc.push_back(applySubst(sigma, a));
  for (const Atom& a : right.antecedent()) rightAnte.push_back(applySubst(sigma, a));
  if (!contains(leftSucc, pivot) || !contains(rightAnte, pivot)) {
    throw std::invalid_argument("pivot " + pivot.toString() + " is not an instance on both sides");
  }
  for (const Atom& a : left.antecedent()) ante.push_back(applySubst(sigma, a));
  for (Atom& a : rightAnte) {
    if (!(a == pivot)) ante.push_back(std::move(a));
  }
  for (Atom& a : leftSucc) {
    if (!(a == pivot)) succ.push_back(std::move(a));
  }
  for (const Atom& a : right.succedent()) succ.push_back(applySubst(sigma, a));
  return Clause(std::move(ante), std::move(succ));
}

std::optional<Resolvent> resolve(const Clause& left, const Clause& right,
                                 const Atom& leftPick, const Atom& rightPick) {
  if (!left.hasInSuccedent(leftPick)) throw std::invalid_argument("left pick not in succedent");
  if (!right.hasInAntecedent(rightPick)) throw std::invalid_argument("right pick not in antecedent");
  auto sigma = unifyAtoms(leftPick, rightPick);
  if (!sigma) return std::nullopt;
  Atom pivot = applySubst(*sigma, leftPick);
  return Resolvent{canonicalize(resolveWith(left, right, *sigma, pivot)), *sigma};
}

// ---------------------------------------------------------------------------

Bijection::Bijection(std::vector<std::uint64_t> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size());
  for (std::uint64_t v : map_) {
    if (v >= map_.size() || seen[v]) throw std::invalid_argument("not a bijection");
    seen[v] = true;
  }
}

Bijection Bijection::identity(std::uint64_t m) {
  std::vector<std::uint64_t> map(m);
  std::iota(map.begin(), map.end(), 0);
  return Bijection(std::move(map));
}

Bijection Bijection::completing(const std::vector<std::uint64_t>& prefix, std::uint64_t m) {
  std::vector<std::uint64_t> map = prefix;
  for (std::uint64_t v = 0; v < m; ++v) {
    if (std::find(prefix.begin(), prefix.end(), v) == prefix.end()) map.push_back(v);
  }
  return Bijection(std::move(map));
}

Clause cPrimeTemplate(std::uint64_t k, std::uint64_t j, const Bijection& b) {
  std::vector<Atom> ante, succ;
  for (std::uint64_t i = 0; i <= k; ++i) ante.push_back(fIs(x(i + 1), b(i)));
  Term end = mt(k, s(x(k + 1)));
  for (std::uint64_t i = k + 1; i <= j; ++i) succ.push_back(fIs(end, b(i)));
  return Clause(std::move(ante), std::move(succ));
}

// ---------------------------------------------------------------------------

RefutationBuilder::RefutationBuilder(Numeral n) : n_(n), proof_(generateC(n)) {}

Term RefutationBuilder::fresh() { return Term::var("T" + std::to_string(++counter_)); }

std::size_t RefutationBuilder::input(const std::string& id,
                                     const std::map<std::string, Term>& renaming) {
  const Clause* c = proof_.inputs().findById(id);
  if (!c) throw std::invalid_argument(id + " is not in C(" + std::to_string(n_.value()) + ")");
  Substitution sigma;
  for (const auto& [name, t] : renaming) sigma.bind(Term::var(name), t);
  RefStep step;
  step.kind = StepKind::Input;
  step.clauseId = id;
  step.conclusion = applySubst(sigma, Clause(c->antecedent(), c->succedent()));
  return proof_.add(std::move(step));
}

std::size_t RefutationBuilder::res(std::size_t left, std::size_t right, Substitution sigma,
                                   Atom pivot) {
  RefStep step;
  step.kind = StepKind::Res;
  step.children = {left, right};
  step.conclusion = resolveWith(conclusion(left), conclusion(right), sigma, pivot);
  step.pivot = std::move(pivot);
  step.sigma = std::move(sigma);
  return proof_.add(std::move(step));
}

std::size_t RefutationBuilder::step(StepKind kind, std::size_t child, Clause c) {
  RefStep st;
  st.kind = kind;
  st.children = {child};
  st.conclusion = std::move(c);
  return proof_.add(std::move(st));
}

void RefutationBuilder::requireIndex(std::uint64_t i) const {
  if (i > n_.value()) {
    throw std::invalid_argument("index " + std::to_string(i) + " exceeds n = " +
                                std::to_string(n_.value()));
  }
}

void RefutationBuilder::requireMaxRules() const {
  if (n_.value() == 0) throw std::invalid_argument("C(0) has no max clauses");
}

RefutationBuilder::Derived RefutationBuilder::lemFirst(std::uint64_t k) {
  if (auto it = lem_.find(k); it != lem_.end()) return it->second;
  Derived out;
  if (k == 0) {
    Term t = fresh();
    std::size_t c1 = input("C1", {{"A", t}});
    out = {step(StepKind::EpsUnfold, c1, Clause({}, {le(t, mt(0, t))})), t};
  } else {
    requireMaxRules();
    Derived prev = lemFirst(k - 1);
    Term beta = fresh(), delta = fresh(), gamma = fresh();
    std::size_t c3 = input("C3", {{"A", beta}, {"B", delta}, {"G", gamma}});
    Term sx = s(x(k));
    Term inner = max(sx, delta);
    Term m = mt(k - 1, inner);
    std::size_t r = res(prev.node, c3, {{*prev.end, inner}, {beta, sx}, {gamma, m}}, le(inner, m));
    out = {step(StepKind::EpsUnfold, r, Clause({}, {le(delta, mt(k, delta))})), delta};
  }
  lem_.emplace(k, out);
  return out;
}

RefutationBuilder::Derived RefutationBuilder::cor1(std::uint64_t k) {
  if (auto it = cor1_.find(k); it != cor1_.end()) return it->second;
  requireMaxRules();
  Derived prev = lemFirst(k);
  Term beta = fresh(), delta = fresh(), gamma = fresh();
  std::size_t c2 = input("C2", {{"A", beta}, {"B", delta}, {"G", gamma}});
  Term sx = s(x(k + 1));
  Term inner = max(sx, delta);
  Term m = mt(k, inner);
  Derived out{res(prev.node, c2, {{*prev.end, inner}, {beta, sx}, {gamma, m}}, le(inner, m)),
              delta};
  cor1_.emplace(k, out);
  return out;
}

RefutationBuilder::Derived RefutationBuilder::cor2(std::uint64_t k, std::uint64_t i) {
  requireIndex(i);
  if (auto it = cor2_.find({k, i}); it != cor2_.end()) return it->second;
  Derived prev = cor1(k);
  Term p = fresh(), q = fresh();
  std::size_t c4 = input("C4_" + std::to_string(i), {{"B", p}, {"A", q}});
  Term m = mt(k, max(s(x(k + 1)), *prev.end));
  Derived out{res(prev.node, c4, {{p, x(k + 1)}, {q, m}}, le(s(x(k + 1)), m)), prev.end};
  cor2_.emplace(std::make_pair(k, i), out);
  return out;
}

RefutationBuilder::Derived RefutationBuilder::cor3(std::uint64_t k, std::uint64_t i) {
  requireIndex(i);
  if (auto it = cor3_.find({k, i}); it != cor3_.end()) return it->second;
  Derived prev = lemFirst(k);
  Term p = fresh(), q = fresh();
  std::size_t c4 = input("C4_" + std::to_string(i), {{"B", p}, {"A", q}});
  Term sx = s(x(k + 1));
  Term m = mt(k, sx);
  Derived out{res(prev.node, c4, {{*prev.end, sx}, {p, x(k + 1)}, {q, m}}, le(sx, m)),
              std::nullopt};
  cor3_.emplace(std::make_pair(k, i), out);
  return out;
}

RefutationBuilder::Derived RefutationBuilder::lbase(std::uint64_t k, const Bijection& b) {
  requireMaxRules();
  requireIndex(k);
  if (b.size() != n_.value() + 1) throw std::invalid_argument("bijection size must be n+1");
  std::vector<std::uint64_t> key(b.values().begin(), b.values().begin() + (k + 1));
  if (auto it = lbase_.find(key); it != lbase_.end()) return it->second;

  std::size_t r;
  std::optional<Term> z;
  if (k == 0) {
    Term y = fresh();
    std::size_t c5 = input("C5", {{"A", y}});
    Derived c2 = cor2(0, b(0));
    Term m = mt(0, max(s(x(1)), *c2.end));
    r = res(c5, c2.node, {{y, m}}, fIs(m, b(0)));
    z = c2.end;
  } else {
    Derived prev = lbase(k - 1, b);
    Derived c2 = cor2(k, b(k));
    Term inner = max(s(x(k + 1)), *c2.end);
    r = res(prev.node, c2.node, {{*prev.end, inner}}, fIs(mt(k, inner), b(k)));
    z = c2.end;
  }
  std::vector<Atom> ante, succ;
  for (std::uint64_t i = 0; i <= k; ++i) ante.push_back(fIs(x(i + 1), b(i)));
  for (std::uint64_t i = k + 1; i <= n_.value(); ++i) succ.push_back(fIs(mt(k + 1, *z), b(i)));
  Derived out{step(StepKind::EpsUnfold, r, Clause(std::move(ante), std::move(succ))), z};
  lbase_.emplace(std::move(key), out);
  return out;
}

RefutationBuilder::Derived RefutationBuilder::lbase2(std::uint64_t k, const Bijection& b) {
  requireIndex(k);
  if (b.size() != n_.value() + 1) throw std::invalid_argument("bijection size must be n+1");
  Clause goal = cPrimeTemplate(k, n_.value(), b);
  if (auto it = cprime_.find(goal); it != cprime_.end()) return it->second;

  std::size_t r;
  if (k == 0) {
    Term y = fresh();
    std::size_t c5 = input("C5", {{"A", y}});
    Derived c3 = cor3(0, b(0));
    Term m = mt(0, s(x(1)));
    r = res(c5, c3.node, {{y, m}}, fIs(m, b(0)));
  } else {
    Derived prev = lbase(k - 1, b);
    Derived c3 = cor3(k, b(k));
    r = res(prev.node, c3.node, {{*prev.end, s(x(k + 1))}}, fIs(mt(k, s(x(k + 1))), b(k)));
  }
  if (!(conclusion(r) == goal)) {
    throw std::logic_error("base clause mismatch: " + conclusion(r).toString());
  }
  Derived out{r, std::nullopt};
  cprime_.emplace(std::move(goal), out);
  return out;
}

RefutationBuilder::Derived RefutationBuilder::cPrime(std::uint64_t k, std::uint64_t j,
                                                     const Bijection& b) {
  if (k > j || j > n_.value()) throw std::invalid_argument("need k <= j <= n");
  if (b.size() != n_.value() + 1) throw std::invalid_argument("bijection size must be n+1");
  if (j == n_.value()) return lbase2(k, b);
  Clause goal = cPrimeTemplate(k, j, b);
  if (auto it = cprime_.find(goal); it != cprime_.end()) return it->second;

  Derived left = cPrime(k, j + 1, b);
  std::vector<std::uint64_t> prefix(b.values().begin(), b.values().begin() + (k + 1));
  prefix.push_back(b(j + 1));
  Derived right = cPrime(k + 1, k + 1, Bijection::completing(prefix, n_.value() + 1));
  Term end = mt(k, s(x(k + 1)));
  std::size_t r = res(left.node, right.node, {{x(k + 2), end}}, fIs(end, b(j + 1)));
  std::size_t c = step(StepKind::Contract, r, conclusion(r));
  if (!(conclusion(c) == goal)) {
    throw std::logic_error("clause mismatch: " + conclusion(c).toString());
  }
  Derived out{c, std::nullopt};
  cprime_.emplace(std::move(goal), out);
  return out;
}

std::size_t RefutationBuilder::refute() {
  Term y = fresh();
  std::size_t cur = input("C5", {{"A", y}});
  const std::uint64_t m = n_.value() + 1;
  for (std::uint64_t i = 0; i < m; ++i) {
    Derived unit = cPrime(0, 0, Bijection::completing({i}, m));
    cur = res(cur, unit.node, {{x(1), y}}, fIs(y, i));
  }
  proof_.setRoot(cur);
  return cur;
}

// ---------------------------------------------------------------------------

namespace {

template <typename F>
Fragment fragmentOf(Numeral n, F&& derive) {
  RefutationBuilder builder(n);
  RefutationBuilder::Derived d = derive(builder);
  return {builder.fragment(d.node), d.end};
}

}  // namespace

Fragment deriveLemFirst(std::uint64_t k, Numeral n) {
  return fragmentOf(n, [&](RefutationBuilder& b) { return b.lemFirst(k); });
}

Fragment deriveCor1(std::uint64_t k, Numeral n) {
  return fragmentOf(n, [&](RefutationBuilder& b) { return b.cor1(k); });
}

Fragment deriveCor2(std::uint64_t k, std::uint64_t i, Numeral n) {
  return fragmentOf(n, [&](RefutationBuilder& b) { return b.cor2(k, i); });
}

Fragment deriveCor3(std::uint64_t k, std::uint64_t i, Numeral n) {
  return fragmentOf(n, [&](RefutationBuilder& b) { return b.cor3(k, i); });
}

Fragment deriveLbase(std::uint64_t k, Numeral n, const Bijection& bij) {
  return fragmentOf(n, [&](RefutationBuilder& b) { return b.lbase(k, bij); });
}

Fragment deriveCPrime(std::uint64_t k, std::uint64_t j, Numeral n, const Bijection& bij) {
  return fragmentOf(n, [&](RefutationBuilder& b) { return b.cPrime(k, j, bij); });
}

RefutationProof refute(Numeral n) {
  RefutationBuilder builder(n);
  return builder.fragment(builder.refute());
}

}  // namespace nia
