#include "nia/clause.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace nia {

// ---------------------------------------------------------------------------
// Atom

namespace {

std::size_t hashAtom(const std::string& predicate, const std::vector<Term>& args) {
  std::size_t h = std::hash<std::string>{}(predicate);
  for (const Term& t : args) h ^= t.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

Atom::Atom(std::string predicate, std::vector<Term> args) {
  if (predicate.empty()) throw std::invalid_argument("empty predicate");
  if ((predicate == "le" || predicate == "eq") && args.size() != 2) {
    throw std::invalid_argument("arity mismatch for " + predicate);
  }
  std::size_t h = hashAtom(predicate, args);
  rep_ = std::make_shared<const Rep>(Rep{std::move(predicate), std::move(args), h});
}

std::size_t Atom::size() const {
  std::size_t n = 1;
  for (const Term& t : args()) n += t.size();
  return n;
}

std::size_t Atom::depth() const {
  std::size_t d = 0;
  for (const Term& t : args()) d = std::max(d, t.depth());
  return d;
}

bool Atom::containsMTerm() const {
  return std::any_of(args().begin(), args().end(),
                     [](const Term& t) { return t.containsMTerm(); });
}

std::string Atom::toString() const {
  std::string out = predicate();
  if (!args().empty()) {
    out += '(';
    for (std::size_t i = 0; i < args().size(); ++i) {
      if (i) out += ',';
      out += args()[i].toString();
    }
    out += ')';
  }
  return out;
}

bool operator==(const Atom& a, const Atom& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.hash() != b.hash()) return false;
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
  if (a.rep_ == b.rep_) return std::strong_ordering::equal;
  if (auto c = a.predicate().compare(b.predicate()) <=> 0; c != 0) return c;
  if (auto c = a.args().size() <=> b.args().size(); c != 0) return c;
  for (std::size_t i = 0; i < a.args().size(); ++i) {
    if (auto c = a.args()[i] <=> b.args()[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Atom le(Term a, Term b) { return Atom("le", {std::move(a), std::move(b)}); }
Atom eq(Term a, Term b) { return Atom("eq", {std::move(a), std::move(b)}); }

Atom applySubst(const Substitution& sigma, const Atom& a) {
  if (sigma.empty()) return a;
  std::vector<Term> args;
  args.reserve(a.args().size());
  bool changed = false;
  for (const Term& t : a.args()) {
    args.push_back(sigma.apply(t));
    changed = changed || !args.back().sameNode(t);
  }
  return changed ? Atom(a.predicate(), std::move(args)) : a;
}

Atom unfoldAllM(const Atom& a) {
  if (!a.containsMTerm()) return a;
  std::vector<Term> args;
  for (const Term& t : a.args()) args.push_back(unfoldAllM(t));
  return Atom(a.predicate(), std::move(args));
}

void collectVariables(const Atom& a, std::vector<Term>& out) {
  for (const Term& t : a.args()) collectVariables(t, out);
}

std::optional<Substitution> unifyAtoms(const Atom& a, const Atom& b, Substitution seed) {
  if (a.predicate() != b.predicate() || a.args().size() != b.args().size()) {
    return std::nullopt;
  }
  std::vector<std::pair<Term, Term>> pairs;
  for (std::size_t i = 0; i < a.args().size(); ++i) {
    pairs.emplace_back(a.args()[i], b.args()[i]);
  }
  return unifyAll(pairs, std::move(seed));
}

// ---------------------------------------------------------------------------
// Clause

namespace {

void normalizeSide(std::vector<Atom>& atoms) {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
}

std::string joinAtoms(const std::vector<Atom>& atoms) {
  std::string out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += ", ";
    out += atoms[i].toString();
  }
  return out;
}

}  // namespace

Clause::Clause(std::vector<Atom> antecedent, std::vector<Atom> succedent,
               std::optional<std::string> label)
    : ante_(std::move(antecedent)), succ_(std::move(succedent)), label_(std::move(label)) {
  normalizeSide(ante_);
  normalizeSide(succ_);
}

Clause Clause::withLabel(std::string label) const {
  Clause c = *this;
  c.label_ = std::move(label);
  return c;
}

std::size_t Clause::weight() const {
  std::size_t w = 0;
  for (const Atom& a : ante_) w += a.size();
  for (const Atom& a : succ_) w += a.size();
  return w;
}

std::size_t Clause::maxDepth() const {
  std::size_t d = 0;
  for (const Atom& a : ante_) d = std::max(d, a.depth());
  for (const Atom& a : succ_) d = std::max(d, a.depth());
  return d;
}

bool Clause::containsMTerm() const {
  auto has = [](const Atom& a) { return a.containsMTerm(); };
  return std::any_of(ante_.begin(), ante_.end(), has) ||
         std::any_of(succ_.begin(), succ_.end(), has);
}

bool Clause::hasInAntecedent(const Atom& a) const {
  return std::binary_search(ante_.begin(), ante_.end(), a);
}

bool Clause::hasInSuccedent(const Atom& a) const {
  return std::binary_search(succ_.begin(), succ_.end(), a);
}

std::vector<Term> Clause::variables() const {
  std::vector<Term> out;
  for (const Atom& a : ante_) collectVariables(a, out);
  for (const Atom& a : succ_) collectVariables(a, out);
  return out;
}

std::size_t Clause::hash() const {
  std::size_t h = ante_.size() * 31 + succ_.size();
  for (const Atom& a : ante_) h = h * 1000003 ^ a.hash();
  h ^= 0x51ed270b;
  for (const Atom& a : succ_) h = h * 1000003 ^ a.hash();
  return h;
}

std::string Clause::toString() const {
  std::string out = joinAtoms(ante_);
  out += ante_.empty() ? "|-" : " |-";
  if (!succ_.empty()) out += " " + joinAtoms(succ_);
  return out;
}

bool operator==(const Clause& a, const Clause& b) {
  return a.ante_ == b.ante_ && a.succ_ == b.succ_;
}

std::strong_ordering operator<=>(const Clause& a, const Clause& b) {
  if (auto c = a.ante_.size() <=> b.ante_.size(); c != 0) return c;
  if (auto c = a.succ_.size() <=> b.succ_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.ante_.size(); ++i) {
    if (auto c = a.ante_[i] <=> b.ante_[i]; c != 0) return c;
  }
  for (std::size_t i = 0; i < a.succ_.size(); ++i) {
    if (auto c = a.succ_[i] <=> b.succ_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Clause applySubst(const Substitution& sigma, const Clause& c) {
  std::vector<Atom> ante, succ;
  ante.reserve(c.antecedent().size());
  succ.reserve(c.succedent().size());
  for (const Atom& a : c.antecedent()) ante.push_back(applySubst(sigma, a));
  for (const Atom& a : c.succedent()) succ.push_back(applySubst(sigma, a));
  return Clause(std::move(ante), std::move(succ), c.label());
}

Clause unfoldAllM(const Clause& c) {
  if (!c.containsMTerm()) return c;
  std::vector<Atom> ante, succ;
  for (const Atom& a : c.antecedent()) ante.push_back(unfoldAllM(a));
  for (const Atom& a : c.succedent()) succ.push_back(unfoldAllM(a));
  return Clause(std::move(ante), std::move(succ), c.label());
}

Clause renameVariables(const Clause& c, const std::string& prefix) {
  Substitution sigma;
  std::size_t next = 0;
  for (const Term& v : unfoldAllM(c).variables()) {
    sigma.bind(v, Term::var(prefix + std::to_string(next++)));
  }
  return applySubst(sigma, unfoldAllM(c));
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

// Order that treats all variables as indistinguishable.
std::strong_ordering blindCompare(const Term& a, const Term& b) {
  if (a.isVariable() && b.isVariable()) return std::strong_ordering::equal;
  if (a.isVariable()) return std::strong_ordering::less;
  if (b.isVariable()) return std::strong_ordering::greater;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (a.kind() == TermKind::NumConst) return a.index() <=> b.index();
  if (auto c = a.name().compare(b.name()) <=> 0; c != 0) return c;
  if (auto c = a.args().size() <=> b.args().size(); c != 0) return c;
  for (std::size_t i = 0; i < a.args().size(); ++i) {
    if (auto c = blindCompare(a.args()[i], b.args()[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering blindCompare(const Atom& a, const Atom& b) {
  if (auto c = a.predicate().compare(b.predicate()) <=> 0; c != 0) return c;
  if (auto c = a.args().size() <=> b.args().size(); c != 0) return c;
  for (std::size_t i = 0; i < a.args().size(); ++i) {
    if (auto c = blindCompare(a.args()[i], b.args()[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

using Renaming = std::map<Term, Term>;

Atom renameAtom(const Atom& a, Renaming& renaming) {
  std::vector<Term> vars;
  collectVariables(a, vars);
  Substitution sigma;
  for (const Term& v : vars) {
    auto it = renaming.find(v);
    if (it == renaming.end()) {
      it = renaming.emplace(v, Term::var("v" + std::to_string(renaming.size()))).first;
    }
    sigma.bind(v, it->second);
  }
  return applySubst(sigma, a);
}

struct CanonicalSearch {
  std::vector<Atom> ante;
  std::vector<Atom> succ;
  std::optional<std::vector<Atom>> best;

  void run(std::vector<bool>& usedAnte, std::vector<bool>& usedSucc,
           std::vector<Atom>& sequence, const Renaming& renaming) {
    const bool onAnte = sequence.size() < ante.size();
    const std::vector<Atom>& side = onAnte ? ante : succ;
    std::vector<bool>& used = onAnte ? usedAnte : usedSucc;
    if (sequence.size() == ante.size() + succ.size()) {
      if (!best || sequence < *best) best = sequence;
      return;
    }
    // Sides are blind-sorted: the first unused atom starts the tie group.
    std::size_t first = 0;
    while (used[first]) ++first;
    std::vector<std::pair<std::size_t, std::pair<Atom, Renaming>>> candidates;
    for (std::size_t i = first; i < side.size(); ++i) {
      if (used[i]) continue;
      if (blindCompare(side[i], side[first]) != 0) break;
      Renaming extended = renaming;
      Atom renamed = renameAtom(side[i], extended);
      if (!candidates.empty()) {
        auto c = renamed <=> candidates.front().second.first;
        if (c > 0) continue;
        if (c < 0) candidates.clear();
      }
      candidates.push_back({i, {renamed, std::move(extended)}});
    }
    for (auto& [i, entry] : candidates) {
      used[i] = true;
      sequence.push_back(entry.first);
      // Prune: every branch shares this prefix, so compare with best so far.
      if (!best || !std::lexicographical_compare(best->begin(),
                                                 best->begin() + static_cast<long>(sequence.size()),
                                                 sequence.begin(), sequence.end())) {
        run(usedAnte, usedSucc, sequence, entry.second);
      }
      sequence.pop_back();
      used[i] = false;
    }
  }
};

}  // namespace

Clause canonicalize(const Clause& c) {
  Clause unfolded = unfoldAllM(c);
  CanonicalSearch search;
  search.ante = unfolded.antecedent();
  search.succ = unfolded.succedent();
  auto blindLess = [](const Atom& a, const Atom& b) { return blindCompare(a, b) < 0; };
  std::stable_sort(search.ante.begin(), search.ante.end(), blindLess);
  std::stable_sort(search.succ.begin(), search.succ.end(), blindLess);
  std::vector<bool> usedAnte(search.ante.size()), usedSucc(search.succ.size());
  std::vector<Atom> sequence;
  search.run(usedAnte, usedSucc, sequence, {});
  std::vector<Atom> ante(search.best->begin(),
                         search.best->begin() + static_cast<long>(search.ante.size()));
  std::vector<Atom> succ(search.best->begin() + static_cast<long>(search.ante.size()),
                         search.best->end());
  return Clause(std::move(ante), std::move(succ), c.label());
}

bool variantOf(const Clause& a, const Clause& b) {
  if (a.antecedent().size() != b.antecedent().size() ||
      a.succedent().size() != b.succedent().size()) {
    // Sizes can still agree after unfolding merges atoms; fall through only
    // when MTerms are present.
    if (!a.containsMTerm() && !b.containsMTerm()) return false;
  }
  return canonicalize(a) == canonicalize(b);
}

bool isTautology(const Clause& c) {
  Clause u = unfoldAllM(c);
  for (const Atom& a : u.antecedent()) {
    if (u.hasInSuccedent(a)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Subsumption

namespace {

struct Literal {
  Atom atom;
  bool positive;
};

bool subsumeFrom(const std::vector<Literal>& lits, std::size_t i, const Clause& d,
                 const Substitution& sigma) {
  if (i == lits.size()) return true;
  const Literal& lit = lits[i];
  const auto& side = lit.positive ? d.succedent() : d.antecedent();
  for (const Atom& target : side) {
    if (target.predicate() != lit.atom.predicate() ||
        target.args().size() != lit.atom.args().size()) {
      continue;
    }
    Substitution extended = sigma;
    bool ok = true;
    for (std::size_t k = 0; k < target.args().size() && ok; ++k) {
      auto m = match(lit.atom.args()[k], target.args()[k], extended);
      if (m) {
        extended = std::move(*m);
      } else {
        ok = false;
      }
    }
    if (ok && subsumeFrom(lits, i + 1, d, extended)) return true;
  }
  return false;
}

}  // namespace

bool subsumes(const Clause& c, const Clause& d) {
  Clause pattern = renameVariables(c, "_S");
  Clause target = unfoldAllM(d);
  if (pattern.antecedent().size() > target.antecedent().size() ||
      pattern.succedent().size() > target.succedent().size()) {
    // A set clause may still map several atoms onto one target atom.
  }
  std::vector<Literal> lits;
  for (const Atom& a : pattern.antecedent()) lits.push_back({a, false});
  for (const Atom& a : pattern.succedent()) lits.push_back({a, true});
  std::stable_sort(lits.begin(), lits.end(), [](const Literal& a, const Literal& b) {
    return a.atom.size() > b.atom.size();
  });
  return subsumeFrom(lits, 0, target, Substitution{});
}

// ---------------------------------------------------------------------------
// ClauseSet

bool ClauseSet::insert(Clause c) {
  Clause canonical = canonicalize(c);
  if (std::find(canonical_.begin(), canonical_.end(), canonical) != canonical_.end()) {
    return false;
  }
  canonical_.push_back(std::move(canonical));
  clauses_.push_back(std::move(c));
  return true;
}

const Clause* ClauseSet::findById(const std::string& id) const {
  for (const Clause& c : clauses_) {
    if (c.label() && *c.label() == id) return &c;
  }
  return nullptr;
}

bool ClauseSet::containsVariant(const Clause& c) const {
  Clause canonical = canonicalize(c);
  return std::find(canonical_.begin(), canonical_.end(), canonical) != canonical_.end();
}

std::vector<Clause> ClauseSet::canonicalForms() const {
  std::vector<Clause> out;
  for (const Clause& c : canonical_) {
    out.push_back(Clause(c.antecedent(), c.succedent()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool ClauseSet::equalUpToRenaming(const ClauseSet& other) const {
  return canonicalForms() == other.canonicalForms();
}

}  // namespace nia
