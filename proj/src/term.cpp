#include "nia/term.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_set>

namespace nia {

struct Term::Rep {
  TermKind kind;
  std::string name;
  Numeral index;
  std::vector<Term> args;
  std::size_t hash = 0;
  std::size_t size = 1;
  std::size_t depth = 1;
  bool hasMTerm = false;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

// Variable names order by length first so that v2 < v10.
std::strong_ordering compareNames(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  return a.compare(b) <=> 0;
}

}  // namespace

namespace {

std::shared_ptr<Term::Rep> makeRep(TermKind kind, std::string name,
                                   Numeral index, std::vector<Term> args) {
  auto rep = std::make_shared<Term::Rep>();
  rep->kind = kind;
  rep->name = std::move(name);
  rep->index = index;
  rep->args = std::move(args);
  std::size_t h = mix(static_cast<std::size_t>(kind), std::hash<std::string>{}(rep->name));
  h = mix(h, std::hash<std::uint64_t>{}(index.value()));
  std::size_t deepest = 0;
  for (const Term& a : rep->args) {
    h = mix(h, a.hash());
    rep->size += a.size();
    deepest = std::max(deepest, a.depth());
    rep->hasMTerm = rep->hasMTerm || a.containsMTerm();
  }
  rep->depth = 1 + deepest;
  rep->hasMTerm = rep->hasMTerm || kind == TermKind::MTerm;
  rep->hash = h;
  return rep;
}

}  // namespace

Term Term::var(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  return Term(makeRep(TermKind::Var, std::move(name), Numeral(0), {}));
}

Term Term::indexedVar(std::string family, Numeral index) {
  if (family.empty()) throw std::invalid_argument("empty variable family");
  return Term(makeRep(TermKind::IndexedVar, std::move(family), index, {}));
}

Term Term::num(Numeral value) {
  return Term(makeRep(TermKind::NumConst, "", value, {}));
}

Term Term::app(std::string symbol, std::vector<Term> args) {
  if (symbol.empty()) throw std::invalid_argument("empty function symbol");
  std::size_t expected = args.size();
  if (symbol == "f" || symbol == "s") expected = 1;
  if (symbol == "max") expected = 2;
  if (symbol == "m") throw std::invalid_argument("m is reserved for MTerm");
  if (args.size() != expected) {
    throw std::invalid_argument("arity mismatch for " + symbol);
  }
  return Term(makeRep(TermKind::App, std::move(symbol), Numeral(0), std::move(args)));
}

Term Term::mterm(Numeral depth, std::string family, Term body) {
  if (family.empty()) throw std::invalid_argument("empty MTerm family");
  std::vector<Term> args;
  args.push_back(std::move(body));
  return Term(makeRep(TermKind::MTerm, std::move(family), depth, std::move(args)));
}

TermKind Term::kind() const { return rep_->kind; }
const std::string& Term::name() const { return rep_->name; }
Numeral Term::index() const { return rep_->index; }
std::span<const Term> Term::args() const { return rep_->args; }
const Term& Term::body() const {
  if (rep_->kind != TermKind::MTerm) throw std::logic_error("body() on non-MTerm");
  return rep_->args.front();
}
std::size_t Term::hash() const { return rep_->hash; }
std::size_t Term::size() const { return rep_->size; }
std::size_t Term::depth() const { return rep_->depth; }
bool Term::containsMTerm() const { return rep_->hasMTerm; }

std::string Term::toString() const {
  switch (kind()) {
    case TermKind::Var:
      return name();
    case TermKind::IndexedVar:
      return name() + "_" + std::to_string(index().value());
    case TermKind::NumConst:
      return "n" + std::to_string(index().value());
    case TermKind::App: {
      std::string out = name();
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
    case TermKind::MTerm:
      return "m(" + std::to_string(index().value()) + "," + name() + "," +
             body().toString() + ")";
  }
  return {};
}

bool operator==(const Term& a, const Term& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.hash() != b.hash()) return false;
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.rep_ == b.rep_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case TermKind::Var:
      return compareNames(a.name(), b.name());
    case TermKind::IndexedVar:
      if (auto c = compareNames(a.name(), b.name()); c != 0) return c;
      return a.index() <=> b.index();
    case TermKind::NumConst:
      return a.index() <=> b.index();
    case TermKind::App: {
      if (auto c = compareNames(a.name(), b.name()); c != 0) return c;
      if (auto c = a.args().size() <=> b.args().size(); c != 0) return c;
      for (std::size_t i = 0; i < a.args().size(); ++i) {
        if (auto c = a.args()[i] <=> b.args()[i]; c != 0) return c;
      }
      return std::strong_ordering::equal;
    }
    case TermKind::MTerm:
      if (auto c = a.index() <=> b.index(); c != 0) return c;
      if (auto c = compareNames(a.name(), b.name()); c != 0) return c;
      return a.body() <=> b.body();
  }
  return std::strong_ordering::equal;
}

Term f(Term t) { return Term::app("f", {std::move(t)}); }
Term s(Term t) { return Term::app("s", {std::move(t)}); }
Term max(Term a, Term b) { return Term::app("max", {std::move(a), std::move(b)}); }
Term x(std::uint64_t i) { return Term::indexedVar("x", Numeral(i)); }

// ---------------------------------------------------------------------------
// Variables

namespace {

void collectInto(const Term& t, std::vector<Term>& out,
                 std::unordered_set<Term, TermHash>& seen) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::IndexedVar:
      if (seen.insert(t).second) out.push_back(t);
      return;
    case TermKind::NumConst:
      return;
    case TermKind::App:
      for (const Term& a : t.args()) collectInto(a, out, seen);
      return;
    case TermKind::MTerm:
      for (std::uint64_t i = 1; i <= t.index().value(); ++i) {
        Term v = Term::indexedVar(t.name(), Numeral(i));
        if (seen.insert(v).second) out.push_back(v);
      }
      collectInto(t.body(), out, seen);
      return;
  }
}

}  // namespace

void collectVariables(const Term& t, std::vector<Term>& out) {
  std::unordered_set<Term, TermHash> seen(out.begin(), out.end());
  collectInto(t, out, seen);
}

bool occursIn(const Term& var, const Term& t) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::IndexedVar:
      return t == var;
    case TermKind::NumConst:
      return false;
    case TermKind::App:
      return std::any_of(t.args().begin(), t.args().end(),
                         [&](const Term& a) { return occursIn(var, a); });
    case TermKind::MTerm:
      if (var.kind() == TermKind::IndexedVar && var.name() == t.name() &&
          var.index().value() >= 1 && var.index() <= t.index()) {
        return true;
      }
      return occursIn(var, t.body());
  }
  return false;
}

// ---------------------------------------------------------------------------
// MTerm unfolding

namespace {

// Full expansion of a single MTerm node, leaving its body untouched.
Term expandNode(const Term& m) {
  Term result = m.body();
  for (std::uint64_t i = m.index().value(); i >= 1; --i) {
    result = max(s(Term::indexedVar(m.name(), Numeral(i))), result);
  }
  return result;
}

std::optional<Term> unfoldFirst(const Term& t) {
  if (!t.containsMTerm()) return std::nullopt;
  if (t.kind() == TermKind::MTerm) {
    if (t.index().value() == 0) return t.body();
    std::uint64_t k = t.index().value();
    return Term::mterm(Numeral(k - 1), t.name(),
                       max(s(Term::indexedVar(t.name(), Numeral(k))), t.body()));
  }
  std::vector<Term> args(t.args().begin(), t.args().end());
  for (Term& a : args) {
    if (auto r = unfoldFirst(a)) {
      a = *r;
      return Term::app(t.name(), std::move(args));
    }
  }
  return std::nullopt;
}

}  // namespace

Term unfoldM(const Term& t) {
  if (auto r = unfoldFirst(t)) return *r;
  throw std::invalid_argument("unfoldM: no MTerm in " + t.toString());
}

Term unfoldAllM(const Term& t) {
  if (!t.containsMTerm()) return t;
  if (t.kind() == TermKind::MTerm) {
    return unfoldAllM(expandNode(Term::mterm(t.index(), t.name(), unfoldAllM(t.body()))));
  }
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(unfoldAllM(a));
  return Term::app(t.name(), std::move(args));
}

// ---------------------------------------------------------------------------
// Substitution

Substitution::Substitution(std::initializer_list<std::pair<Term, Term>> bindings) {
  for (const auto& [v, t] : bindings) bind(v, t);
}

void Substitution::bind(const Term& var, const Term& value) {
  if (!var.isVariable()) {
    throw std::invalid_argument("cannot bind non-variable " + var.toString());
  }
  if (var == value) return;
  if (occursIn(var, value)) {
    throw std::invalid_argument("occurs check: " + var.toString() + " in " +
                                value.toString());
  }
  auto [it, inserted] = bindings_.emplace(var, value);
  if (!inserted && !(it->second == value)) {
    throw std::invalid_argument("conflicting binding for " + var.toString());
  }
}

const Term* Substitution::find(const Term& var) const {
  auto it = bindings_.find(var);
  return it == bindings_.end() ? nullptr : &it->second;
}

bool Substitution::isIdempotent() const {
  for (const auto& [v, _] : bindings_) {
    for (const auto& [w, t] : bindings_) {
      if (occursIn(v, t)) return false;
    }
  }
  return true;
}

namespace {

bool mapBindsFamilyPrefix(const Substitution::Map& m, const std::string& family,
                          Numeral depth) {
  if (depth.value() == 0) return false;
  auto lo = m.lower_bound(Term::indexedVar(family, Numeral(1)));
  return lo != m.end() && lo->first.kind() == TermKind::IndexedVar &&
         lo->first.name() == family && lo->first.index() <= depth;
}

Term applyMap(const Substitution::Map& m, const Term& t) {
  if (m.empty()) return t;
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::IndexedVar: {
      auto it = m.find(t);
      return it == m.end() ? t : it->second;
    }
    case TermKind::NumConst:
      return t;
    case TermKind::App: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      bool changed = false;
      for (const Term& a : t.args()) {
        args.push_back(applyMap(m, a));
        changed = changed || !args.back().sameNode(a);
      }
      return changed ? Term::app(t.name(), std::move(args)) : t;
    }
    case TermKind::MTerm: {
      if (mapBindsFamilyPrefix(m, t.name(), t.index())) {
        return applyMap(m, expandNode(t));
      }
      Term body = applyMap(m, t.body());
      return body.sameNode(t.body()) ? t : Term::mterm(t.index(), t.name(), body);
    }
  }
  return t;
}

}  // namespace

bool Substitution::bindsFamilyPrefix(const std::string& family, Numeral depth) const {
  return mapBindsFamilyPrefix(bindings_, family, depth);
}

Term Substitution::apply(const Term& t) const { return applyMap(bindings_, t); }

std::string Substitution::toString() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, t] : bindings_) {
    if (!first) out += ", ";
    first = false;
    out += v.toString() + " <- " + t.toString();
  }
  return out + "}";
}

Term applySubst(const Substitution& sigma, const Term& t) { return sigma.apply(t); }

// ---------------------------------------------------------------------------
// Unification

std::optional<Substitution> unifyAll(const std::vector<std::pair<Term, Term>>& pairs,
                                     Substitution seed) {
  std::vector<std::pair<Term, Term>> work(pairs.rbegin(), pairs.rend());
  Substitution::Map solved(seed.begin(), seed.end());

  auto applySolved = [&](const Term& t) { return applyMap(solved, t); };

  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    a = applySolved(a);
    b = applySolved(b);
    if (a == b) continue;
    if (!a.isVariable() && b.isVariable()) std::swap(a, b);
    if (a.isVariable()) {
      if (occursIn(a, b)) return std::nullopt;
      const Substitution::Map single{{a, b}};
      for (auto& [v, r] : solved) r = applyMap(single, r);
      solved.emplace(a, b);
      continue;
    }
    if (a.kind() != b.kind()) return std::nullopt;
    switch (a.kind()) {
      case TermKind::NumConst:
        return std::nullopt;  // equal constants were handled above
      case TermKind::App:
        if (a.name() != b.name() || a.args().size() != b.args().size()) {
          return std::nullopt;
        }
        for (std::size_t i = a.args().size(); i-- > 0;) {
          work.emplace_back(a.args()[i], b.args()[i]);
        }
        break;
      case TermKind::MTerm:
        if (a.index() != b.index() || a.name() != b.name()) return std::nullopt;
        work.emplace_back(a.body(), b.body());
        break;
      default:
        return std::nullopt;
    }
  }
  Substitution result;
  for (const auto& [v, r] : solved) result.bind(v, r);
  return result;
}

std::optional<Substitution> unify(const Term& a, const Term& b) {
  return unifyAll({{a, b}});
}

namespace {

bool matchInto(const Term& p, const Term& t, Substitution& sigma) {
  if (p.isVariable()) {
    if (const Term* bound = sigma.find(p)) return *bound == t;
    sigma.bind(p, t);
    return true;
  }
  if (p.kind() != t.kind()) return false;
  switch (p.kind()) {
    case TermKind::NumConst:
      return p.index() == t.index();
    case TermKind::App:
      if (p.name() != t.name() || p.args().size() != t.args().size()) return false;
      for (std::size_t i = 0; i < p.args().size(); ++i) {
        if (!matchInto(p.args()[i], t.args()[i], sigma)) return false;
      }
      return true;
    default:
      return false;
  }
}

}  // namespace

std::optional<Substitution> match(const Term& pattern, const Term& target,
                                  Substitution seed) {
  if (matchInto(unfoldAllM(pattern), unfoldAllM(target), seed)) return seed;
  return std::nullopt;
}

}  // namespace nia
