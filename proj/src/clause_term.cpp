#include "nia/clause_term.hpp"

#include <algorithm>
#include <stdexcept>

namespace nia {

Numeral ArithExpr::evaluate(std::optional<Numeral> value) const {
  std::int64_t base = 0;
  if (param) {
    if (!value) throw std::invalid_argument("unbound parameter " + *param);
    base = static_cast<std::int64_t>(value->value());
  }
  std::int64_t v = base + offset;
  if (v < 0) throw std::domain_error("negative argument " + toString());
  return Numeral(static_cast<std::uint64_t>(v));
}

std::string ArithExpr::toString() const {
  if (!param) return std::to_string(offset);
  if (offset == 0) return *param;
  return *param + (offset > 0 ? "+" : "-") + std::to_string(offset > 0 ? offset : -offset);
}

ClauseTerm ClauseTerm::leaf(std::vector<Clause> clauses) {
  return ClauseTerm(std::make_shared<const Rep>(
      Rep{ClauseTermKind::Leaf, std::move(clauses), {}, {}, {}, {}}));
}

ClauseTerm ClauseTerm::oplus(ClauseTerm l, ClauseTerm r) {
  return ClauseTerm(std::make_shared<const Rep>(
      Rep{ClauseTermKind::Oplus, {}, {std::move(l), std::move(r)}, {}, {}, {}}));
}

ClauseTerm ClauseTerm::otimes(ClauseTerm l, ClauseTerm r) {
  return ClauseTerm(std::make_shared<const Rep>(
      Rep{ClauseTermKind::Otimes, {}, {std::move(l), std::move(r)}, {}, {}, {}}));
}

ClauseTerm ClauseTerm::clSym(std::string proofsym, std::string config, ArithExpr arg) {
  return ClauseTerm(std::make_shared<const Rep>(
      Rep{ClauseTermKind::ClSym, {}, {}, std::move(proofsym), std::move(config), std::move(arg)}));
}

bool ClauseTerm::containsClSym() const {
  switch (kind()) {
    case ClauseTermKind::Leaf: return false;
    case ClauseTermKind::ClSym: return true;
    default: return left().containsClSym() || right().containsClSym();
  }
}

std::vector<ClauseTerm> ClauseTerm::leaves() const {
  if (kind() == ClauseTermKind::Leaf || kind() == ClauseTermKind::ClSym) return {*this};
  auto out = left().leaves();
  auto rest = right().leaves();
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

std::string ClauseTerm::toString() const {
  switch (kind()) {
    case ClauseTermKind::Leaf: {
      std::string out = "{";
      for (std::size_t i = 0; i < clauses().size(); ++i) {
        if (i) out += "; ";
        out += clauses()[i].toString();
      }
      return out + "}";
    }
    case ClauseTermKind::Oplus:
      return "(" + left().toString() + " (+) " + right().toString() + ")";
    case ClauseTermKind::Otimes:
      return "(" + left().toString() + " (x) " + right().toString() + ")";
    case ClauseTermKind::ClSym:
      return "cl[" + proofsym() + "," + config() + "](" + arg().toString() + ")";
  }
  return {};
}

bool operator==(const ClauseTerm& a, const ClauseTerm& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ClauseTermKind::Leaf: return a.clauses() == b.clauses();
    case ClauseTermKind::ClSym:
      return a.proofsym() == b.proofsym() && a.config() == b.config() && a.arg() == b.arg();
    default: return a.left() == b.left() && a.right() == b.right();
  }
}

namespace {

void addUnique(std::vector<Clause>& out, Clause c) {
  if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
}

}  // namespace

std::vector<Clause> evalClauseTerm(const ClauseTerm& t) {
  switch (t.kind()) {
    case ClauseTermKind::Leaf: {
      std::vector<Clause> out;
      for (const Clause& c : t.clauses()) addUnique(out, c);
      return out;
    }
    case ClauseTermKind::Oplus: {
      auto out = evalClauseTerm(t.left());
      for (Clause& c : evalClauseTerm(t.right())) addUnique(out, std::move(c));
      return out;
    }
    case ClauseTermKind::Otimes: {
      auto ls = evalClauseTerm(t.left());
      auto rs = evalClauseTerm(t.right());
      std::vector<Clause> out;
      for (const Clause& l : ls) {
        for (const Clause& r : rs) {
          std::vector<Atom> ante = l.antecedent();
          ante.insert(ante.end(), r.antecedent().begin(), r.antecedent().end());
          std::vector<Atom> succ = l.succedent();
          succ.insert(succ.end(), r.succedent().begin(), r.succedent().end());
          addUnique(out, Clause(std::move(ante), std::move(succ)));
        }
      }
      return out;
    }
    case ClauseTermKind::ClSym:
      throw std::invalid_argument("clause-set symbol left in term: " + t.toString());
  }
  return {};
}

}  // namespace nia
