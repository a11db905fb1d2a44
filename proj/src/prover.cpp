#include "nia/prover.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <map>
#include <span>
#include <set>
#include <stdexcept>
#include <tuple>

namespace nia {

std::string toString(ProverStatus s) {
  switch (s) {
    case ProverStatus::Refuted: return "refuted";
    case ProverStatus::Saturated: return "saturated";
    case ProverStatus::ResourceOut: return "resource-out";
  }
  return "?";
}

namespace {

std::vector<Atom> without(const std::vector<Atom>& atoms, const Atom& drop) {
  std::vector<Atom> out;
  bool dropped = false;
  for (const Atom& a : atoms) {
    if (!dropped && a == drop) {
      dropped = true;
      continue;
    }
    out.push_back(a);
  }
  return out;
}

Clause binaryResolvent(const Clause& left, const Clause& right, const Atom& leftLit,
                       const Atom& rightLit, const Substitution& sigma) {
  std::vector<Atom> ante = left.antecedent();
  for (const Atom& a : without(right.antecedent(), rightLit)) ante.push_back(a);
  std::vector<Atom> succ = without(left.succedent(), leftLit);
  succ.insert(succ.end(), right.succedent().begin(), right.succedent().end());
  return applySubst(sigma, Clause(std::move(ante), std::move(succ)));
}

}  // namespace

std::optional<Resolvent> binaryResolve(const Clause& left, const Clause& right,
                                       const Atom& leftLit, const Atom& rightLit) {
  if (!left.hasInSuccedent(leftLit)) throw std::invalid_argument("left literal not in succedent");
  if (!right.hasInAntecedent(rightLit)) throw std::invalid_argument("right literal not in antecedent");
  auto sigma = unifyAtoms(leftLit, rightLit);
  if (!sigma) return std::nullopt;
  return Resolvent{binaryResolvent(left, right, leftLit, rightLit, *sigma), *sigma};
}

std::optional<Resolvent> factor(const Clause& c, const Atom& a, const Atom& b) {
  bool succ = c.hasInSuccedent(a) && c.hasInSuccedent(b);
  bool ante = c.hasInAntecedent(a) && c.hasInAntecedent(b);
  if (!succ && !ante) throw std::invalid_argument("factored literals not on one side");
  auto sigma = unifyAtoms(a, b);
  if (!sigma) return std::nullopt;
  return Resolvent{applySubst(*sigma, c), *sigma};
}

// ---------------------------------------------------------------------------

namespace {

using Clock = std::chrono::steady_clock;

// One-way matching without occurs check; pattern and target may share names.
class Matcher {
 public:
  bool term(const Term& p, const Term& t) {
    if (p.isVariable()) {
      for (const auto& [v, b] : bindings_) {
        if (v == p) return b == t;
      }
      bindings_.emplace_back(p, t);
      return true;
    }
    if (p.kind() != t.kind()) return false;
    if (p.kind() == TermKind::NumConst) return p.index() == t.index();
    if (p.name() != t.name() || p.args().size() != t.args().size()) return false;
    for (std::size_t i = 0; i < p.args().size(); ++i) {
      if (!term(p.args()[i], t.args()[i])) return false;
    }
    return true;
  }
  bool atom(const Atom& p, const Atom& t) {
    if (p.predicate() != t.predicate() || p.args().size() != t.args().size()) return false;
    for (std::size_t i = 0; i < p.args().size(); ++i) {
      if (!term(p.args()[i], t.args()[i])) return false;
    }
    return true;
  }
  std::size_t mark() const { return bindings_.size(); }
  void undo(std::size_t m) { bindings_.erase(bindings_.begin() + static_cast<long>(m), bindings_.end()); }

 private:
  std::vector<std::pair<Term, Term>> bindings_;
};

bool subsumeRec(const std::vector<std::pair<const Atom*, bool>>& lits, std::size_t i,
                const Clause& d, Matcher& m) {
  if (i == lits.size()) return true;
  const auto& [lit, positive] = lits[i];
  for (const Atom& target : positive ? d.succedent() : d.antecedent()) {
    std::size_t mark = m.mark();
    if (m.atom(*lit, target) && subsumeRec(lits, i + 1, d, m)) return true;
    m.undo(mark);
  }
  return false;
}

bool fastSubsumes(const Clause& c, const Clause& d) {
  if (c.literalCount() > d.literalCount()) return false;
  std::vector<std::pair<const Atom*, bool>> lits;
  for (const Atom& a : c.antecedent()) lits.emplace_back(&a, false);
  for (const Atom& a : c.succedent()) lits.emplace_back(&a, true);
  std::stable_sort(lits.begin(), lits.end(),
                   [](const auto& a, const auto& b) { return a.first->size() > b.first->size(); });
  Matcher m;
  return subsumeRec(lits, 0, d, m);
}

// Knuth-Bendix order with unit weights. Precedence: numerals by value,
// then f, s, max, le, eq.
enum class Cmp { Less, Equal, Greater, Incomparable };

int precedence(const Term& t) {
  if (t.kind() == TermKind::NumConst) return static_cast<int>(t.index().value());
  static const std::map<std::string, int> ranks = {{"f", 1}, {"s", 2}, {"max", 3}};
  auto it = ranks.find(t.name());
  return (1 << 20) + (it == ranks.end() ? 0 : it->second);
}

void countVars(const Term& t, std::map<Term, long>& counts, long sign) {
  if (t.isVariable()) {
    counts[t] += sign;
    return;
  }
  for (const Term& a : t.args()) countVars(a, counts, sign);
}

Cmp kboLex(std::span<const Term> a, std::span<const Term> b);

Cmp kboNoVarCheck(const Term& s, const Term& t) {
  if (s == t) return Cmp::Equal;
  if (s.isVariable()) return occursIn(s, t) ? Cmp::Less : Cmp::Incomparable;
  if (t.isVariable()) return occursIn(t, s) ? Cmp::Greater : Cmp::Incomparable;
  if (s.size() != t.size()) return s.size() > t.size() ? Cmp::Greater : Cmp::Less;
  int ps = precedence(s), pt = precedence(t);
  if (ps != pt) return ps > pt ? Cmp::Greater : Cmp::Less;
  return kboLex(s.args(), t.args());
}

Cmp kboLex(std::span<const Term> a, std::span<const Term> b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    Cmp c = kboNoVarCheck(a[i], b[i]);
    if (c != Cmp::Equal) return c;
  }
  return Cmp::Equal;
}

// Compares atoms as terms headed by their predicate.
Cmp kbo(const Atom& a, const Atom& b) {
  if (a == b) return Cmp::Equal;
  std::map<Term, long> counts;
  for (const Term& t : a.args()) countVars(t, counts, 1);
  for (const Term& t : b.args()) countVars(t, counts, -1);
  bool aCovers = true, bCovers = true;
  for (const auto& [v, c] : counts) {
    aCovers = aCovers && c >= 0;
    bCovers = bCovers && c <= 0;
  }
  Cmp raw;
  if (a.size() != b.size()) {
    raw = a.size() > b.size() ? Cmp::Greater : Cmp::Less;
  } else if (a.predicate() != b.predicate()) {
    raw = a.predicate() > b.predicate() ? Cmp::Greater : Cmp::Less;
  } else {
    raw = kboLex(a.args(), b.args());
  }
  if (raw == Cmp::Greater && !aCovers) return Cmp::Incomparable;
  if (raw == Cmp::Less && !bCovers) return Cmp::Incomparable;
  return raw;
}

// Atoms that may take part in an inference. A clause with an le antecedent
// atom selects its heaviest one and nothing else is eligible; otherwise
// every atom not below another atom of the clause is eligible.
struct Eligible {
  std::vector<bool> ante;
  std::vector<bool> succ;
  bool hasSelection = false;
};

Eligible eligibility(const Clause& c, bool refined) {
  Eligible e;
  const std::size_t na = c.antecedent().size(), ns = c.succedent().size();
  e.ante.assign(na, !refined);
  e.succ.assign(ns, !refined);
  if (!refined) return e;
  std::optional<std::size_t> pick;
  for (std::size_t i = 0; i < na; ++i) {
    const Atom& a = c.antecedent()[i];
    if (a.predicate() == "le" && (!pick || a.size() > c.antecedent()[*pick].size())) pick = i;
  }
  if (pick) {
    e.ante[*pick] = true;
    e.hasSelection = true;
    return e;
  }
  std::vector<const Atom*> all;
  for (const Atom& a : c.antecedent()) all.push_back(&a);
  for (const Atom& a : c.succedent()) all.push_back(&a);
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < all.size() && maximal; ++j) {
      maximal = j == i || kbo(*all[i], *all[j]) != Cmp::Less;
    }
    if (i < na) {
      e.ante[i] = maximal;
    } else {
      e.succ[i - na] = maximal;
    }
  }
  return e;
}

struct Entry {
  Clause clause;
  std::size_t node;
  Eligible eligible;
  bool active = false;
  bool dead = false;
};

struct Candidate {
  Clause clause;
  RefStep step;
};

class Saturation {
 public:
  Saturation(const ClauseSet& cs, const ProverLimits& limits)
      : limits_(limits), proof_(cs), start_(Clock::now()) {}

  ProverResult run(const ClauseSet& cs) {
    for (const Clause& c : cs.clauses()) {
      Clause unfolded = unfoldAllM(c);
      RefStep step;
      step.kind = StepKind::Input;
      step.clauseId = c.label().value_or("");
      step.conclusion = renamed(unfolded, false);
      Clause conclusion = step.conclusion;
      std::size_t node = proof_.add(std::move(step));
      if (isTautology(conclusion)) {
        ++result_.stats.tautologies;
        continue;
      }
      if (conclusion.isEmpty()) return refuted(node);
      enqueue(std::move(conclusion), node);
    }
    std::uint64_t picks = 0;
    while (true) {
      if (timedOut()) return finish(ProverStatus::ResourceOut);
      std::optional<std::size_t> given = pick(picks++);
      if (!given) {
        return finish(incomplete_ ? ProverStatus::ResourceOut : ProverStatus::Saturated);
      }
      Entry& g = entries_[*given];
      if (forwardSubsumed(g.clause)) {
        g.dead = true;
        ++result_.stats.subsumed;
        continue;
      }
      ++result_.stats.given;
      g.active = true;
      active_.push_back(*given);
      for (Candidate& cand : infer(*given)) {
        if (auto done = consider(std::move(cand))) return *done;
        if (entries_.size() > limits_.maxClauses) return finish(ProverStatus::ResourceOut);
      }
    }
  }

 private:
  Clause renamed(const Clause& c, bool copy) {
    Substitution sigma;
    for (const Term& v : c.variables()) {
      sigma.bind(v, Term::var((copy ? "W" : "X") + std::to_string(++fresh_)));
    }
    return applySubst(sigma, c);
  }

  bool timedOut() const {
    return std::chrono::duration<double>(Clock::now() - start_).count() > limits_.maxSeconds;
  }

  void enqueue(Clause c, std::size_t node) {
    std::size_t id = entries_.size();
    weightQueue_.emplace(c.weight(), c.literalCount(), id);
    ageQueue_.push_back(id);
    Eligible e = eligibility(c, limits_.ordered);
    entries_.push_back({std::move(c), node, std::move(e)});
    ++result_.stats.kept;
  }

  std::optional<std::size_t> pick(std::uint64_t count) {
    const bool byAge = limits_.ageRatio > 0 && count % limits_.ageRatio == limits_.ageRatio - 1;
    while (!weightQueue_.empty()) {
      std::size_t id;
      if (byAge) {
        id = ageQueue_.front();
        ageQueue_.pop_front();
        weightQueue_.erase({entries_[id].clause.weight(), entries_[id].clause.literalCount(), id});
      } else {
        id = std::get<2>(*weightQueue_.begin());
        weightQueue_.erase(weightQueue_.begin());
        ageQueue_.erase(std::find(ageQueue_.begin(), ageQueue_.end(), id));
      }
      if (!entries_[id].dead) return id;
    }
    return std::nullopt;
  }

  bool forwardSubsumed(const Clause& c) const {
    for (std::size_t a : active_) {
      if (!entries_[a].dead && fastSubsumes(entries_[a].clause, c)) return true;
    }
    return false;
  }

  std::vector<Candidate> infer(std::size_t given) {
    std::vector<Candidate> out;
    const Entry& g = entries_[given];
    // Self-resolution needs a renamed copy.
    RefStep copyStep;
    copyStep.kind = StepKind::Rename;
    copyStep.children = {g.node};
    copyStep.conclusion = renamed(g.clause, true);
    std::optional<std::size_t> copyNode;
    const Clause copy = copyStep.conclusion;

    auto resolvePair = [&](const Entry& l, const Entry& r, const Clause& rc,
                           std::optional<std::size_t> rn) {
      if (l.eligible.hasSelection) return;
      for (std::size_t li = 0; li < l.clause.succedent().size(); ++li) {
        if (!l.eligible.succ[li]) continue;
        const Atom& la = l.clause.succedent()[li];
        for (std::size_t ri = 0; ri < rc.antecedent().size(); ++ri) {
          if (!r.eligible.ante[ri]) continue;
          const Atom& ra = rc.antecedent()[ri];
          if (la.predicate() != ra.predicate()) continue;
          auto sigma = unifyAtoms(la, ra);
          if (!sigma) continue;
          if (!rn) {
            if (!copyNode) copyNode = proof_.add(copyStep);
            rn = copyNode;
          }
          RefStep st;
          st.kind = StepKind::BinRes;
          st.children = {l.node, *rn};
          st.leftLit = la;
          st.rightLit = ra;
          st.sigma = *sigma;
          st.conclusion = binaryResolvent(l.clause, rc, la, ra, *sigma);
          Clause c = st.conclusion;
          out.push_back({std::move(c), std::move(st)});
        }
      }
    };
    for (std::size_t a : active_) {
      const Entry& e = entries_[a];
      if (e.dead) continue;
      if (a == given) {
        resolvePair(g, g, copy, std::nullopt);
      } else {
        resolvePair(g, e, e.clause, e.node);
        resolvePair(e, g, g.clause, g.node);
      }
    }
    for (bool succ : {false, true}) {
      if (limits_.ordered && succ && g.eligible.hasSelection) continue;
      const auto& side = succ ? g.clause.succedent() : g.clause.antecedent();
      const auto& ok = succ ? g.eligible.succ : g.eligible.ante;
      for (std::size_t i = 0; i < side.size(); ++i) {
        for (std::size_t j = 0; j < side.size(); ++j) {
          if (i == j || !ok[i] || (ok[j] && j < i)) continue;
          auto sigma = unifyAtoms(side[i], side[j]);
          if (!sigma) continue;
          RefStep st;
          st.kind = StepKind::Factor;
          st.children = {g.node};
          st.leftLit = side[i];
          st.rightLit = side[j];
          st.factorSucc = succ;
          st.sigma = *sigma;
          st.conclusion = applySubst(*sigma, g.clause);
          Clause c = st.conclusion;
          out.push_back({std::move(c), std::move(st)});
        }
      }
    }
    return out;
  }

  std::optional<ProverResult> consider(Candidate cand) {
    ++result_.stats.generated;
    if (cand.clause.isEmpty()) return refuted(proof_.add(std::move(cand.step)));
    if (isTautology(cand.clause)) {
      ++result_.stats.tautologies;
      return std::nullopt;
    }
    if (limits_.maxTermDepth && cand.clause.maxDepth() > *limits_.maxTermDepth) {
      ++result_.stats.depthPruned;
      incomplete_ = true;
      return std::nullopt;
    }
    if (forwardSubsumed(cand.clause)) {
      ++result_.stats.subsumed;
      return std::nullopt;
    }
    std::size_t node = proof_.add(std::move(cand.step));
    RefStep rename;
    rename.kind = StepKind::Rename;
    rename.children = {node};
    rename.conclusion = renamed(cand.clause, false);
    Clause c = rename.conclusion;
    enqueue(std::move(c), proof_.add(std::move(rename)));
    return std::nullopt;
  }

  ProverResult refuted(std::size_t root) {
    RefutationProof p = proof_.extract(root);
    result_.stats.inputUses = occTable(p);
    result_.proof = std::move(p);
    return finish(ProverStatus::Refuted);
  }

  ProverResult finish(ProverStatus status) {
    result_.status = status;
    result_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return result_;
  }

  ProverLimits limits_;
  RefutationProof proof_;
  Clock::time_point start_;
  ProverResult result_;
  std::vector<Entry> entries_;
  std::vector<std::size_t> active_;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> weightQueue_;
  std::deque<std::size_t> ageQueue_;
  std::uint64_t fresh_ = 0;
  bool incomplete_ = false;
};

}  // namespace

ProverResult saturate(const ClauseSet& cs, const ProverLimits& limits) {
  if (limits.maxTermDepth) {
    Saturation s(cs, limits);
    return s.run(cs);
  }
  // Iterative deepening on term depth, sharing the time budget.
  const auto start = Clock::now();
  std::size_t depth = 1;
  for (const Clause& c : cs.clauses()) depth = std::max(depth, unfoldAllM(c).maxDepth());
  while (true) {
    ProverLimits round = limits;
    round.maxTermDepth = depth++;
    round.maxSeconds =
        limits.maxSeconds - std::chrono::duration<double>(Clock::now() - start).count();
    ProverResult r;
    if (round.maxSeconds > 0) {
      Saturation s(cs, round);
      r = s.run(cs);
    } else {
      r.status = ProverStatus::ResourceOut;
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (r.status == ProverStatus::ResourceOut && r.stats.depthPruned > 0 &&
        round.maxSeconds > 0 && r.seconds < limits.maxSeconds &&
        r.stats.kept <= limits.maxClauses) {
      continue;
    }
    return r;
  }
}

}  // namespace nia
