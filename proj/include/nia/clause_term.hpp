#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nia/clause.hpp"

namespace nia {

// Argument of a clause-set symbol: either a constant or param + offset.
struct ArithExpr {
  std::optional<std::string> param;
  std::int64_t offset = 0;

  static ArithExpr constant(std::uint64_t v) { return {std::nullopt, static_cast<std::int64_t>(v)}; }
  static ArithExpr parameter(std::string name, std::int64_t offset = 0) {
    return {std::move(name), offset};
  }
  bool isGround() const { return !param.has_value(); }
  // Value under param := value. Throws std::domain_error if negative.
  Numeral evaluate(std::optional<Numeral> value = std::nullopt) const;
  std::string toString() const;

  friend bool operator==(const ArithExpr&, const ArithExpr&) = default;
};

enum class ClauseTermKind { Leaf, Oplus, Otimes, ClSym };

class ClauseTerm {
 public:
  static ClauseTerm leaf(std::vector<Clause> clauses);
  static ClauseTerm oplus(ClauseTerm l, ClauseTerm r);
  static ClauseTerm otimes(ClauseTerm l, ClauseTerm r);
  static ClauseTerm clSym(std::string proofsym, std::string config, ArithExpr arg);

  ClauseTermKind kind() const { return rep_->kind; }
  const std::vector<Clause>& clauses() const { return rep_->clauses; }
  const ClauseTerm& left() const { return rep_->children.at(0); }
  const ClauseTerm& right() const { return rep_->children.at(1); }
  const std::string& proofsym() const { return rep_->proofsym; }
  const std::string& config() const { return rep_->config; }
  const ArithExpr& arg() const { return rep_->arg; }

  bool containsClSym() const;
  // Leaves in left-to-right order.
  std::vector<ClauseTerm> leaves() const;
  std::string toString() const;

  friend bool operator==(const ClauseTerm& a, const ClauseTerm& b);

 private:
  struct Rep {
    ClauseTermKind kind;
    std::vector<Clause> clauses;
    std::vector<ClauseTerm> children;
    std::string proofsym;
    std::string config;
    ArithExpr arg;
  };
  explicit ClauseTerm(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

// |Leaf| = S, |a (+) b| = union, |a (x) b| = pairwise merges. Merging does
// not rename the two sides apart. Throws std::invalid_argument on ClSym.
std::vector<Clause> evalClauseTerm(const ClauseTerm& t);

}  // namespace nia
