#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nia/clause.hpp"

namespace nia {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Surface syntax, the inverse of toString():
//   n3          numeral
//   x_2         indexed variable of family x
//   m(2,x,t)    defined m-term
//   f(t) ...    function application
//   A, T4, v0   any other identifier is a variable
//   a, b |- c   clause
Term parseTerm(std::string_view text);
Atom parseAtom(std::string_view text);
Clause parseClause(std::string_view text);

// TPTP CNF. Clauses are printed in canonical form with MTerms unfolded,
// variables named X, Y, Z, U, V, W, X6, X7, ... and antecedent atoms
// negated. The formula name is the lower-cased label.
std::string toTPTP(const Clause& c, const std::string& name);
std::string toTPTP(const ClauseSet& cs);
void writeTPTP(const ClauseSet& cs, const std::filesystem::path& path);

// Formula names become upper-cased labels. Upper-case identifiers are
// variables, nK are numerals.
ClauseSet parseTPTP(std::string_view text, std::optional<Numeral> parameter = std::nullopt);
ClauseSet readTPTP(const std::filesystem::path& path,
                   std::optional<Numeral> parameter = std::nullopt);

}  // namespace nia
