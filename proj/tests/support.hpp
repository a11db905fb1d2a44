#pragma once

#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>
#include <string>

#include "nia/clause.hpp"
#include "nia/syntax.hpp"

namespace nia {

inline void PrintTo(const Term& t, std::ostream* os) { *os << t.toString(); }
inline void PrintTo(const Atom& a, std::ostream* os) { *os << a.toString(); }
inline void PrintTo(const Clause& c, std::ostream* os) { *os << c.toString(); }
inline void PrintTo(const Substitution& s, std::ostream* os) { *os << s.toString(); }

}  // namespace nia

namespace nia::test {

inline std::filesystem::path goldenDir() { return NIA_GOLDEN_DIR; }

inline std::string readFile(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// "LABEL: clause" per line, '#' comments.
inline ClauseSet loadClauses(const std::filesystem::path& p) {
  ClauseSet cs;
  std::ifstream in(p);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    cs.insert(parseClause(line.substr(colon + 1)).withLabel(line.substr(0, colon)));
  }
  return cs;
}

inline Term var(const std::string& name) { return Term::var(name); }
inline Term n(std::uint64_t v) { return Term::num(Numeral(v)); }

// Random MTerm-free terms over f, s, max, numerals and a few variables.
class TermGen {
 public:
  explicit TermGen(std::uint32_t seed) : rng_(seed) {}

  Term term(int depth) {
    int pick = std::uniform_int_distribution<int>(0, depth <= 0 ? 2 : 5)(rng_);
    switch (pick) {
      case 0: return var(std::string(1, static_cast<char>('A' + below(4))));
      case 1: return x(1 + below(3));
      case 2: return n(below(3));
      case 3: return f(term(depth - 1));
      case 4: return s(term(depth - 1));
      default: return max(term(depth - 1), term(depth - 1));
    }
  }

  Atom atom(int depth) {
    return below(2) ? le(term(depth), term(depth)) : eq(f(term(depth - 1)), n(below(3)));
  }

  Clause clause(int depth) {
    std::vector<Atom> ante, succ;
    for (std::uint64_t i = below(3); i > 0; --i) ante.push_back(atom(depth));
    for (std::uint64_t i = below(3); i > 0; --i) succ.push_back(atom(depth));
    return Clause(std::move(ante), std::move(succ));
  }

  std::uint64_t below(std::uint64_t k) {
    return std::uniform_int_distribution<std::uint64_t>(0, k - 1)(rng_);
  }

  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace nia::test
