#include "nia/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace nia {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

bool isIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skipSpace(bool comments) {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (comments && c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool atEnd() const { return pos_ >= text_.size(); }
  char peek() const { return atEnd() ? '\0' : text_[pos_]; }
  bool lookingAt(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  bool accept(std::string_view s) {
    if (!lookingAt(s)) return false;
    for (std::size_t i = 0; i < s.size(); ++i) advance();
    return true;
  }

  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }

  std::string identifier() {
    std::size_t start = pos_;
    if (atEnd() || !isIdentChar(peek())) fail("expected identifier");
    while (!atEnd() && isIdentChar(peek())) advance();
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t integer() {
    std::size_t start = pos_;
    while (!atEnd() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
    return toInteger(text_.substr(start, pos_ - start));
  }

  std::uint64_t toInteger(std::string_view digits) const {
    std::uint64_t v = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size()) {
      fail("expected integer");
    }
    return v;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_, column_, message);
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

bool allDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// Surface terms; in TPTP mode only upper-case identifiers are variables.
Term term(Cursor& in, bool tptp) {
  in.skipSpace(tptp);
  std::string name = in.identifier();
  in.skipSpace(tptp);
  if (in.accept("(")) {
    in.skipSpace(tptp);
    if (!tptp && name == "m" && std::isdigit(static_cast<unsigned char>(in.peek()))) {
      Numeral depth(in.integer());
      in.skipSpace(tptp);
      in.expect(",");
      in.skipSpace(tptp);
      std::string family = in.identifier();
      in.skipSpace(tptp);
      in.expect(",");
      Term body = term(in, tptp);
      in.skipSpace(tptp);
      in.expect(")");
      return Term::mterm(depth, family, body);
    }
    std::vector<Term> args{term(in, tptp)};
    in.skipSpace(tptp);
    while (in.accept(",")) {
      args.push_back(term(in, tptp));
      in.skipSpace(tptp);
    }
    in.expect(")");
    return Term::app(name, std::move(args));
  }
  if (name.size() > 1 && name[0] == 'n' && allDigits(std::string_view(name).substr(1))) {
    return Term::num(Numeral(in.toInteger(std::string_view(name).substr(1))));
  }
  if (tptp) {
    if (!std::isupper(static_cast<unsigned char>(name[0]))) {
      in.fail("unknown constant '" + name + "'");
    }
    return Term::var(name);
  }
  if (auto us = name.rfind('_'); us != std::string::npos && us > 0 &&
                                 allDigits(std::string_view(name).substr(us + 1))) {
    return Term::indexedVar(name.substr(0, us),
                            Numeral(in.toInteger(std::string_view(name).substr(us + 1))));
  }
  return Term::var(name);
}

Atom atom(Cursor& in, bool tptp) {
  in.skipSpace(tptp);
  std::string predicate = in.identifier();
  in.skipSpace(tptp);
  in.expect("(");
  std::vector<Term> args{term(in, tptp)};
  in.skipSpace(tptp);
  while (in.accept(",")) {
    args.push_back(term(in, tptp));
    in.skipSpace(tptp);
  }
  in.expect(")");
  return Atom(predicate, std::move(args));
}

std::vector<Atom> atomList(Cursor& in) {
  std::vector<Atom> out;
  in.skipSpace(false);
  if (in.atEnd() || in.lookingAt("|-")) return out;
  out.push_back(atom(in, false));
  in.skipSpace(false);
  while (in.accept(",")) {
    out.push_back(atom(in, false));
    in.skipSpace(false);
  }
  return out;
}

void expectEnd(Cursor& in) {
  in.skipSpace(false);
  if (!in.atEnd()) in.fail("unexpected trailing input");
}

std::string tptpVariable(std::size_t i) {
  static const char* first[] = {"X", "Y", "Z", "U", "V", "W"};
  return i < 6 ? first[i] : "X" + std::to_string(i);
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

Term parseTerm(std::string_view text) {
  Cursor in(text);
  Term t = term(in, false);
  expectEnd(in);
  return t;
}

Atom parseAtom(std::string_view text) {
  Cursor in(text);
  Atom a = atom(in, false);
  expectEnd(in);
  return a;
}

Clause parseClause(std::string_view text) {
  Cursor in(text);
  std::vector<Atom> ante = atomList(in);
  in.skipSpace(false);
  in.expect("|-");
  std::vector<Atom> succ = atomList(in);
  expectEnd(in);
  return Clause(std::move(ante), std::move(succ));
}

std::string toTPTP(const Clause& c, const std::string& name) {
  Clause canon = canonicalize(c);
  Substitution rename;
  std::vector<Term> vars = canon.variables();
  for (std::size_t i = 0; i < vars.size(); ++i) rename.bind(vars[i], Term::var(tptpVariable(i)));
  canon = applySubst(rename, canon);
  std::string body;
  for (const Atom& a : canon.antecedent()) body += (body.empty() ? "~" : " | ~") + a.toString();
  for (const Atom& a : canon.succedent()) body += (body.empty() ? "" : " | ") + a.toString();
  if (body.empty()) body = "$false";
  return "cnf(" + name + ", axiom, ( " + body + " )).";
}

std::string toTPTP(const ClauseSet& cs) {
  std::ostringstream out;
  out << "% clause set";
  if (cs.parameter()) out << " n=" << cs.parameter()->value();
  out << ", " << cs.size() << " clauses\n";
  std::size_t index = 0;
  for (const Clause& c : cs.clauses()) {
    ++index;
    std::string name = c.label() ? lower(*c.label()) : "";
    bool valid = !name.empty() && std::islower(static_cast<unsigned char>(name[0])) &&
                 std::all_of(name.begin(), name.end(), isIdentChar);
    out << toTPTP(c, valid ? name : "c" + std::to_string(index)) << '\n';
  }
  return out.str();
}

void writeTPTP(const ClauseSet& cs, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << toTPTP(cs);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

ClauseSet parseTPTP(std::string_view text, std::optional<Numeral> parameter) {
  ClauseSet cs(parameter);
  Cursor in(text);
  while (true) {
    in.skipSpace(true);
    if (in.atEnd()) break;
    in.expect("cnf");
    in.skipSpace(true);
    in.expect("(");
    in.skipSpace(true);
    std::string name = in.identifier();
    in.skipSpace(true);
    in.expect(",");
    in.skipSpace(true);
    std::string role = in.identifier();
    if (role != "axiom" && role != "hypothesis" && role != "negated_conjecture" &&
        role != "plain") {
      in.fail("unsupported role '" + role + "'");
    }
    in.skipSpace(true);
    in.expect(",");
    in.skipSpace(true);
    std::size_t parens = 0;
    while (in.accept("(")) {
      ++parens;
      in.skipSpace(true);
    }
    std::vector<Atom> ante, succ;
    if (!in.accept("$false")) {
      do {
        in.skipSpace(true);
        bool negated = in.accept("~");
        Atom a = atom(in, true);
        (negated ? ante : succ).push_back(std::move(a));
        in.skipSpace(true);
      } while (in.accept("|"));
    }
    for (; parens > 0; --parens) {
      in.skipSpace(true);
      in.expect(")");
    }
    in.skipSpace(true);
    in.expect(")");
    in.skipSpace(true);
    in.expect(".");
    cs.insert(Clause(std::move(ante), std::move(succ), upper(name)));
  }
  return cs;
}

ClauseSet readTPTP(const std::filesystem::path& path, std::optional<Numeral> parameter) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parseTPTP(text.str(), parameter);
}

}  // namespace nia
