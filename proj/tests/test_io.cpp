#include <gtest/gtest.h>

#include <filesystem>

#include "nia/prover.hpp"
#include "nia/refutation.hpp"
#include "nia/schema.hpp"
#include "nia/serialize.hpp"
#include "nia/syntax.hpp"
#include "support.hpp"

namespace nia {
namespace {

using test::n;
using test::var;

TEST(Syntax, TermRoundTrip) {
  for (Term t : {var("A"), x(3), n(4), f(s(max(var("T1"), x(2)))),
                 Term::mterm(Numeral(2), "x", s(x(3)))}) {
    EXPECT_EQ(parseTerm(t.toString()), t);
  }
}

TEST(Syntax, ClauseRoundTrip) {
  test::TermGen gen(31);
  for (int i = 0; i < 500; ++i) {
    Clause c = gen.clause(3);
    EXPECT_EQ(parseClause(c.toString()), c);
  }
  EXPECT_TRUE(parseClause("|-").isEmpty());
}

TEST(Syntax, ErrorsCarryPosition) {
  try {
    parseClause("le(A,B) |- le(A,");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 17u);
  }
  EXPECT_THROW(parseTerm("f(A) junk"), ParseError);
}

TEST(Tptp, ClauseShapes) {
  ClauseSet c3 = generateC(Numeral(3));
  EXPECT_EQ(toTPTP(*c3.findById("C1"), "c1"), "cnf(c1, axiom, ( le(X,X) )).");
  EXPECT_EQ(toTPTP(*c3.findById("C4_0"), "c4_0"),
            "cnf(c4_0, axiom, ( ~eq(f(X),n0) | ~eq(f(Y),n0) | ~le(s(X),Y) )).");
  EXPECT_EQ(toTPTP(*c3.findById("C5"), "c5"),
            "cnf(c5, axiom, ( eq(f(X),n0) | eq(f(X),n1) | eq(f(X),n2) | eq(f(X),n3) )).");
  EXPECT_EQ(toTPTP(Clause(), "e"), "cnf(e, axiom, ( $false )).");
}

TEST(Tptp, UnfoldsMTermsAndNamesManyVariables) {
  Clause c({}, {Atom("p", {var("A"), var("B"), var("C"), var("D"), var("E"), var("F"), var("G"),
                           Term::mterm(Numeral(1), "x", var("H"))})});
  EXPECT_EQ(toTPTP(c, "p"),
            "cnf(p, axiom, ( p(X,Y,Z,U,V,W,X6,max(s(X7),X8)) )).");
}

TEST(Tptp, GoldenFileForThree) {
  EXPECT_EQ(toTPTP(generateC(Numeral(3))), test::readFile(test::goldenDir() / "c3.tptp"));
  ClauseSet back = readTPTP(test::goldenDir() / "c3.tptp", Numeral(3));
  EXPECT_EQ(back.canonicalForms(), generateC(Numeral(3)).canonicalForms());
  EXPECT_NE(back.findById("C4_3"), nullptr);
}

TEST(Tptp, RoundTripUpToTen) {
  for (std::uint64_t k = 0; k <= 10; ++k) {
    ClauseSet cs = generateC(Numeral(k));
    std::string text = toTPTP(cs);
    ClauseSet back = parseTPTP(text, Numeral(k));
    EXPECT_EQ(back.canonicalForms(), cs.canonicalForms());
    EXPECT_EQ(toTPTP(back), text);
    for (const Clause& c : cs.clauses()) EXPECT_NE(back.findById(*c.label()), nullptr);
  }
}

TEST(Tptp, ByteStableFile) {
  auto dir = std::filesystem::temp_directory_path();
  writeTPTP(generateC(Numeral(4)), dir / "nia_a.p");
  writeTPTP(generateC(Numeral(4)), dir / "nia_b.p");
  EXPECT_EQ(test::readFile(dir / "nia_a.p"), test::readFile(dir / "nia_b.p"));
}

TEST(Tptp, RejectsMalformedInput) {
  try {
    parseTPTP("cnf(c1, axiom, ( le(X,X) )).\ncnf(c2, axiom, ( le(X,,Y) )).\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 23u);
  }
  EXPECT_THROW(parseTPTP("cnf(c1, axiom, ( le(X,X) ))"), ParseError);
  EXPECT_THROW(parseTPTP("cnf(c1, axiom, ( le(a,X) ))."), ParseError);
  EXPECT_THROW(parseTPTP("fof(c1, axiom, ( le(X,X) ))."), ParseError);
}

TEST(Tptp, AcceptsCommentsAndLayout) {
  ClauseSet cs = parseTPTP("% header\ncnf( c4_0 , axiom ,\n  ~eq(f(X),n0) | ~eq(f(Y),n0)\n  | ~le(s(X),Y) ).\n");
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_TRUE(variantOf(cs.clauses()[0], *generateC(Numeral(0)).findById("C4_0")));
}

TEST(ProofJson, ConstructiveRoundTrip) {
  RefutationProof p = refute(Numeral(3));
  nlohmann::json j = proofToJson(p);
  EXPECT_EQ(j.at("n"), 3);
  EXPECT_EQ(j.at("nodes").size(), p.size());
  RefutationProof q = proofFromJson(j);
  EXPECT_TRUE(verifyRefutation(q).ok);
  EXPECT_EQ(proofToJson(q), j);
  EXPECT_EQ(occ("C5", q), 65);
}

TEST(ProofJson, ProverTraceRoundTrip) {
  ProverResult r = saturate(generateC(Numeral(2)), {});
  ASSERT_TRUE(r.proof);
  auto path = std::filesystem::temp_directory_path() / "nia_trace.json";
  writeProof(*r.proof, path);
  RefutationProof q = readProof(path);
  EXPECT_TRUE(verifyRefutation(q, VerifyMode::Relaxed).ok);
}

TEST(ProofJson, RejectsMalformedDocuments) {
  nlohmann::json j = proofToJson(refute(Numeral(0)));
  nlohmann::json badKind = j;
  badKind["nodes"][0]["kind"] = "magic";
  EXPECT_THROW(proofFromJson(badKind), std::invalid_argument);
  nlohmann::json badClause = j;
  badClause["nodes"][0]["conclusion"] = "le(A |-";
  EXPECT_THROW(proofFromJson(badClause), std::invalid_argument);
  nlohmann::json noRoot = j;
  noRoot.erase("root");
  EXPECT_THROW(proofFromJson(noRoot), std::invalid_argument);
}

TEST(RunReport, StableResultPayload) {
  RunReport r;
  r.command = "count";
  r.n = 3;
  r.occ = {{"C5", BigInt(65)}};
  r.recurrence = RecurrenceCheck{65, 65, 65};
  r.wallSeconds = 1.5;
  nlohmann::json a = toJson(r);
  r.wallSeconds = 2.5;
  nlohmann::json b = toJson(r);
  EXPECT_EQ(a.at("result").dump(), b.at("result").dump());
  EXPECT_EQ(a.at("result").at("recurrence").at("match"), true);
  EXPECT_EQ(a.at("result").at("occ").at("C5"), "65");
}

}  // namespace
}  // namespace nia
