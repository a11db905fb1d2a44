#include <gtest/gtest.h>

#include <chrono>

#include "nia/schema.hpp"
#include "support.hpp"

namespace nia {
namespace {

using test::n;
using test::var;

Clause cl(const char* text) { return parseClause(text); }

ClauseSet setOf(const std::vector<Clause>& cs) {
  ClauseSet out;
  for (const Clause& c : cs) out.insert(c);
  return out;
}

TEST(IteratedOr, BoundZero) {
  Formula phi = Formula::iteratedOr(eq(f(var("Y")), var("I")), "I", Numeral(0));
  EXPECT_EQ(unfoldIteratedOr(phi), Formula::atom(eq(f(var("Y")), n(0))));
}

TEST(IteratedOr, BoundOne) {
  Formula phi = Formula::iteratedOr(eq(f(var("Y")), var("I")), "I", Numeral(1));
  EXPECT_EQ(unfoldIteratedOr(phi), Formula::disj(Formula::atom(eq(f(var("Y")), n(0))),
                                               Formula::atom(eq(f(var("Y")), n(1)))));
}

TEST(IteratedOr, BoundThreeInIndexOrder) {
  Formula phi = Formula::iteratedOr(eq(f(var("Y")), var("I")), "I", Numeral(3));
  std::vector<Atom> expected;
  for (std::uint64_t i = 0; i <= 3; ++i) expected.push_back(eq(f(var("Y")), n(i)));
  EXPECT_EQ(disjuncts(unfoldIteratedOr(phi)), expected);
}

TEST(Extract, PsiBaseIsCollision) {
  NiaFixture fx = niaFixture();
  ClauseTerm t = extractCharTerm(fx.psi.base, fx.configuration("Omega"));
  EXPECT_EQ(t, ClauseTerm::otimes(ClauseTerm::leaf({cl("le(s(B),A) |-")}),
                                  ClauseTerm::leaf({cl("eq(f(A),n0), eq(f(B),n0) |-")})));
}

TEST(Extract, AxiomWithoutAncestorsIsEmptyClause) {
  ProofNodeIR ax = ProofNodeIR::axiom("ax", {}, {}, {Formula::atom(le(var("A"), var("A")))},
                                      {Formula::atom(le(var("A"), var("A")))});
  EXPECT_EQ(extractCharTerm(ax, {"empty", ""}), ClauseTerm::leaf({Clause()}));
}

TEST(Extract, OmegaStepShape) {
  NiaFixture fx = niaFixture();
  ClauseTerm t = extractCharTerm(fx.omega.step(Numeral(1)), fx.configuration("empty"));
  ASSERT_EQ(t.kind(), ClauseTermKind::Oplus);
  std::vector<ClauseTerm> leaves = t.leaves();
  ASSERT_EQ(leaves.size(), 3u);
  EXPECT_EQ(leaves[0], ClauseTerm::clSym("psi", "Omega", ArithExpr::constant(2)));
  EXPECT_EQ(leaves[1], ClauseTerm::leaf({cl("|- le(A,A)")}));
  EXPECT_EQ(leaves[2], ClauseTerm::leaf({cl("|- eq(f(A),n0), eq(f(A),n1), eq(f(A),n2)")}));
}

TEST(Fixture, LinkCounts) {
  NiaFixture fx = niaFixture();
  for (std::uint64_t k = 0; k < 4; ++k) {
    ProofNodeIR psi = fx.psi.step(Numeral(k));
    ProofNodeIR omega = fx.omega.step(Numeral(k));
    ASSERT_EQ(psi.countLinks(), 1u);
    EXPECT_EQ(psi.links()[0]->proofsym, "psi");
    EXPECT_EQ(psi.links()[0]->arg.evaluate(), Numeral(k));
    ASSERT_EQ(omega.countLinks(), 1u);
    EXPECT_EQ(omega.links()[0]->proofsym, "psi");
    EXPECT_EQ(omega.links()[0]->arg.evaluate(), Numeral(k + 1));
  }
  EXPECT_EQ(fx.omega.base.countLinks(), 0u);
  EXPECT_EQ(fx.psi.base.countLinks(), 0u);
}

TEST(UnfoldClSymbols, LeafUnchanged) {
  ClauseTerm leaf = ClauseTerm::leaf({cl("|- le(A,A)")});
  EXPECT_EQ(unfoldClSymbols(leaf, Numeral(3), niaFixture().definitions()), leaf);
}

TEST(UnfoldClSymbols, AtZero) {
  ClauseTerm t = unfoldClSymbols(NiaFixture::topTerm(), Numeral(0), niaFixture().definitions());
  EXPECT_FALSE(t.containsClSym());
  ClauseSet expected = setOf({cl("|- le(A,A)"), cl("eq(f(B),n0), eq(f(A),n0), le(s(B),A) |-"),
                              cl("|- eq(f(A),n0)")});
  EXPECT_TRUE(setOf(evalClauseTerm(t)).equalUpToRenaming(expected));
}

TEST(UnfoldClSymbols, AtOne) {
  ClauseTerm t = unfoldClSymbols(NiaFixture::topTerm(), Numeral(1), niaFixture().definitions());
  ClauseSet got;
  for (const Clause& c : evalClauseTerm(t)) {
    if (!isTautology(c)) got.insert(c);
  }
  ClauseSet expected = setOf({cl("|- le(A,A)"), cl("le(max(A,B),G) |- le(A,G)"),
                              cl("le(max(A,B),G) |- le(B,G)"),
                              cl("eq(f(B),n0), eq(f(A),n0), le(s(B),A) |-"),
                              cl("eq(f(B),n1), eq(f(A),n1), le(s(B),A) |-"),
                              cl("|- eq(f(A),n0), eq(f(A),n1)")});
  EXPECT_TRUE(got.equalUpToRenaming(expected));
}

TEST(UnfoldClSymbols, RejectsNonDecreasingRecursion) {
  ClSymDefs defs;
  defs.insert_or_assign({"p", "c"}, ClSymDefinition{ClauseTerm::leaf({}), [](Numeral k) {
                          return ClauseTerm::clSym("p", "c", ArithExpr::constant(k.value() + 1));
                        }});
  EXPECT_THROW(unfoldClSymbols(ClauseTerm::clSym("p", "c", ArithExpr::constant(1)), Numeral(0), defs),
               std::invalid_argument);
}

TEST(GenerateC, Examples) {
  EXPECT_EQ(generateC(Numeral(0)).size(), 3u);
  ClauseSet c1 = generateC(Numeral(1));
  EXPECT_EQ(c1.size(), 6u);
  for (const char* id : {"C1", "C2", "C3", "C4_0", "C4_1", "C5"}) EXPECT_NE(c1.findById(id), nullptr);
  const Clause* c5 = generateC(Numeral(4)).findById("C5");
  ASSERT_NE(c5, nullptr);
  EXPECT_EQ(c5->succedent().size(), 5u);
  EXPECT_TRUE(c5->antecedent().empty());
}

TEST(GenerateC, SizeLawAndTautologyFree) {
  for (std::uint64_t k = 1; k <= 50; ++k) {
    ClauseSet cs = generateC(Numeral(k));
    EXPECT_EQ(cs.size(), k + 5);
    for (const Clause& c : cs.clauses()) EXPECT_FALSE(isTautology(c));
  }
}

TEST(GenerateC, OnlyC1AndC5MaySubsumeOthers) {
  for (std::uint64_t k = 1; k <= 6; ++k) {
    ClauseSet cs = generateC(Numeral(k));
    for (const Clause& d : cs.clauses()) {
      if (*d.label() == "C1" || *d.label() == "C5") continue;
      for (const Clause& c : cs.clauses()) {
        if (&c != &d) EXPECT_FALSE(subsumes(c, d)) << *c.label() << " subsumes " << *d.label();
      }
    }
  }
}

TEST(GenerateC, MatchesGoldenFiles) {
  for (int k : {0, 1, 2}) {
    ClauseSet golden = test::loadClauses(test::goldenDir() / ("c" + std::to_string(k) + ".clauses"));
    ClauseSet generated = generateC(Numeral(k));
    EXPECT_EQ(golden.canonicalForms(), generated.canonicalForms()) << "n=" << k;
    for (const Clause& g : golden.clauses()) {
      const Clause* c = generated.findById(*g.label());
      ASSERT_NE(c, nullptr) << *g.label();
      EXPECT_TRUE(variantOf(*c, g)) << *g.label();
    }
  }
}

TEST(Extract, EqualsGenerateUpToFive) {
  for (std::uint64_t k = 0; k <= 5; ++k) {
    ClauseSet extracted = extractClauseSet(Numeral(k));
    EXPECT_EQ(extracted.canonicalForms(), generateC(Numeral(k)).canonicalForms()) << "n=" << k;
  }
}

}  // namespace
}  // namespace nia
