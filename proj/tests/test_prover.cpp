#include <gtest/gtest.h>

#include "nia/prover.hpp"
#include "nia/schema.hpp"
#include "support.hpp"

namespace nia {
namespace {

using test::n;
using test::var;

Clause cl(const char* text) { return parseClause(text); }

ClauseSet setOf(std::initializer_list<const char*> texts) {
  ClauseSet cs;
  int i = 0;
  for (const char* t : texts) cs.insert(cl(t).withLabel("H" + std::to_string(++i)));
  return cs;
}

TEST(BinaryResolve, MirrorsResolveExamples) {
  auto r = binaryResolve(cl("|- eq(f(Y),n0)"), cl("eq(f(x_1),n0), eq(f(s(x_1)),n0) |-"),
                         eq(f(var("Y")), n(0)), eq(f(s(x(1))), n(0)));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->conclusion, cl("eq(f(x_1),n0) |-"));
  EXPECT_EQ(r->sigma, (Substitution{{var("Y"), s(x(1))}}));

  auto unit = binaryResolve(cl("|- p(A)"), cl("p(A) |-"), Atom("p", {var("A")}), Atom("p", {var("A")}));
  ASSERT_TRUE(unit);
  EXPECT_TRUE(unit->conclusion.isEmpty());
}

TEST(BinaryResolve, RemovesOnlyTheChosenLiteral) {
  auto r = binaryResolve(cl("|- p(A), p(n0)"), cl("p(n0) |-"), Atom("p", {var("A")}), Atom("p", {n(0)}));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->conclusion, cl("|- p(n0)"));
}

TEST(BinaryResolve, RejectsForeignLiteral) {
  EXPECT_THROW(binaryResolve(cl("|- p(A)"), cl("p(A) |-"), Atom("q", {var("A")}), Atom("p", {var("A")})),
               std::invalid_argument);
}

TEST(Factor, MergesSuccedentLiterals) {
  auto r = factor(cl("|- eq(f(X),n0), eq(f(s(Y)),n0)"), eq(f(var("X")), n(0)), eq(f(s(var("Y"))), n(0)));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->conclusion, cl("|- eq(f(s(Y)),n0)"));
  EXPECT_EQ(r->sigma, (Substitution{{var("X"), s(var("Y"))}}));
  EXPECT_FALSE(factor(cl("|- p(n0), p(n1)"), Atom("p", {n(0)}), Atom("p", {n(1)})));
}

TEST(Saturate, RefutesSmallestInstance) {
  ProverResult r = saturate(generateC(Numeral(0)), {});
  ASSERT_EQ(r.status, ProverStatus::Refuted);
  ASSERT_TRUE(r.proof);
  EXPECT_GE(r.stats.inputUses.at("C5"), 1);
  VerifyResult v = verifyRefutation(*r.proof, VerifyMode::Relaxed);
  EXPECT_TRUE(v.ok) << v.reason;
  EXPECT_FALSE(verifyRefutation(*r.proof, VerifyMode::Strict).ok);
}

TEST(Saturate, AgreesWithConstructiveRefutation) {
  for (std::uint64_t k = 0; k <= 3; ++k) {
    ProverLimits limits;
    limits.maxSeconds = 30;
    ProverResult r = saturate(generateC(Numeral(k)), limits);
    ASSERT_EQ(r.status, ProverStatus::Refuted) << "n=" << k;
    EXPECT_LT(r.seconds, 30.0);
    VerifyResult v = verifyRefutation(*r.proof, VerifyMode::Relaxed);
    EXPECT_TRUE(v.ok) << "n=" << k << ": " << v.reason;
    for (const RefStep& st : r.proof->nodes()) {
      EXPECT_TRUE(st.kind == StepKind::Input || st.kind == StepKind::BinRes ||
                  st.kind == StepKind::Factor || st.kind == StepKind::Rename);
    }
  }
}

TEST(Saturate, SatisfiableControls) {
  for (ClauseSet cs : {setOf({"|- a(X)"}), setOf({"a(X) |- b(X)"}),
                       setOf({"|- a(X)", "a(f(Y)) |- a(Y)"}),
                       setOf({"|- le(X,X)", "le(max(X,Y),Z) |- le(X,Z)"})}) {
    ProverLimits limits;
    limits.maxSeconds = 5;
    ProverResult r = saturate(cs, limits);
    EXPECT_NE(r.status, ProverStatus::Refuted);
  }
  EXPECT_EQ(saturate(setOf({"|- a(X)"}), {}).status, ProverStatus::Saturated);
}

TEST(Saturate, EmptyInputClause) {
  ProverResult r = saturate(setOf({"|- a(X)", "|-"}), {});
  EXPECT_EQ(r.status, ProverStatus::Refuted);
}

TEST(Saturate, ResourceOutUnderTightBudget) {
  ProverLimits limits;
  limits.maxClauses = 20;
  EXPECT_EQ(saturate(generateC(Numeral(3)), limits).status, ProverStatus::ResourceOut);
}

TEST(Saturate, Deterministic) {
  ProverResult a = saturate(generateC(Numeral(2)), {});
  ProverResult b = saturate(generateC(Numeral(2)), {});
  EXPECT_EQ(a.stats, b.stats);
  EXPECT_EQ(a.proof->size(), b.proof->size());
}

}  // namespace
}  // namespace nia
