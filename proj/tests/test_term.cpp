#include <gtest/gtest.h>

#include <functional>

#include "nia/term.hpp"
#include "support.hpp"

namespace nia {
namespace {

using test::n;
using test::var;

TEST(Numeral, SurfaceRoundTrip) {
  EXPECT_EQ(Numeral(3).toSurface(), "s(s(s(0)))");
  EXPECT_EQ(Numeral::parseSurface("s(s(0))"), Numeral(2));
  EXPECT_THROW(Numeral(0).pred(), std::domain_error);
}

TEST(ApplySubst, ReplacesBoundVariable) {
  Substitution sigma{{var("B"), s(x(1))}};
  EXPECT_EQ(applySubst(sigma, max(var("B"), var("T"))), max(s(x(1)), var("T")));
}

TEST(ApplySubst, EmptyIsIdentity) {
  EXPECT_EQ(applySubst(Substitution{}, f(x(3))), f(x(3)));
}

TEST(ApplySubst, IndexedTarget) {
  Substitution sigma{{var("Y"), s(x(1))}};
  EXPECT_EQ(applySubst(sigma, f(var("Y"))), f(s(x(1))));
}

TEST(ApplySubst, IsSimultaneous) {
  Substitution sigma{{var("A"), var("B")}, {var("B"), var("A")}};
  EXPECT_EQ(applySubst(sigma, max(var("A"), var("B"))), max(var("B"), var("A")));
}

TEST(Substitution, BindRejectsOccursViolation) {
  Substitution sigma;
  EXPECT_THROW(sigma.bind(var("A"), s(var("A"))), std::invalid_argument);
}

TEST(Unify, FunctionArgument) {
  auto sigma = unify(f(var("Y")), f(s(x(1))));
  ASSERT_TRUE(sigma);
  EXPECT_EQ(*sigma, (Substitution{{var("Y"), s(x(1))}}));
}

TEST(Unify, MaxPattern) {
  auto sigma = unify(max(var("B"), var("D")), max(s(x(2)), var("T0")));
  ASSERT_TRUE(sigma);
  EXPECT_EQ(applySubst(*sigma, var("B")), s(x(2)));
  EXPECT_EQ(applySubst(*sigma, var("D")), var("T0"));
  EXPECT_EQ(sigma->size(), 2u);
}

TEST(Unify, HeadClash) { EXPECT_FALSE(unify(f(var("X")), s(var("X")))); }

TEST(Unify, OccursCheck) { EXPECT_FALSE(unify(var("X"), s(var("X")))); }

TEST(Unify, NumeralClash) { EXPECT_FALSE(unify(n(0), n(1))); }

TEST(Unify, IndexedVariablesAreVariables) {
  auto sigma = unify(x(2), s(var("A")));
  ASSERT_TRUE(sigma);
  EXPECT_EQ(applySubst(*sigma, x(2)), s(var("A")));
}

TEST(UnfoldM, BaseRule) {
  EXPECT_EQ(unfoldM(Term::mterm(Numeral(0), "x", var("T0"))), var("T0"));
}

TEST(UnfoldM, OneStepThenBase) {
  Term once = unfoldM(Term::mterm(Numeral(1), "x", var("T0")));
  EXPECT_EQ(once, Term::mterm(Numeral(0), "x", max(s(x(1)), var("T0"))));
  EXPECT_EQ(unfoldM(once), max(s(x(1)), var("T0")));
}

TEST(UnfoldM, DepthThreeNormalForm) {
  Term expected = max(s(x(1)), max(s(x(2)), max(s(x(3)), s(x(4)))));
  EXPECT_EQ(unfoldAllM(Term::mterm(Numeral(3), "x", s(x(4)))), expected);
}

TEST(UnfoldM, RejectsMTermFreeTerm) { EXPECT_THROW(unfoldM(f(var("A"))), std::invalid_argument); }

TEST(UnfoldM, ImplicitVariables) {
  std::vector<Term> vars;
  collectVariables(Term::mterm(Numeral(2), "x", var("T")), vars);
  EXPECT_EQ(vars.size(), 3u);
}

TEST(Match, OneWay) {
  auto sigma = match(max(var("A"), var("A")), max(s(x(1)), s(x(1))));
  ASSERT_TRUE(sigma);
  EXPECT_FALSE(match(max(var("A"), var("A")), max(s(x(1)), x(1))));
}

TEST(TermProperties, UnifierEqualizes) {
  test::TermGen gen(7);
  int unified = 0;
  for (int i = 0; i < 2000; ++i) {
    Term a = gen.term(3), b = gen.term(3);
    auto sigma = unify(a, b);
    if (!sigma) continue;
    ++unified;
    EXPECT_EQ(applySubst(*sigma, a), applySubst(*sigma, b)) << a.toString() << " / " << b.toString();
    EXPECT_TRUE(sigma->isIdempotent());
  }
  EXPECT_GT(unified, 100);
}

TEST(TermProperties, UnifierIsMostGeneral) {
  // Any instance that equalizes the pair factors through the mgu.
  test::TermGen gen(11);
  for (int i = 0; i < 500; ++i) {
    Term a = gen.term(2);
    Substitution ground{{var("A"), n(1)}, {var("B"), s(n(0))}, {var("C"), n(2)}, {var("D"), n(0)}};
    Term b = applySubst(ground, a);
    auto sigma = unify(a, b);
    ASSERT_TRUE(sigma);
    EXPECT_EQ(applySubst(*sigma, a), b);
  }
}

TEST(TermProperties, UnifySymmetricUpToRenaming) {
  test::TermGen gen(13);
  for (int i = 0; i < 2000; ++i) {
    Term a = gen.term(3), b = gen.term(3);
    auto ab = unify(a, b), ba = unify(b, a);
    ASSERT_EQ(ab.has_value(), ba.has_value());
    if (!ab) continue;
    // Each common instance is an instance of the other.
    Term ia = applySubst(*ab, a), ib = applySubst(*ba, a);
    EXPECT_TRUE(match(ia, ib) || ia == ib);
    std::vector<Term> va, vb;
    collectVariables(ia, va);
    collectVariables(ib, vb);
    EXPECT_EQ(va.size(), vb.size());
    EXPECT_EQ(ia.size(), ib.size());
  }
}

TEST(TermProperties, IdempotentSubstitutionIsStable) {
  test::TermGen gen(17);
  for (int i = 0; i < 1000; ++i) {
    auto sigma = unify(gen.term(2), gen.term(2));
    if (!sigma) continue;
    Term t = gen.term(3);
    EXPECT_EQ(applySubst(*sigma, applySubst(*sigma, t)), applySubst(*sigma, t));
  }
}

TEST(TermProperties, UnfoldStepDecreasesDepthSum) {
  Term t = max(Term::mterm(Numeral(3), "x", var("A")), Term::mterm(Numeral(2), "x", var("B")));
  auto depthSum = [](const Term& u) {
    std::uint64_t sum = 0;
    std::function<void(const Term&)> walk = [&](const Term& v) {
      if (v.kind() == TermKind::MTerm) sum += v.index().value() + 1;
      for (const Term& c : v.args()) walk(c);
    };
    walk(u);
    return sum;
  };
  int steps = 0;
  while (t.containsMTerm()) {
    Term next = unfoldM(t);
    EXPECT_LT(depthSum(next), depthSum(t));
    t = next;
    ++steps;
  }
  EXPECT_EQ(steps, 3 + 1 + 2 + 1);
}

TEST(TermProperties, UnfoldAllMIsIdempotentAndSizeLaw) {
  for (std::uint64_t k = 0; k <= 8; ++k) {
    Term t = unfoldAllM(Term::mterm(Numeral(k), "x", var("T")));
    EXPECT_EQ(unfoldAllM(t), t);
    EXPECT_FALSE(t.containsMTerm());
    // k copies of max(s(x_i), _) around T.
    EXPECT_EQ(t.size(), 3 * k + 1);
  }
}

TEST(TermProperties, OrderingIsTotalAndConsistent) {
  test::TermGen gen(3);
  for (int i = 0; i < 1000; ++i) {
    Term a = gen.term(2), b = gen.term(2);
    auto ab = a <=> b, ba = b <=> a;
    EXPECT_EQ(ab == 0, a == b);
    EXPECT_EQ(ab < 0, ba > 0);
    if (a == b) EXPECT_EQ(a.hash(), b.hash());
  }
}

}  // namespace
}  // namespace nia
