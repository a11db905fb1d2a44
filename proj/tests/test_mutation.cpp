#include <gtest/gtest.h>

#include <set>

#include "mutation.hpp"
#include "nia/refutation.hpp"

namespace nia {
namespace {

TEST(Mutation, EveryCorruptionIsCaughtAtItsNode) {
  RefutationProof p = refute(Numeral(3));
  ASSERT_TRUE(verifyProof(p).ok);
  std::set<std::string> kinds;
  for (const test::Mutation& m : test::mutationSuite(p, 100, 2024)) {
    kinds.insert(m.kind);
    EXPECT_TRUE(m.caught()) << m.kind << " at node " << m.node << ": verdict "
                            << (m.verdict.ok ? "ok" : "rejected at " + std::to_string(m.verdict.failingNode.value_or(0)));
  }
  EXPECT_GE(kinds.size(), 5u);
}

TEST(Mutation, OtherSeeds) {
  RefutationProof p = refute(Numeral(2));
  for (std::uint32_t seed : {1u, 2u, 3u}) {
    for (const test::Mutation& m : test::mutationSuite(p, 100, seed)) {
      EXPECT_TRUE(m.caught()) << m.kind << " at node " << m.node;
    }
  }
}

}  // namespace
}  // namespace nia
