#include <gtest/gtest.h>

#include "testkit.hpp"

namespace gqs::testkit {
namespace {

TEST(Testkit, RandomSpaceIsDeterministic) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    EXPECT_EQ(digest(random_space(seed)), digest(random_space(seed)));
  }
  EXPECT_NE(digest(random_space(1)), digest(random_space(2)));
}

TEST(Testkit, PinnedDigests) {
  EXPECT_EQ(digest(random_space(1)), 0xdb1705751092174dull);
  EXPECT_EQ(digest(random_space(2)), 0xa4c4a7422cef4a09ull);
  EXPECT_EQ(digest(random_space(3)), 0xa42f304aa0a70605ull);
}

TEST(Testkit, RandomSpaceRespectsRange) {
  Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const GqsSpace s = random_space(rng, {2, 7, -0.8, -0.1});
    ASSERT_GE(s.intervals(), 2u);
    ASSERT_LE(s.intervals(), 7u);
    const double gap = 0.1 * (s.b() - s.a()) / static_cast<double>(s.intervals());
    for (std::size_t i = 1; i <= s.intervals(); ++i) {
      ASSERT_GE(s.beta(i), -0.8);
      ASSERT_LE(s.beta(i), -0.1);
      ASSERT_GE(s.width(i), gap * (1 - 1e-12));
    }
  }
}

TEST(Testkit, GeneratedDataSatisfiesHypotheses) {
  Rng rng(10);
  for (int trial = 0; trial < 100; ++trial) {
    const Partition p = random_partition(rng, rng.index(1, 12), 0.0, 3.0);
    const HermiteData inc = random_increasing_data(rng, p);
    const HermiteData cvx = random_convex_data(rng, p);
    for (std::size_t i = 1; i <= p.intervals(); ++i) {
      ASSERT_GT(inc.y[i], inc.y[i - 1]);
      ASSERT_GT(inc.p[i], 0.0);
      const double tau = (cvx.y[i] - cvx.y[i - 1]) / p.width(i);
      ASSERT_LT(cvx.p[i - 1], tau);
      ASSERT_LT(tau, cvx.p[i]);
    }
  }
}

}  // namespace
}  // namespace gqs::testkit
