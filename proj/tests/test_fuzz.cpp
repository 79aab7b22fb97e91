#include <gtest/gtest.h>

#include "cafcon/cafcon.hpp"

using namespace cafcon;

TEST(Fuzz, SeedZeroHundredInstancesPass) {
    const auto rep = run_fuzz({0, 100, 10, 6, 1});
    EXPECT_EQ(rep.instances, 100u);
    EXPECT_TRUE(rep.failures.empty());
    EXPECT_GT(rep.concurrent, 0u);
    EXPECT_LT(rep.concurrent, 100u);
}

TEST(Fuzz, CountZero) {
    const auto rep = run_fuzz({5, 0, 10, 6, 1});
    EXPECT_EQ(rep.instances, 0u);
    EXPECT_TRUE(rep.failures.empty());
}

TEST(Fuzz, ReplayReproducesInstance) {
    EXPECT_EQ(fuzz_instance(17, 10, 6), fuzz_instance(17, 10, 6));
    EXPECT_EQ(emit_caf(fuzz_instance(17, 10, 6)), emit_caf(fuzz_instance(17, 10, 6)));
    EXPECT_NE(emit_caf(fuzz_instance(17, 10, 6)), emit_caf(fuzz_instance(18, 10, 6)));
}

TEST(Fuzz, ParallelMatchesSequential) {
    const auto a = run_fuzz({9, 64, 9, 4, 1});
    const auto b = run_fuzz({9, 64, 9, 4, 4});
    EXPECT_EQ(a.concurrent, b.concurrent);
    EXPECT_EQ(a.failures.size(), b.failures.size());
}

// Golden values pin the generator across platforms and library versions.
TEST(Random, GoldenStream) {
    Rng rng(5489);
    for (int i = 0; i < 9999; ++i) rng.next();
    EXPECT_EQ(rng.next(), 9981545732273789042ULL);  // value mandated for mt19937_64
    Rng r2(1);  // first draw 2469588189546311528
    EXPECT_EQ(r2.below(10), 8u);
}
