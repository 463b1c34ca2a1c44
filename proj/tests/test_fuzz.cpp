#include <gtest/gtest.h>

#include "polysec/error.hpp"
#include "polysec/fuzz.hpp"
#include "polysec/hexagon.hpp"

namespace polysec {
namespace {

TEST(CaseSeed, DistinctAndStable) {
  EXPECT_EQ(case_seed(7, 3), case_seed(7, 3));
  EXPECT_NE(case_seed(7, 3), case_seed(7, 4));
  EXPECT_NE(case_seed(7, 3), case_seed(8, 3));
}

TEST(Generators, ProduceRequestedShapes) {
  Rng rng(101);
  for (std::size_t n = 3; n <= 20; ++n) EXPECT_EQ(random_convex_polygon(n, rng).size(), n);
  EXPECT_EQ(random_points(9, rng).size(), 9u);
  for (int t = 0; t < 10; ++t) EXPECT_EQ(hexagon_ic(random_ic5_hexagon(rng)).value, 5);
}

TEST(TargetNames, RoundTrip) {
  for (auto t : {FuzzTarget::Invariant, FuzzTarget::Heptagon, FuzzTarget::Ngon, FuzzTarget::Hexagon}) {
    EXPECT_EQ(parse_fuzz_target(fuzz_target_name(t)), t);
  }
  EXPECT_THROW(parse_fuzz_target("everything"), Error);
}

class FuzzTargets : public ::testing::TestWithParam<std::pair<FuzzTarget, std::size_t>> {};

TEST_P(FuzzTargets, ParallelMatchesSerialAndPasses) {
  const auto [target, count] = GetParam();
  const FuzzReport par = run_fuzz(target, count, 2024);
  const FuzzReport ser = run_fuzz_serial(target, count, 2024);
  EXPECT_EQ(par.failures, 0u);
  ASSERT_EQ(par.records.size(), count);
  EXPECT_EQ(par.records, ser.records);
  EXPECT_EQ(par.summary(), ser.summary());
  for (const auto& r : par.records) EXPECT_TRUE(r.at("ok").get<bool>()) << r.dump();
}

INSTANTIATE_TEST_SUITE_P(All, FuzzTargets,
                         ::testing::Values(std::make_pair(FuzzTarget::Invariant, std::size_t{100}),
                                           std::make_pair(FuzzTarget::Heptagon, std::size_t{30}),
                                           std::make_pair(FuzzTarget::Ngon, std::size_t{4}),
                                           std::make_pair(FuzzTarget::Hexagon, std::size_t{30})));

TEST(Fuzz, DifferentSeedsDiffer) {
  EXPECT_NE(run_fuzz(FuzzTarget::Invariant, 5, 1).records, run_fuzz(FuzzTarget::Invariant, 5, 2).records);
}

}  // namespace
}  // namespace polysec
