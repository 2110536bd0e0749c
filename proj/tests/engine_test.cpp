#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rrbin/engine.hpp"
#include "rrbin/io.hpp"
#include "rrbin/splitting.hpp"
#include "rrbin/statistics.hpp"

namespace rrbin {
namespace {

using testing::independent_pair;
using testing::line_pair;
using testing::partition_violation;

const StopConfig depth6{6, 10.0, true};

TEST(BinPair, UniformRanksTile)
{
  Stream rng(1);
  const auto pair = independent_pair(1000, rng);
  const Binning b = bin_pair(pair, ScoreKind::chi, depth6, 5.0, 42);
  EXPECT_EQ(partition_violation(b, 5.0), "");
  EXPECT_EQ(b.n, 1000);
  EXPECT_GT(b.n_bin(), 1);
}

TEST(BinPair, MaxDepthZeroReturnsRoot)
{
  Stream rng(1);
  const Binning b = bin_pair(independent_pair(50, rng), ScoreKind::chi, {0, 10.0, true}, 5.0, 0);
  ASSERT_EQ(b.n_bin(), 1);
  EXPECT_EQ(b.bins[0].area(), 2500);
  EXPECT_EQ(b.bins[0].observed(), 50);
}

TEST(BinPair, DepthOneHalvesTheRoot)
{
  Stream rng(2);
  const Binning b = bin_pair(independent_pair(1000, rng), ScoreKind::chi, {1, 10.0, true}, 5.0, 3);
  ASSERT_EQ(b.n_bin(), 2);
  EXPECT_EQ(b.bins[0].area(), 500 * 1000);
  EXPECT_EQ(b.bins[1].area(), 500 * 1000);
}

TEST(BinPair, RejectsNegativeGate)
{
  Stream rng(1);
  EXPECT_THROW(bin_pair(independent_pair(10, rng), ScoreKind::chi, depth6, -1.0, 0),
               std::invalid_argument);
}

TEST(BinPair, LineFarAboveNoise)
{
  const double line = chi2_statistic(bin_pair(line_pair(1000), ScoreKind::chi, depth6, 5.0, 7)).chi2;
  std::vector<double> noise;
  Stream rng(9);
  for (int i = 0; i < 51; ++i)
    noise.push_back(chi2_statistic(bin_pair(independent_pair(1000, rng), ScoreKind::chi, depth6,
                                            5.0, static_cast<std::uint64_t>(i)))
                        .chi2);
  EXPECT_GE(line, 20.0 * empirical_quantile(noise, 0.5));
}

TEST(BinPair, SameSeedSameBinning)
{
  Stream rng(4);
  const auto pair = independent_pair(700, rng);
  for (auto kind : {ScoreKind::chi, ScoreKind::mi, ScoreKind::random}) {
    const auto a = to_json(bin_pair(pair, kind, depth6, 5.0, 11));
    const auto b = to_json(bin_pair(pair, kind, depth6, 5.0, 11));
    EXPECT_EQ(a, b);
  }
  EXPECT_NE(to_json(bin_pair(pair, ScoreKind::random, depth6, 5.0, 11)),
            to_json(bin_pair(pair, ScoreKind::random, depth6, 5.0, 12)));
}

TEST(BinPair, DeeperLimitRefinesShallower)
{
  // Every bin at a deeper limit lies inside one bin of the shallower result.
  Stream rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto pair = independent_pair(400 + 50 * trial, rng);
    const auto kind = static_cast<ScoreKind>(trial % 3);
    for (int d = 1; d < 8; ++d) {
      const Binning coarse = bin_pair(pair, kind, {d, 10.0, true}, 5.0, 77);
      const Binning fine = bin_pair(pair, kind, {d + 1, 10.0, true}, 5.0, 77);
      ASSERT_GE(fine.n_bin(), coarse.n_bin());
      for (const Bin& f : fine.bins) {
        int parents = 0;
        for (const Bin& c : coarse.bins)
          if (c.lower_s <= f.lower_s && f.upper_s <= c.upper_s && c.lower_t <= f.lower_t &&
              f.upper_t <= c.upper_t)
            ++parents;
        ASSERT_EQ(parents, 1);
      }
    }
  }
}

TEST(BinPair, PropertyExhaustiveTilingSmallN)
{
  Stream rng(6);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(200));
    const auto kind = static_cast<ScoreKind>(trial % 3);
    const StopConfig stop{static_cast<int>(rng.below(11)), rng.uniform(0.0, 12.0), trial % 4 != 0};
    const double z = rng.uniform(0.0, 6.0);
    const Binning b = bin_pair(independent_pair(n, rng), kind, stop, z, rng.bits());
    ASSERT_TRUE(testing::tiles_grid_exhaustively(b)) << "n=" << n;
    ASSERT_EQ(partition_violation(b), "") << "n=" << n;
  }
}

TEST(BinPair, PropertyStopsRespected)
{
  Stream rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 10 + static_cast<int>(rng.below(1500));
    const int depth = 1 + static_cast<int>(rng.below(10));
    const Binning b = bin_pair(independent_pair(n, rng), static_cast<ScoreKind>(trial % 3),
                               {depth, 10.0, true}, 5.0, rng.bits());
    ASSERT_EQ(partition_violation(b, 5.0), "");
    for (const Bin& bin : b.bins) {
      ASSERT_LE(bin.depth, depth);
      // A bin that could still split either hit a stop rule or was frozen.
      ASSERT_TRUE(bin.depth == depth || bin.expected <= 10.0 || bin.empty() ||
                  !halve(bin, Margin::s, 5.0));
    }
  }
}

TEST(BinSample, TiesBrokenReproducibly)
{
  Eigen::VectorXd x = Eigen::VectorXd::Zero(200);
  Eigen::VectorXd y = Eigen::VectorXd::LinSpaced(200, 0.0, 1.0);
  const auto a = to_json(bin_sample(x, y, ScoreKind::chi, depth6, 5.0, 3));
  const auto b = to_json(bin_sample(x, y, ScoreKind::chi, depth6, 5.0, 3));
  EXPECT_EQ(a, b);
  EXPECT_EQ(partition_violation(binning_from_json(a), 5.0), "");
}

} // namespace
} // namespace rrbin
