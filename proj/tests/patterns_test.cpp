#include <cmath>

#include <gtest/gtest.h>

#include "rrbin/engine.hpp"
#include "rrbin/patterns.hpp"
#include "rrbin/statistics.hpp"

namespace rrbin {
namespace {

double spearman(const Sample& s)
{
  Stream rng(0);
  const auto pair = rank_pair(s.x, s.y, rng);
  const Eigen::ArrayXd a = pair.s.cast<double>().array() - pair.s.cast<double>().mean();
  const Eigen::ArrayXd b = pair.t.cast<double>().array() - pair.t.cast<double>().mean();
  return (a * b).sum() / std::sqrt((a * a).sum() * (b * b).sum());
}

TEST(Generate, LengthsForEveryKind)
{
  for (auto kind : all_patterns) {
    const auto s = generate({kind, 1000, std::nullopt, 3});
    EXPECT_EQ(s.x.size(), 1000);
    EXPECT_EQ(s.y.size(), 1000);
    EXPECT_TRUE(s.x.allFinite() && s.y.allFinite());
  }
}

TEST(Generate, SeedReproducible)
{
  for (auto kind : all_patterns) {
    const auto a = generate({kind, 50, std::nullopt, 9});
    const auto b = generate({kind, 50, std::nullopt, 9});
    const auto c = generate({kind, 50, std::nullopt, 10});
    EXPECT_EQ(a.x, b.x);
    EXPECT_EQ(a.y, b.y);
    EXPECT_NE(a.x, c.x);
  }
}

TEST(Generate, Supports)
{
  const auto square = generate({PatternKind::rotated_square, 2000, std::nullopt, 1});
  EXPECT_LE((square.x.array().abs() + square.y.array().abs()).maxCoeff(), std::sqrt(2.0) + 1e-12);
  const auto disk = generate({PatternKind::circle, 2000, std::nullopt, 1});
  EXPECT_LE((disk.x.array().square() + disk.y.array().square()).maxCoeff(), 1.0);
  const auto wave = generate({PatternKind::wave, 2000, 0.0, 1});
  EXPECT_LE((wave.y.array() - (4.0 * std::numbers::pi * wave.x.array()).sin()).abs().maxCoeff(),
            1e-12);
  const auto valley = generate({PatternKind::valley, 2000, 0.0, 1});
  EXPECT_LE((valley.y.array() - valley.x.array().square()).abs().maxCoeff(), 1e-12);
  const auto ring = generate({PatternKind::ring, 2000, 0.0, 1});
  EXPECT_LE(((ring.x.array().square() + ring.y.array().square()).sqrt() - 1.0).abs().maxCoeff(),
            1e-12);
  const auto cross = generate({PatternKind::cross, 2000, 0.0, 1});
  EXPECT_LE((cross.y.array().abs() - cross.x.array().abs()).abs().maxCoeff(), 1e-12);
}

TEST(Generate, FourClustersHaveIndependentRanks)
{
  int small = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed)
    if (std::abs(spearman(generate({PatternKind::four_clusters, 1000, std::nullopt, seed}))) < 0.1)
      ++small;
  EXPECT_GE(small, 95);
}

TEST(Generate, RejectsBadSpecs)
{
  EXPECT_THROW(generate({PatternKind::wave, 0, std::nullopt, 0}), std::invalid_argument);
  EXPECT_THROW(generate({PatternKind::wave, 10, -0.1, 0}), std::invalid_argument);
}

TEST(PatternNames, RoundTrip)
{
  for (auto kind : all_patterns) EXPECT_EQ(parse_pattern_kind(to_string(kind)), kind);
  EXPECT_THROW(parse_pattern_kind("spiral"), std::invalid_argument);
}

TEST(Generate, WaveIsDetectedAtDepthTen)
{
  const StopConfig stop{10, 10.0, true};
  const std::vector<int> depth10{10};
  const auto null = simulate_null(1000, depth10, ScoreKind::chi, stop, 5.0, 500, 77);
  const auto wave = generate({PatternKind::wave, 1000, std::nullopt, 5});
  const auto stat = chi2_statistic(bin_sample(wave.x, wave.y, ScoreKind::chi, stop, 5.0, 5));
  // A window spanning every bin count compares against the whole null.
  EXPECT_LT(empirical_p(null, stat.n_bin, stat.chi2, 1000), 0.002);
}

} // namespace
} // namespace rrbin
