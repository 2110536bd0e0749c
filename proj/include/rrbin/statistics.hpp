#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "rrbin/bin.hpp"

namespace rrbin {

struct ChiSquare {
  double chi2 = 0.0;
  int n_bin = 0;
};

/// Signed square roots of the per-bin chi scores, in bin order.
Eigen::VectorXd pearson_residuals(const Binning& binning);

/// Sum of (o - e)^2 / e over bins, accumulated as the sum of squared Pearson
/// residuals in bin order. Throws std::logic_error if a bin has expected 0.
ChiSquare chi2_statistic(const Binning& binning);

/// Sum of (o / n) log(o / e) over bins with 0 log 0 = 0.
double mi_statistic(const Binning& binning);

/// Upper q-quantile of the chi-square law with df degrees of freedom.
double chi_square_quantile(double q, double df);

/// Settings a null table was simulated under. stop.max_depth is not used;
/// each entry carries its own depth limit.
struct NullConfig {
  ScoreKind kind = ScoreKind::chi;
  StopConfig stop;
  double min_split = 5.0;
};

/// True when binning under (kind, stop, z) is comparable with the null,
/// i.e. everything but the depth limit matches.
bool matches(const NullConfig& config, ScoreKind kind, const StopConfig& stop, double z);

struct NullEntry {
  int depth = 0;
  int n_bin = 0;
  double chi2 = 0.0;
};

struct NullTable {
  int n = 0;
  NullConfig config;
  std::vector<NullEntry> entries;

  /// Entries whose depth limit equals `depth`.
  NullTable at_depth(int depth) const;
};

/// Simulates statistics under independence: each replicate draws two
/// independent uniform permutations of 1..n and bins them at every depth
/// limit in `depths`. Entries are ordered by replicate, then by depth in the
/// given order, regardless of thread count.
NullTable simulate_null(int n, std::span<const int> depths, ScoreKind kind,
                        const StopConfig& stop_template, double z, int n_sim,
                        std::uint64_t seed, unsigned threads = 0);

/// Add-one empirical p-value of `chi2` among null entries whose bin count is
/// within `window` of `n_bin`. If the window holds no entries it is widened
/// until it holds at least 100 or covers the whole table.
double empirical_p(const NullTable& null, int n_bin, double chi2, int window = 2);

/// Type-7 (linear interpolation) sample quantile.
double empirical_quantile(std::vector<double> values, double q);

/// Empirical q-quantile of chi2 for each observed bin count, pooling bin
/// counts within `window` (widened until `min_pool` entries are pooled),
/// then rearranged to be non-decreasing in the bin count.
std::map<int, double> null_quantile_curve(const NullTable& null, double q, int window = 2,
                                          std::size_t min_pool = 50);

} // namespace rrbin
