#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "rrbin/bin.hpp"
#include "rrbin/statistics.hpp"

namespace rrbin {

/// Named numeric columns; values has one column per name.
struct ColumnTable {
  std::vector<std::string> names;
  Eigen::MatrixXd values;
  std::vector<std::string> warnings; // one per dropped column

  int columns() const { return static_cast<int>(names.size()); }
};

/// Reads a CSV matrix with a header of unique column names. Columns with any
/// empty cell are dropped (with a warning). Throws DataError naming the
/// offending row and column for unreadable files, duplicate names, ragged
/// rows or non-numeric cells.
ColumnTable load_matrix(const std::filesystem::path& path);
ColumnTable parse_matrix(std::istream& in);

/// -log(S_t / S_{t-1}) for consecutive prices.
/// Throws std::invalid_argument for non-positive prices or fewer than two.
Eigen::VectorXd neg_log_returns(const Eigen::Ref<const Eigen::VectorXd>& prices);

struct ScanRecord {
  std::string name_a;
  std::string name_b;
  int index_a = 0;
  int index_b = 0;
  int n_bin = 0;
  double chi2 = 0.0;
  double p_emp = 1.0;
};

struct ScanConfig {
  ScoreKind kind = ScoreKind::chi;
  StopConfig stop;
  double min_split = 5.0;
  std::uint64_t base_seed = 0;
  int window = 2;
  unsigned threads = 0; // 0 = hardware concurrency
};

/// Seed for the column pair (a, b), a < b.
std::uint64_t pair_seed(std::uint64_t base_seed, int a, int b);

/// Ranks and bins one column pair exactly as scan_pairs does.
Binning bin_columns(const ColumnTable& table, int a, int b, const ScanConfig& config);

/// Bins every unordered column pair and scores it against the null entries
/// at the configured depth. Records are sorted by descending chi2 (ties by
/// pair order). Throws ConfigError when the null was simulated under other
/// settings or has no entries at the configured depth, and
/// std::invalid_argument for fewer than two columns.
std::vector<ScanRecord> scan_pairs(const ColumnTable& table, const ScanConfig& config,
                                   const NullTable& null);

// Subsets of records sorted by descending chi2. k is clamped to the size.
std::vector<ScanRecord> top_k(std::span<const ScanRecord> records, std::size_t k);
std::vector<ScanRecord> bottom_k(std::span<const ScanRecord> records, std::size_t k);
std::vector<ScanRecord> middle_k(std::span<const ScanRecord> records, std::size_t k);

} // namespace rrbin
