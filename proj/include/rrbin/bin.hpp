#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "rrbin/ranks.hpp"

namespace rrbin {

enum class ScoreKind { chi, mi, random };

/// "chi", "mi" or "random".
std::string_view to_string(ScoreKind kind);

/// Accepts "chi", "mi", "random" and the short form "rand".
ScoreKind parse_score_kind(std::string_view name);

enum class Margin { s, t };

inline Margin other(Margin m) { return m == Margin::s ? Margin::t : Margin::s; }

struct StopConfig {
  int max_depth = 6;
  double min_expected = 10.0; // stop when expected <= this
  bool stop_empty = true;     // stop when the bin holds no points
};

bool operator==(const StopConfig& a, const StopConfig& b);

/// Half-open rectangle (lower_s, upper_s] x (lower_t, upper_t] in rank space.
struct Bin {
  int lower_s = 0;
  int upper_s = 0;
  int lower_t = 0;
  int upper_t = 0;
  std::vector<int> points_s;
  std::vector<int> points_t;
  double expected = 0.0; // area / n
  int depth = 0;

  int observed() const { return static_cast<int>(points_s.size()); }
  bool empty() const { return points_s.empty(); }

  int lower(Margin m) const { return m == Margin::s ? lower_s : lower_t; }
  int upper(Margin m) const { return m == Margin::s ? upper_s : upper_t; }
  int width(Margin m) const { return upper(m) - lower(m); }
  const std::vector<int>& points(Margin m) const
  {
    return m == Margin::s ? points_s : points_t;
  }

  std::int64_t area() const
  {
    return std::int64_t{upper_s - lower_s} * std::int64_t{upper_t - lower_t};
  }

  bool contains(int s, int t) const
  {
    return lower_s < s && s <= upper_s && lower_t < t && t <= upper_t;
  }
};

/// The final partition of rank space together with the settings used.
struct Binning {
  std::vector<Bin> bins;
  ScoreKind score_kind = ScoreKind::chi;
  StopConfig stop;
  double min_split_expected = 5.0;
  std::uint64_t seed = 0;
  int n = 0;

  int n_bin() const { return static_cast<int>(bins.size()); }
};

/// The bin (0,n] x (0,n] holding every point, expected count n, depth 0.
Bin root_bin(const RankedPair& pair);

/// True iff depth >= max_depth, expected <= min_expected, or (stop_empty and
/// the bin is empty).
bool should_stop(const Bin& bin, const StopConfig& cfg);

} // namespace rrbin
