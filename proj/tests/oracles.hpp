#pragma once

// Test-only reference computations, written independently of the library's
// scoring and binning code paths.

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rrbin/bin.hpp"
#include "rrbin/random.hpp"

namespace rrbin::testing {

inline double chi_term(double o, double e) { return (o - e) * (o - e) / e; }

inline double mi_term(double o, double e, double total)
{
  return o > 0.0 ? o / total * std::log(o / e) : 0.0;
}

/// Score of splitting one margin of a bin at real coordinate c, evaluated
/// from scratch: count members <= c, take expected counts from lengths.
struct TwoBin {
  double o_low, e_low, o_high, e_high;
};

inline TwoBin two_bin(const std::vector<double>& coords, double lower, double upper,
                      double expected, double c)
{
  double o_low = 0.0;
  for (double v : coords)
    if (v <= c) o_low += 1.0;
  const double e_low = expected * (c - lower) / (upper - lower);
  return {o_low, e_low, static_cast<double>(coords.size()) - o_low, expected - e_low};
}

inline double brute_chi(const std::vector<double>& coords, double lower, double upper,
                        double expected, double c)
{
  const auto b = two_bin(coords, lower, upper, expected, c);
  return chi_term(b.o_low, b.e_low) + chi_term(b.o_high, b.e_high);
}

inline double brute_mi(const std::vector<double>& coords, double lower, double upper,
                       double expected, double c)
{
  const auto b = two_bin(coords, lower, upper, expected, c);
  const double total = static_cast<double>(coords.size());
  return mi_term(b.o_low, b.e_low, total) + mi_term(b.o_high, b.e_high, total);
}

/// Exhaustive check that every grid cell of {1..n}^2 lies in exactly one bin.
inline bool tiles_grid_exhaustively(const Binning& binning)
{
  const int n = binning.n;
  std::vector<int> cover(static_cast<std::size_t>(n) * n, 0);
  for (const auto& b : binning.bins)
    for (int s = b.lower_s + 1; s <= b.upper_s; ++s)
      for (int t = b.lower_t + 1; t <= b.upper_t; ++t)
        if (s >= 1 && s <= n && t >= 1 && t <= n) ++cover[(s - 1) * static_cast<std::size_t>(n) + (t - 1)];
  for (int c : cover)
    if (c != 1) return false;
  return true;
}

/// Describes the first partition-invariant violation, or returns "".
inline std::string partition_violation(const Binning& binning, double min_expected_floor = 0.0)
{
  const int n = binning.n;
  std::int64_t area = 0;
  long observed = 0;
  double expected = 0.0;
  for (std::size_t i = 0; i < binning.bins.size(); ++i) {
    const Bin& b = binning.bins[i];
    if (!(b.lower_s < b.upper_s && b.lower_t < b.upper_t)) return "non-positive side";
    if (b.lower_s < 0 || b.lower_t < 0 || b.upper_s > n || b.upper_t > n) return "outside (0,n]^2";
    if (b.points_s.size() != b.points_t.size()) return "ragged point lists";
    for (std::size_t k = 0; k < b.points_s.size(); ++k)
      if (!b.contains(b.points_s[k], b.points_t[k])) return "point outside its bin";
    const double want = static_cast<double>(b.area()) / n;
    if (std::abs(b.expected - want) > 1e-9 * std::max(1.0, want)) return "expected != area/n";
    if (b.expected < min_expected_floor) return "bin below the minimum expected count";
    area += b.area();
    observed += b.observed();
    expected += b.expected;
    for (std::size_t j = 0; j < i; ++j) {
      const Bin& c = binning.bins[j];
      const bool overlap = b.lower_s < c.upper_s && c.lower_s < b.upper_s &&
                           b.lower_t < c.upper_t && c.lower_t < b.upper_t;
      if (overlap) return "overlapping bins";
    }
  }
  if (area != std::int64_t{n} * n) return "areas do not sum to n^2";
  if (observed != n) return "counts do not sum to n";
  if (std::abs(expected - n) > 1e-9 * n) return "expected counts do not sum to n";
  return "";
}

/// Uniform random permutation of 1..n (Fisher-Yates).
inline Eigen::VectorXi random_permutation(int n, Stream& rng)
{
  Eigen::VectorXi p(n);
  for (int i = 0; i < n; ++i) p(i) = i + 1;
  for (int i = n - 1; i > 0; --i)
    std::swap(p(i), p(static_cast<Eigen::Index>(rng.below(static_cast<std::uint64_t>(i) + 1))));
  return p;
}

inline RankedPair independent_pair(int n, Stream& rng)
{
  Eigen::VectorXi s = random_permutation(n, rng);
  Eigen::VectorXi t = random_permutation(n, rng);
  return make_ranked_pair(std::move(s), std::move(t));
}

inline RankedPair line_pair(int n)
{
  Eigen::VectorXi s = Eigen::VectorXi::LinSpaced(n, 1, n);
  return make_ranked_pair(s, s);
}

/// A bin with the given bounds holding the listed points; expected = area/n.
inline Bin make_bin(int ls, int us, int lt, int ut, std::vector<int> ps, std::vector<int> pt,
                    int n, int depth = 1)
{
  Bin b;
  b.lower_s = ls;
  b.upper_s = us;
  b.lower_t = lt;
  b.upper_t = ut;
  b.points_s = std::move(ps);
  b.points_t = std::move(pt);
  b.expected = static_cast<double>(b.area()) / n;
  b.depth = depth;
  return b;
}

} // namespace rrbin::testing
