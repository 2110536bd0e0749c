#include "rrbin/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

#include "rrbin/engine.hpp"
#include "rrbin/parallel.hpp"
#include "rrbin/random.hpp"

namespace rrbin {

Eigen::VectorXd pearson_residuals(const Binning& binning)
{
  Eigen::VectorXd residuals(binning.n_bin());
  for (int i = 0; i < binning.n_bin(); ++i) {
    const Bin& bin = binning.bins[static_cast<std::size_t>(i)];
    const double diff = bin.observed() - bin.expected;
    residuals(i) = std::copysign(std::sqrt(diff * diff / bin.expected), diff);
  }
  return residuals;
}

ChiSquare chi2_statistic(const Binning& binning)
{
  for (const Bin& bin : binning.bins)
    if (!(bin.expected > 0.0)) throw std::logic_error("chi2_statistic: bin with expected 0");
  const Eigen::VectorXd r = pearson_residuals(binning);
  double chi2 = 0.0;
  for (Eigen::Index i = 0; i < r.size(); ++i) chi2 += r(i) * r(i);
  return {chi2, binning.n_bin()};
}

double mi_statistic(const Binning& binning)
{
  double total = 0.0;
  for (const Bin& bin : binning.bins) {
    const double o = bin.observed();
    if (o > 0.0) total += o / binning.n * std::log(o / bin.expected);
  }
  return total;
}

double chi_square_quantile(double q, double df)
{
  return boost::math::quantile(boost::math::chi_squared_distribution<double>(df), q);
}

bool matches(const NullConfig& config, ScoreKind kind, const StopConfig& stop, double z)
{
  return config.kind == kind && config.min_split == z &&
         config.stop.min_expected == stop.min_expected &&
         config.stop.stop_empty == stop.stop_empty;
}

NullTable NullTable::at_depth(int depth) const
{
  NullTable out{n, config, {}};
  std::copy_if(entries.begin(), entries.end(), std::back_inserter(out.entries),
               [&](const NullEntry& e) { return e.depth == depth; });
  return out;
}

namespace {

Eigen::VectorXi random_permutation(int n, Stream& rng)
{
  Eigen::VectorXi p = Eigen::VectorXi::LinSpaced(n, 1, n);
  for (int k = n - 1; k > 0; --k) std::swap(p(k), p(static_cast<Eigen::Index>(rng.below(k + 1))));
  return p;
}

} // namespace

NullTable simulate_null(int n, std::span<const int> depths, ScoreKind kind,
                        const StopConfig& stop_template, double z, int n_sim,
                        std::uint64_t seed, unsigned threads)
{
  if (n < 2) throw std::invalid_argument("simulate_null: n must be at least 2");
  if (n_sim < 1) throw std::invalid_argument("simulate_null: need at least one replicate");

  NullTable table;
  table.n = n;
  table.config = {kind, stop_template, z};
  const std::size_t per_rep = depths.size();
  table.entries.resize(static_cast<std::size_t>(n_sim) * per_rep);

  parallel_for(static_cast<std::size_t>(n_sim), threads, [&](std::size_t rep) {
    const std::uint64_t rep_seed = mix_seed(seed, rep);
    Stream rng(rep_seed);
    RankedPair pair;
    pair.s = random_permutation(n, rng);
    pair.t = random_permutation(n, rng);
    const std::uint64_t bin_seed = mix_seed(rep_seed, 0x62696e); // "bin"
    for (std::size_t d = 0; d < per_rep; ++d) {
      StopConfig stop = stop_template;
      stop.max_depth = depths[d];
      const auto stat = chi2_statistic(bin_pair(pair, kind, stop, z, bin_seed));
      table.entries[rep * per_rep + d] = {depths[d], stat.n_bin, stat.chi2};
    }
  });
  return table;
}

double empirical_p(const NullTable& null, int n_bin, double chi2, int window)
{
  if (null.entries.empty()) throw std::invalid_argument("empirical_p: empty null table");
  if (window < 0) throw std::invalid_argument("empirical_p: negative window");

  int max_distance = 0;
  for (const auto& e : null.entries) max_distance = std::max(max_distance, std::abs(e.n_bin - n_bin));

  auto count = [&](int w) {
    std::size_t inside = 0, above = 0;
    for (const auto& e : null.entries) {
      if (std::abs(e.n_bin - n_bin) > w) continue;
      ++inside;
      if (e.chi2 >= chi2) ++above;
    }
    return std::pair{inside, above};
  };

  auto [inside, above] = count(window);
  if (inside == 0) {
    int w = window;
    while (inside < 100 && w < max_distance) std::tie(inside, above) = count(++w);
  }
  return static_cast<double>(1 + above) / static_cast<double>(1 + inside);
}

double empirical_quantile(std::vector<double> values, double q)
{
  if (values.empty()) throw std::invalid_argument("empirical_quantile: no values");
  if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("empirical_quantile: q outside [0,1]");
  std::sort(values.begin(), values.end());
  const double h = (static_cast<double>(values.size()) - 1.0) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

std::map<int, double> null_quantile_curve(const NullTable& null, double q, int window,
                                          std::size_t min_pool)
{
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("null_quantile_curve: q outside (0,1)");
  if (null.entries.size() < std::max<std::size_t>(min_pool, 1))
    throw std::invalid_argument("null_quantile_curve: not enough entries to pool");

  std::map<int, std::vector<double>> by_bins;
  for (const auto& e : null.entries) by_bins[e.n_bin].push_back(e.chi2);
  const int lowest = by_bins.begin()->first;
  const int highest = by_bins.rbegin()->first;

  std::map<int, double> curve;
  for (const auto& [n_bin, unused] : by_bins) {
    std::vector<double> pool;
    int w = window;
    for (;;) {
      pool.clear();
      for (auto it = by_bins.lower_bound(n_bin - w); it != by_bins.end() && it->first <= n_bin + w; ++it)
        pool.insert(pool.end(), it->second.begin(), it->second.end());
      if (pool.size() >= min_pool || (n_bin - w <= lowest && n_bin + w >= highest)) break;
      ++w;
    }
    curve[n_bin] = empirical_quantile(std::move(pool), q);
  }

  // Monotone rearrangement: sort the curve values over the bin-count grid.
  std::vector<double> values;
  for (const auto& [k, v] : curve) values.push_back(v);
  std::sort(values.begin(), values.end());
  std::size_t i = 0;
  for (auto& [k, v] : curve) v = values[i++];
  return curve;
}

} // namespace rrbin
