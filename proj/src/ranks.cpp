#include "rrbin/ranks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace rrbin {

Eigen::VectorXi rank(const Eigen::Ref<const Eigen::VectorXd>& values, Stream& rng)
{
  const Eigen::Index n = values.size();
  if (n == 0) throw std::invalid_argument("rank: empty input");
  if (!values.allFinite()) throw std::invalid_argument("rank: non-finite value");

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return values(a) < values(b); });

  // Shuffle each run of ties so its members take the run's ranks in random order.
  for (std::size_t begin = 0; begin < order.size();) {
    std::size_t end = begin + 1;
    while (end < order.size() && values(order[end]) == values(order[begin])) ++end;
    for (std::size_t k = end - 1; k > begin; --k) {
      const auto j = begin + static_cast<std::size_t>(rng.below(k - begin + 1));
      std::swap(order[k], order[j]);
    }
    begin = end;
  }

  Eigen::VectorXi ranks(n);
  for (std::size_t k = 0; k < order.size(); ++k) ranks(order[k]) = static_cast<int>(k + 1);
  return ranks;
}

RankedPair rank_pair(const Eigen::Ref<const Eigen::VectorXd>& x,
                     const Eigen::Ref<const Eigen::VectorXd>& y, Stream& rng)
{
  if (x.size() != y.size()) throw std::invalid_argument("rank_pair: length mismatch");
  RankedPair pair;
  pair.s = rank(x, rng);
  pair.t = rank(y, rng);
  return pair;
}

namespace {

bool is_permutation_of_1_to_n(const Eigen::VectorXi& v)
{
  std::vector<bool> seen(static_cast<std::size_t>(v.size()), false);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const int r = v(i);
    if (r < 1 || r > v.size() || seen[static_cast<std::size_t>(r - 1)]) return false;
    seen[static_cast<std::size_t>(r - 1)] = true;
  }
  return true;
}

} // namespace

RankedPair make_ranked_pair(Eigen::VectorXi s, Eigen::VectorXi t)
{
  if (s.size() == 0 || s.size() != t.size())
    throw std::invalid_argument("ranked pair: lengths must match and be positive");
  if (!is_permutation_of_1_to_n(s) || !is_permutation_of_1_to_n(t))
    throw std::invalid_argument("ranked pair: ranks must be a permutation of 1..n");
  return RankedPair{std::move(s), std::move(t)};
}

} // namespace rrbin
