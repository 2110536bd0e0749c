#include "rrbin/engine.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "rrbin/splitting.hpp"

namespace rrbin {

namespace {

struct ActiveBin {
  Bin bin;
  std::uint64_t stream_seed;
};

constexpr std::uint64_t root_salt = 0x726f6f74; // "root"
constexpr std::uint64_t rank_salt = 0x72616e6b; // "rank"

} // namespace

Binning bin_pair(const RankedPair& pair, ScoreKind kind, const StopConfig& stop, double z,
                 std::uint64_t seed)
{
  if (pair.size() < 1 || pair.t.size() != pair.s.size())
    throw std::invalid_argument("bin_pair: invalid ranked pair");
  if (!(z >= 0.0)) throw std::invalid_argument("bin_pair: minimum split size must be >= 0");

  Binning result;
  result.score_kind = kind;
  result.stop = stop;
  result.min_split_expected = z;
  result.seed = seed;
  result.n = pair.size();

  std::vector<ActiveBin> active;
  active.push_back({root_bin(pair), mix_seed(seed, root_salt)});
  bool at_root = true;

  while (!active.empty()) {
    std::vector<ActiveBin> next;
    next.reserve(active.size() * 2);
    for (auto& [bin, stream_seed] : active) {
      if (should_stop(bin, stop)) {
        result.bins.push_back(std::move(bin));
        continue;
      }
      Stream rng(stream_seed);
      std::optional<BinPair> children;
      if (at_root || bin.empty()) {
        // Every split of the root scores identically on uniform ranks, and
        // every split of an empty bin does too: halve a random margin.
        children = halve(bin, rng.coin() ? Margin::t : Margin::s, z);
      } else {
        children = max_score_split(bin, kind, z, rng);
      }
      if (!children) {
        result.bins.push_back(std::move(bin));
        continue;
      }
      next.push_back({std::move(children->first), mix_seed(stream_seed, 1)});
      next.push_back({std::move(children->second), mix_seed(stream_seed, 2)});
    }
    active = std::move(next);
    at_root = false;
  }
  return result;
}

Binning bin_sample(const Eigen::Ref<const Eigen::VectorXd>& x,
                   const Eigen::Ref<const Eigen::VectorXd>& y, ScoreKind kind,
                   const StopConfig& stop, double z, std::uint64_t seed)
{
  Stream rng(mix_seed(seed, rank_salt));
  return bin_pair(rank_pair(x, y, rng), kind, stop, z, seed);
}

} // namespace rrbin
