#include "rrbin/bin.hpp"

#include <stdexcept>
#include <string>

namespace rrbin {

std::string_view to_string(ScoreKind kind)
{
  switch (kind) {
  case ScoreKind::chi: return "chi";
  case ScoreKind::mi: return "mi";
  case ScoreKind::random: return "random";
  }
  return "chi";
}

ScoreKind parse_score_kind(std::string_view name)
{
  if (name == "chi") return ScoreKind::chi;
  if (name == "mi") return ScoreKind::mi;
  if (name == "random" || name == "rand") return ScoreKind::random;
  throw std::invalid_argument("unknown score kind '" + std::string(name) + "'");
}

bool operator==(const StopConfig& a, const StopConfig& b)
{
  return a.max_depth == b.max_depth && a.min_expected == b.min_expected &&
         a.stop_empty == b.stop_empty;
}

Bin root_bin(const RankedPair& pair)
{
  const int n = pair.size();
  Bin bin;
  bin.lower_s = 0;
  bin.upper_s = n;
  bin.lower_t = 0;
  bin.upper_t = n;
  bin.points_s.assign(pair.s.data(), pair.s.data() + n);
  bin.points_t.assign(pair.t.data(), pair.t.data() + n);
  bin.expected = static_cast<double>(n);
  bin.depth = 0;
  return bin;
}

bool should_stop(const Bin& bin, const StopConfig& cfg)
{
  return bin.depth >= cfg.max_depth || bin.expected <= cfg.min_expected ||
         (cfg.stop_empty && bin.empty());
}

} // namespace rrbin
