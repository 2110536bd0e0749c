#include "rrbin/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rrbin {

namespace {

// Expected count of the lower child, computed exactly as the scorers do so
// the size gate and the children agree to the last bit.
double lower_expected(const Bin& bin, Margin margin, int coord)
{
  const double density = bin.expected / static_cast<double>(bin.width(margin));
  return static_cast<double>(coord - bin.lower(margin)) * density;
}

struct Best {
  double score = -std::numeric_limits<double>::infinity();
  Eigen::Index index = -1;
};

Best best_open_candidate(const ScoreVector<double>& scores,
                         const Eigen::Array<bool, Eigen::Dynamic, 1>& gate)
{
  Best best;
  for (Eigen::Index i = 0; i < scores.size(); ++i) {
    if (gate(i) && scores(i) > best.score) {
      best.score = scores(i);
      best.index = i;
    }
  }
  return best;
}

// Scores within this relative distance count as tied, so that splits which
// are equal in exact arithmetic but differ by rounding in the recurrence
// still take the halving path.
constexpr double tie_tolerance = 1e-9;

bool near(double a, double b)
{
  return std::abs(a - b) <= tie_tolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

// True when every candidate passing the gate scores (nearly) the same.
bool open_scores_tied(const ScoreVector<double>& scores,
                      const Eigen::Array<bool, Eigen::Dynamic, 1>& gate, double best)
{
  for (Eigen::Index i = 0; i < scores.size(); ++i)
    if (gate(i) && !near(scores(i), best)) return false;
  return true;
}

} // namespace

BinPair split_at(const Bin& bin, Margin margin, int coord)
{
  const int lo = bin.lower(margin);
  const int hi = bin.upper(margin);
  if (!(lo < coord && coord < hi))
    throw std::invalid_argument("split_at: coordinate outside the open bin interval");

  BinPair children;
  auto& [low, high] = children;
  for (Bin* child : {&low, &high}) {
    child->lower_s = bin.lower_s;
    child->upper_s = bin.upper_s;
    child->lower_t = bin.lower_t;
    child->upper_t = bin.upper_t;
    child->depth = bin.depth + 1;
  }
  if (margin == Margin::s) {
    low.upper_s = coord;
    high.lower_s = coord;
  } else {
    low.upper_t = coord;
    high.lower_t = coord;
  }
  low.expected = lower_expected(bin, margin, coord);
  high.expected = bin.expected - low.expected;

  const auto& key = bin.points(margin);
  const auto n_low = std::count_if(key.begin(), key.end(), [&](int c) { return c <= coord; });
  low.points_s.reserve(static_cast<std::size_t>(n_low));
  low.points_t.reserve(static_cast<std::size_t>(n_low));
  high.points_s.reserve(key.size() - static_cast<std::size_t>(n_low));
  high.points_t.reserve(key.size() - static_cast<std::size_t>(n_low));
  for (std::size_t i = 0; i < key.size(); ++i) {
    Bin& dest = key[i] <= coord ? low : high;
    dest.points_s.push_back(bin.points_s[i]);
    dest.points_t.push_back(bin.points_t[i]);
  }
  return children;
}

int midpoint(const Bin& bin, Margin margin)
{
  const int sum = bin.lower(margin) + bin.upper(margin);
  return sum / 2 + (sum % 2 != 0 ? 1 : 0);
}

std::optional<BinPair> halve(const Bin& bin, Margin first, double z)
{
  for (Margin margin : {first, other(first)}) {
    const int coord = midpoint(bin, margin);
    if (coord >= bin.upper(margin)) continue; // width 1
    const double e_low = lower_expected(bin, margin, coord);
    if (e_low < z || bin.expected - e_low < z) continue;
    return split_at(bin, margin, coord);
  }
  return std::nullopt;
}

CandidateVector<double> margin_candidates(const Bin& bin, Margin margin, double z)
{
  if (bin.empty()) throw std::logic_error("margin_candidates: empty bin");
  std::vector<int> sorted = bin.points(margin);
  std::sort(sorted.begin(), sorted.end());

  CandidateVector<double> cand;
  const auto o = static_cast<Eigen::Index>(sorted.size());
  cand.w.resize(o + 3);
  cand.w(0) = bin.lower(margin);
  cand.w(1) = sorted.front() - 1;
  for (Eigen::Index i = 0; i < o; ++i) cand.w(i + 2) = sorted[static_cast<std::size_t>(i)];
  cand.w(o + 2) = bin.upper(margin);
  cand.expected = bin.expected;
  cand.min_split = z;
  return cand;
}

ScoreVector<double> score_candidates(const CandidateVector<double>& cand, ScoreKind kind,
                                     Stream& rng)
{
  switch (kind) {
  case ScoreKind::chi: return chi_scores(cand);
  case ScoreKind::mi: return mi_scores(cand);
  case ScoreKind::random: return rand_scores(cand, rng);
  }
  throw std::invalid_argument("unknown score kind");
}

std::optional<BinPair> max_score_split(const Bin& bin, ScoreKind kind, double z, Stream& rng)
{
  if (bin.empty()) throw std::logic_error("max_score_split: cannot score an empty bin");

  const auto cand_s = margin_candidates(bin, Margin::s, z);
  const auto cand_t = margin_candidates(bin, Margin::t, z);
  const auto scores_s = score_candidates(cand_s, kind, rng);
  const auto scores_t = score_candidates(cand_t, kind, rng);

  // Gated candidates score 0 but are never eligible: mi scores can be
  // negative, so a gated 0 could otherwise outrank every valid split.
  const auto gate_s = split_gate(cand_s);
  const auto gate_t = split_gate(cand_t);
  const Best best_s = best_open_candidate(scores_s, gate_s);
  const Best best_t = best_open_candidate(scores_t, gate_t);
  if (best_s.index < 0 && best_t.index < 0) return halve(bin, rng.coin() ? Margin::t : Margin::s, z);

  // Every open candidate tied on both margins: halve instead of cutting at
  // an arbitrary one. A margin without open candidates loses the comparison.
  // Random draws never tie, so random scoring always takes the argmax.
  if (kind != ScoreKind::random && open_scores_tied(scores_s, gate_s, best_s.score) &&
      open_scores_tied(scores_t, gate_t, best_t.score)) {
    Margin margin;
    if (best_s.index >= 0 && best_t.index >= 0 && near(best_s.score, best_t.score))
      margin = rng.coin() ? Margin::t : Margin::s;
    else
      margin = best_s.score > best_t.score ? Margin::s : Margin::t;
    return halve(bin, margin, z);
  }

  if (best_t.index < 0 || (best_s.index >= 0 && best_s.score >= best_t.score))
    return split_at(bin, Margin::s, static_cast<int>(cand_s.w(best_s.index + 1)));
  return split_at(bin, Margin::t, static_cast<int>(cand_t.w(best_t.index + 1)));
}

} // namespace rrbin
