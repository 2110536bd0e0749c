#pragma once

#include <cmath>
#include <stdexcept>

#include <Eigen/Core>

#include "rrbin/random.hpp"

namespace rrbin {

template <typename Scalar>
using ScoreVector = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

/// Candidate split coordinates along one margin of a bin:
/// [lower bound, pseudo-point, sorted member coordinates..., upper bound].
///
/// The pseudo-point sits one rank below the smallest member coordinate, so a
/// split there produces an empty lower child. A split at w[i] puts every
/// member with coordinate <= w[i] in the lower child.
template <typename Scalar>
struct CandidateVector {
  Eigen::Array<Scalar, Eigen::Dynamic, 1> w;
  Scalar expected = Scalar(0);
  Scalar min_split = Scalar(5);

  Eigen::Index size() const { return w.size(); }
  Eigen::Index members() const { return w.size() - 3; }
};

namespace detail {

template <typename Scalar>
void check_candidates(const CandidateVector<Scalar>& cand)
{
  if (!(cand.expected > Scalar(0)))
    throw std::invalid_argument("candidate vector: expected count must be positive");
  if (cand.w.size() < 3)
    throw std::invalid_argument("candidate vector: need at least three coordinates");
  if (cand.min_split < Scalar(0))
    throw std::invalid_argument("candidate vector: negative minimum split size");
}

// Walks the interior candidates with the cumulative-length recurrence and
// calls kernel(o_low, e_low, o_high, e_high) for each one passing the size
// gate. Gated candidates score 0.
template <typename Scalar, typename Kernel>
ScoreVector<Scalar> accumulate_scores(const CandidateVector<Scalar>& cand, Kernel&& kernel)
{
  check_candidates(cand);
  const auto& w = cand.w;
  const Eigen::Index m = w.size();
  const Scalar total = static_cast<Scalar>(m - 3);
  const Scalar span = w(m - 1) - w(0);
  const Scalar density = cand.expected / span;

  ScoreVector<Scalar> scores = ScoreVector<Scalar>::Zero(m - 2);
  Scalar cumulative = w(1) - w(0);
  for (Eigen::Index i = 1; i + 1 < m; ++i) {
    const Scalar e_low = cumulative * density;
    const Scalar e_high = cand.expected - e_low;
    const bool open = cumulative > Scalar(0) && cumulative < span;
    if (open && e_low >= cand.min_split && e_high >= cand.min_split) {
      const Scalar o_low = static_cast<Scalar>(i - 1);
      scores(i - 1) = kernel(o_low, e_low, total - o_low, e_high, total);
    }
    cumulative += w(i + 1) - w(i);
  }
  return scores;
}

template <typename Scalar>
Scalar xlogy_ratio(Scalar o, Scalar e)
{
  using std::log;
  return o > Scalar(0) ? o * log(o / e) : Scalar(0);
}

} // namespace detail

/// 1 where a split at the candidate leaves both children with positive width
/// and expected count >= min_split, else 0.
template <typename Scalar>
Eigen::Array<bool, Eigen::Dynamic, 1> split_gate(const CandidateVector<Scalar>& cand)
{
  detail::check_candidates(cand);
  const auto& w = cand.w;
  const Eigen::Index m = w.size();
  const Scalar span = w(m - 1) - w(0);
  const Scalar density = cand.expected / span;
  Eigen::Array<bool, Eigen::Dynamic, 1> gate(m - 2);
  Scalar cumulative = w(1) - w(0);
  for (Eigen::Index i = 1; i + 1 < m; ++i) {
    const Scalar e_low = cumulative * density;
    gate(i - 1) = cumulative > Scalar(0) && cumulative < span && e_low >= cand.min_split &&
                  cand.expected - e_low >= cand.min_split;
    cumulative += w(i + 1) - w(i);
  }
  return gate;
}

/// Post-split chi score (o-e)^2/e summed over both children, per candidate.
template <typename Scalar>
ScoreVector<Scalar> chi_scores(const CandidateVector<Scalar>& cand)
{
  return detail::accumulate_scores(
      cand, [](Scalar o_low, Scalar e_low, Scalar o_high, Scalar e_high, Scalar) {
        const Scalar dl = o_low - e_low;
        const Scalar dh = o_high - e_high;
        return dl * dl / e_low + dh * dh / e_high;
      });
}

/// Post-split mi score (o/total) log(o/e) summed over both children, with
/// 0 log 0 = 0. Entries may be negative.
template <typename Scalar>
ScoreVector<Scalar> mi_scores(const CandidateVector<Scalar>& cand)
{
  return detail::accumulate_scores(
      cand, [](Scalar o_low, Scalar e_low, Scalar o_high, Scalar e_high, Scalar total) {
        if (total <= Scalar(0)) return Scalar(0);
        return (detail::xlogy_ratio(o_low, e_low) + detail::xlogy_ratio(o_high, e_high)) /
               total;
      });
}

/// Independent Uniform(0,1) draws times the size gate. One draw is consumed
/// per candidate whether gated or not.
template <typename Scalar>
ScoreVector<Scalar> rand_scores(const CandidateVector<Scalar>& cand, Stream& rng)
{
  const auto gate = split_gate(cand);
  ScoreVector<Scalar> scores(gate.size());
  for (Eigen::Index i = 0; i < gate.size(); ++i) {
    const auto u = static_cast<Scalar>(rng.uniform_open());
    scores(i) = gate(i) ? u : Scalar(0);
  }
  return scores;
}

} // namespace rrbin
