#pragma once

#include <optional>
#include <utility>

#include "rrbin/bin.hpp"
#include "rrbin/random.hpp"
#include "rrbin/scoring.hpp"

namespace rrbin {

using BinPair = std::pair<Bin, Bin>;

/// Splits at coord on the given margin: the lower child gets (lower, coord],
/// the upper child (coord, upper]. Points with coordinate <= coord go low.
///
/// Throws std::invalid_argument unless lower < coord < upper.
BinPair split_at(const Bin& bin, Margin margin, int coord);

/// ceiling((lower + upper) / 2) for the margin.
int midpoint(const Bin& bin, Margin margin);

/// Halves the bin at its midpoint on `first`, or on the other margin when
/// halving `first` is impossible or would leave a child with expected < z.
/// Returns nullopt when neither margin can be halved.
std::optional<BinPair> halve(const Bin& bin, Margin first, double z);

/// Candidate split coordinates for one margin of a non-empty bin.
CandidateVector<double> margin_candidates(const Bin& bin, Margin margin, double z);

/// Scores candidates with the chosen kind. rng is only drawn from for random.
ScoreVector<double> score_candidates(const CandidateVector<double>& cand, ScoreKind kind,
                                     Stream& rng);

/// Splits a bin at its best-scoring candidate.
///
/// Only candidates passing the size gate are eligible. For chi and mi, if
/// the eligible scores on each margin are all equal (up to rounding), the
/// bin is halved on the margin with the larger common score, or a random
/// margin when they match. Otherwise the best eligible candidate wins, with
/// ties between margins going to s and ties within a margin to the lowest
/// coordinate. With no eligible candidate on either margin the bin is halved
/// on a random margin. Returns nullopt only when a required halving is
/// impossible on both margins.
///
/// Throws std::logic_error for an empty bin.
std::optional<BinPair> max_score_split(const Bin& bin, ScoreKind kind, double z, Stream& rng);

} // namespace rrbin
