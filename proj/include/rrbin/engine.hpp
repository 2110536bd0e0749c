#pragma once

#include <cstdint>

#include <Eigen/Core>

#include "rrbin/bin.hpp"

namespace rrbin {

/// Recursively bins a ranked pair until every bin meets the stop criteria.
///
/// The root is halved on a random margin; every later bin is split with
/// max_score_split. Each bin draws from its own stream, seeded by mixing the
/// parent's stream seed with the child's side, so the result is a pure
/// function of the arguments.
Binning bin_pair(const RankedPair& pair, ScoreKind kind, const StopConfig& stop, double z,
                 std::uint64_t seed);

/// Ranks raw observations (tie-breaking seeded from `seed`) and bins them.
Binning bin_sample(const Eigen::Ref<const Eigen::VectorXd>& x,
                   const Eigen::Ref<const Eigen::VectorXd>& y, ScoreKind kind,
                   const StopConfig& stop, double z, std::uint64_t seed);

} // namespace rrbin
