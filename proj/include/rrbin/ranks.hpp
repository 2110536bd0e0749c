#pragma once

#include <Eigen/Core>

#include "rrbin/random.hpp"

namespace rrbin {

/// Paired marginal ranks. Each of s and t is a permutation of 1..n.
struct RankedPair {
  Eigen::VectorXi s;
  Eigen::VectorXi t;

  int size() const { return static_cast<int>(s.size()); }
};

/// Ranks a sample: untied values get the count of elements <= them, runs of
/// tied values get their index range in uniformly random order.
///
/// Throws std::invalid_argument on empty input or non-finite values.
Eigen::VectorXi rank(const Eigen::Ref<const Eigen::VectorXd>& values, Stream& rng);

/// Ranks both margins with independent tie-breaking draws from rng.
RankedPair rank_pair(const Eigen::Ref<const Eigen::VectorXd>& x,
                     const Eigen::Ref<const Eigen::VectorXd>& y, Stream& rng);

/// Builds a RankedPair from existing rank vectors, checking that both are
/// permutations of 1..n.
RankedPair make_ranked_pair(Eigen::VectorXi s, Eigen::VectorXi t);

} // namespace rrbin
