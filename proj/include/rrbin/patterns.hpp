#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include <Eigen/Core>

namespace rrbin {

enum class PatternKind { wave, rotated_square, circle, valley, cross, ring, four_clusters };

inline constexpr std::array<PatternKind, 7> all_patterns{
    PatternKind::wave,  PatternKind::rotated_square, PatternKind::circle,
    PatternKind::valley, PatternKind::cross,         PatternKind::ring,
    PatternKind::four_clusters};

std::string_view to_string(PatternKind kind);
PatternKind parse_pattern_kind(std::string_view name);

/// Noise scale used when PatternSpec::noise is unset.
double default_noise(PatternKind kind);

struct PatternSpec {
  PatternKind kind = PatternKind::wave;
  int n = 1000;
  std::optional<double> noise;
  std::uint64_t seed = 0;
};

struct Sample {
  Eigen::VectorXd x;
  Eigen::VectorXd y;
};

/// Draws n observations from the pattern:
///   wave            x ~ U(-1,1), y = sin(4 pi x) + N(0, noise^2)      (0.25)
///   rotated_square  u, v ~ U(-1,1), x = (u+v)/sqrt2, y = (u-v)/sqrt2
///   circle          uniform on the unit disk
///   valley          x ~ U(-1,1), y = x^2 + N(0, noise^2)              (0.25)
///   cross           x ~ U(-1,1), y = +-x + N(0, noise^2)              (0.1)
///   ring            radius 1 + N(0, noise^2), uniform angle           (0.1)
///   four_clusters   x, y independent from 0.5 N(-1, s^2) + 0.5 N(1, s^2),
///                   s = noise                                         (0.15)
/// Defaults in parentheses. Throws std::invalid_argument for n < 1 or
/// negative noise.
Sample generate(const PatternSpec& spec);

} // namespace rrbin
