#include "rrbin/patterns.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rrbin/random.hpp"

namespace rrbin {

std::string_view to_string(PatternKind kind)
{
  switch (kind) {
  case PatternKind::wave: return "wave";
  case PatternKind::rotated_square: return "rotated_square";
  case PatternKind::circle: return "circle";
  case PatternKind::valley: return "valley";
  case PatternKind::cross: return "cross";
  case PatternKind::ring: return "ring";
  case PatternKind::four_clusters: return "four_clusters";
  }
  return "wave";
}

PatternKind parse_pattern_kind(std::string_view name)
{
  for (PatternKind kind : all_patterns)
    if (to_string(kind) == name) return kind;
  throw std::invalid_argument("unknown pattern '" + std::string(name) + "'");
}

double default_noise(PatternKind kind)
{
  switch (kind) {
  case PatternKind::wave:
  case PatternKind::valley: return 0.25;
  case PatternKind::cross:
  case PatternKind::ring: return 0.1;
  case PatternKind::four_clusters: return 0.15;
  case PatternKind::rotated_square:
  case PatternKind::circle: return 0.0;
  }
  return 0.0;
}

Sample generate(const PatternSpec& spec)
{
  if (spec.n < 1) throw std::invalid_argument("generate: n must be positive");
  const double noise = spec.noise.value_or(default_noise(spec.kind));
  if (!(noise >= 0.0)) throw std::invalid_argument("generate: noise must be >= 0");

  constexpr double pi = std::numbers::pi;
  Stream rng(spec.seed);
  Sample out{Eigen::VectorXd(spec.n), Eigen::VectorXd(spec.n)};
  for (int i = 0; i < spec.n; ++i) {
    double x = 0.0, y = 0.0;
    switch (spec.kind) {
    case PatternKind::wave:
      x = rng.uniform(-1.0, 1.0);
      y = std::sin(4.0 * pi * x) + rng.normal(0.0, noise);
      break;
    case PatternKind::rotated_square: {
      const double u = rng.uniform(-1.0, 1.0);
      const double v = rng.uniform(-1.0, 1.0);
      x = (u + v) / std::numbers::sqrt2;
      y = (u - v) / std::numbers::sqrt2;
      break;
    }
    case PatternKind::circle: {
      const double theta = rng.uniform(0.0, 2.0 * pi);
      const double r = std::sqrt(rng.uniform());
      x = r * std::cos(theta);
      y = r * std::sin(theta);
      break;
    }
    case PatternKind::valley:
      x = rng.uniform(-1.0, 1.0);
      y = x * x + rng.normal(0.0, noise);
      break;
    case PatternKind::cross:
      x = rng.uniform(-1.0, 1.0);
      y = (rng.coin() ? x : -x) + rng.normal(0.0, noise);
      break;
    case PatternKind::ring: {
      const double theta = rng.uniform(0.0, 2.0 * pi);
      const double r = 1.0 + rng.normal(0.0, noise);
      x = r * std::cos(theta);
      y = r * std::sin(theta);
      break;
    }
    case PatternKind::four_clusters:
      x = rng.normal(rng.coin() ? 1.0 : -1.0, noise);
      y = rng.normal(rng.coin() ? 1.0 : -1.0, noise);
      break;
    }
    out.x(i) = x;
    out.y(i) = y;
  }
  return out;
}

} // namespace rrbin
