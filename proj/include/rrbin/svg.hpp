#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "rrbin/bin.hpp"

namespace rrbin {

enum class Fill { none, depth, residual };

Fill parse_fill(std::string_view name);

// Residual palette endpoints; zero maps to white.
inline constexpr std::string_view negative_colour = "#2166AC";
inline constexpr std::string_view positive_colour = "#B2182B";
// Depth palette: depth 0 is white, the configured max depth this gray.
inline constexpr std::string_view deepest_colour = "#404040";

struct RenderOptions {
  Fill fill = Fill::residual;
  bool show_points = false;
  /// Residual magnitude mapped to full saturation. Defaults to the largest
  /// |residual| in the binning; pass a shared value to compare plots.
  std::optional<double> residual_scale;
  int size_px = 480;
};

std::string depth_colour(int depth, int max_depth);
std::string residual_colour(double residual, double scale);

double max_abs_residual(const Binning& binning);

/// SVG 1.1 document with one rect per bin in bin order. The viewBox is rank
/// space (0,n]^2 with t increasing upwards, so rects tile it exactly.
std::string render_binning(const Binning& binning, const RenderOptions& options = {});

} // namespace rrbin
