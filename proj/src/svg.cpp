#include "rrbin/svg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

#include "rrbin/statistics.hpp"

namespace rrbin {

namespace {

struct Rgb {
  int r, g, b;
};

constexpr Rgb white{255, 255, 255};
constexpr Rgb blue{0x21, 0x66, 0xAC};
constexpr Rgb red{0xB2, 0x18, 0x2B};
constexpr Rgb gray{0x40, 0x40, 0x40};

std::string blend(Rgb from, Rgb to, double f)
{
  f = std::clamp(f, 0.0, 1.0);
  auto mix = [f](int a, int b) { return static_cast<int>(std::lround(a + (b - a) * f)); };
  return fmt::format("#{:02X}{:02X}{:02X}", mix(from.r, to.r), mix(from.g, to.g), mix(from.b, to.b));
}

} // namespace

Fill parse_fill(std::string_view name)
{
  if (name == "none") return Fill::none;
  if (name == "depth") return Fill::depth;
  if (name == "residual") return Fill::residual;
  throw std::invalid_argument("unknown fill '" + std::string(name) + "'");
}

std::string depth_colour(int depth, int max_depth)
{
  if (max_depth <= 0) return blend(white, gray, 0.0);
  return blend(white, gray, static_cast<double>(depth) / max_depth);
}

std::string residual_colour(double residual, double scale)
{
  if (!(scale > 0.0) || residual == 0.0) return blend(white, white, 0.0);
  return blend(white, residual < 0.0 ? blue : red, std::abs(residual) / scale);
}

double max_abs_residual(const Binning& binning)
{
  const Eigen::VectorXd r = pearson_residuals(binning);
  return r.size() ? r.cwiseAbs().maxCoeff() : 0.0;
}

std::string render_binning(const Binning& binning, const RenderOptions& options)
{
  const int n = binning.n;
  const Eigen::VectorXd residuals =
      options.fill == Fill::residual ? pearson_residuals(binning) : Eigen::VectorXd();
  const double scale = options.residual_scale.value_or(
      residuals.size() ? residuals.cwiseAbs().maxCoeff() : 0.0);

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{0}\" "
      "viewBox=\"0 0 {1} {1}\" preserveAspectRatio=\"none\">\n",
      options.size_px, n);
  svg += "<g stroke=\"#000000\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\">\n";
  for (std::size_t i = 0; i < binning.bins.size(); ++i) {
    const Bin& b = binning.bins[i];
    std::string fill = "#FFFFFF";
    if (options.fill == Fill::depth)
      fill = depth_colour(b.depth, binning.stop.max_depth);
    else if (options.fill == Fill::residual)
      fill = residual_colour(residuals(static_cast<Eigen::Index>(i)), scale);
    svg += fmt::format(
        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\" "
        "vector-effect=\"non-scaling-stroke\"/>\n",
        b.lower_s, n - b.upper_t, b.upper_s - b.lower_s, b.upper_t - b.lower_t, fill);
  }
  svg += "</g>\n";
  if (options.show_points) {
    const double radius = std::max(0.5, n / 250.0);
    svg += "<g fill=\"#000000\" fill-opacity=\"0.6\">\n";
    for (const Bin& b : binning.bins)
      for (std::size_t k = 0; k < b.points_s.size(); ++k)
        svg += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>\n", b.points_s[k] - 0.5,
                           n - b.points_t[k] + 0.5, radius);
    svg += "</g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

} // namespace rrbin
