#pragma once

#include <string>
#include <vector>

namespace lgdot {

struct SvgSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (x, y)
};

struct SvgStyle {
  std::string title;
  std::string x_label = "t (ps)";
  std::string y_label;
};

// Standalone SVG 1.1 line chart, fixed 800x500 viewport, ticks on both
// axes, a legend, and a horizontal reference line at y = -1 labeled
// "classical limit". Byte-deterministic for fixed input. Rejects an
// empty series list and series without points.
std::string emit_svg(const std::vector<SvgSeries>& series, const SvgStyle& style);

}  // namespace lgdot
