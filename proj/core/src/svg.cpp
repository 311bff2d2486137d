#include "lgdot/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "lgdot/errors.hpp"

namespace lgdot {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kLeft = 70.0, kRight = 20.0, kTop = 40.0, kBottom = 50.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt_px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string fmt_tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// 1-2-5 tick spacing.
std::vector<double> ticks(double lo, double hi, int target) {
  const double span = hi - lo;
  const double raw = span / std::max(1, target);
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double mult : {1.0, 2.0, 5.0, 10.0}) {
    if (mag * mult >= raw) {
      step = mag * mult;
      break;
    }
  }
  std::vector<double> out;
  const double first = std::ceil(lo / step) * step;
  for (double v = first; v <= hi + 0.5 * step; v += step) {
    out.push_back(std::abs(v) < 0.5 * step ? 0.0 : v);
  }
  return out;
}

}  // namespace

std::string emit_svg(const std::vector<SvgSeries>& series, const SvgStyle& style) {
  if (series.empty()) throw InvalidInput("emit_svg: no series given");
  for (const auto& s : series) {
    if (s.points.empty()) {
      throw InvalidInput("emit_svg: series '" + s.label + "' is empty");
    }
  }

  double x_lo = series[0].points[0].first, x_hi = x_lo;
  double y_lo = series[0].points[0].second, y_hi = y_lo;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      x_lo = std::min(x_lo, x); x_hi = std::max(x_hi, x);
      y_lo = std::min(y_lo, y); y_hi = std::max(y_hi, y);
    }
  }
  // Keep the classical limit in view.
  y_lo = std::min(y_lo, -1.1);
  y_hi = std::max(y_hi, -0.9);
  if (x_hi == x_lo) x_hi = x_lo + 1.0;
  const double y_pad = 0.05 * (y_hi - y_lo);
  y_lo -= y_pad;
  y_hi += y_pad;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  auto py = [&](double y) { return kTop + (y_hi - y) / (y_hi - y_lo) * plot_h; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      << "width=\"800\" height=\"500\" viewBox=\"0 0 800 500\">\n"
      << "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n";

  if (!style.title.empty()) {
    svg << "<text x=\"400\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"16\">" << escape(style.title) << "</text>\n";
  }

  // Axes and ticks.
  svg << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << fmt_px(kLeft) << "\" y1=\"" << fmt_px(kTop) << "\" x2=\""
      << fmt_px(kLeft) << "\" y2=\"" << fmt_px(kTop + plot_h) << "\"/>\n"
      << "<line x1=\"" << fmt_px(kLeft) << "\" y1=\"" << fmt_px(kTop + plot_h)
      << "\" x2=\"" << fmt_px(kLeft + plot_w) << "\" y2=\"" << fmt_px(kTop + plot_h)
      << "\"/>\n</g>\n";

  svg << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
  for (double t : ticks(x_lo, x_hi, 8)) {
    const double x = px(t);
    svg << "<line x1=\"" << fmt_px(x) << "\" y1=\"" << fmt_px(kTop + plot_h)
        << "\" x2=\"" << fmt_px(x) << "\" y2=\"" << fmt_px(kTop + plot_h + 5)
        << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << fmt_px(x) << "\" y=\"" << fmt_px(kTop + plot_h + 18)
        << "\" text-anchor=\"middle\">" << fmt_tick(t) << "</text>\n";
  }
  for (double t : ticks(y_lo, y_hi, 8)) {
    const double y = py(t);
    svg << "<line x1=\"" << fmt_px(kLeft - 5) << "\" y1=\"" << fmt_px(y) << "\" x2=\""
        << fmt_px(kLeft) << "\" y2=\"" << fmt_px(y) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << fmt_px(kLeft - 8) << "\" y=\"" << fmt_px(y + 4)
        << "\" text-anchor=\"end\">" << fmt_tick(t) << "</text>\n";
  }
  svg << "<text x=\"" << fmt_px(kLeft + plot_w / 2) << "\" y=\""
      << fmt_px(kHeight - 12) << "\" text-anchor=\"middle\">" << escape(style.x_label)
      << "</text>\n";
  if (!style.y_label.empty()) {
    svg << "<text x=\"16\" y=\"" << fmt_px(kTop + plot_h / 2)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << fmt_px(kTop + plot_h / 2) << ")\">" << escape(style.y_label) << "</text>\n";
  }
  svg << "</g>\n";

  // Classical limit at K = -1.
  const double y_ref = py(-1.0);
  svg << "<line x1=\"" << fmt_px(kLeft) << "\" y1=\"" << fmt_px(y_ref) << "\" x2=\""
      << fmt_px(kLeft + plot_w) << "\" y2=\"" << fmt_px(y_ref)
      << "\" stroke=\"black\" stroke-dasharray=\"6,4\"/>\n"
      << "<text x=\"" << fmt_px(kLeft + plot_w - 4) << "\" y=\"" << fmt_px(y_ref - 5)
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
      << "classical limit</text>\n";

  for (size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    svg << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : series[i].points) {
      svg << fmt_px(px(x)) << "," << fmt_px(py(y)) << " ";
    }
    svg << "\"/>\n";
  }

  // Legend.
  svg << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    const double y = kTop + 8.0 + 16.0 * static_cast<double>(i);
    svg << "<line x1=\"" << fmt_px(kLeft + plot_w - 150) << "\" y1=\"" << fmt_px(y)
        << "\" x2=\"" << fmt_px(kLeft + plot_w - 130) << "\" y2=\"" << fmt_px(y)
        << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << fmt_px(kLeft + plot_w - 124) << "\" y=\"" << fmt_px(y + 4)
        << "\">" << escape(series[i].label) << "</text>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace lgdot
