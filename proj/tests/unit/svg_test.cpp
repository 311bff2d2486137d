#include <doctest.h>

#include <cmath>

#include "lgdot/svg.hpp"
#include "lgdot/errors.hpp"

using namespace lgdot;

namespace {

std::vector<SvgSeries> sample_series() {
  SvgSeries a{"K-", {}};
  SvgSeries b{"K+", {}};
  for (int i = 0; i <= 100; ++i) {
    const double t = 50.0 * i;
    a.points.emplace_back(t, -1.2 + 0.4 * std::cos(t / 400.0));
    b.points.emplace_back(t, 0.5 * std::sin(t / 300.0));
  }
  return {a, b};
}

}  // namespace

TEST_CASE("emit_svg produces a standalone SVG 1.1 document") {
  const std::string svg = emit_svg(sample_series(), {"demo", "t (ps)", "K"});
  CHECK(svg.rfind("<?xml version=\"1.0\"", 0) == 0);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(svg.find("width=\"800\" height=\"500\"") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("classical limit") != std::string::npos);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);  // reference line
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("K-") != std::string::npos);  // legend labels
  CHECK(svg.find("K+") != std::string::npos);
  CHECK(svg.find("<text") != std::string::npos);  // tick labels
  CHECK(svg.find("http://") == svg.find("http://www.w3.org/2000/svg"));  // no external refs
}

TEST_CASE("emit_svg is byte-deterministic") {
  const auto series = sample_series();
  CHECK(emit_svg(series, {"demo", "t", "K"}) == emit_svg(series, {"demo", "t", "K"}));
}

TEST_CASE("emit_svg rejects empty input") {
  CHECK_THROWS_AS(emit_svg({}, {}), InvalidInput);
  CHECK_THROWS_AS(emit_svg({SvgSeries{"empty", {}}}, {}), InvalidInput);
}

TEST_CASE("emit_svg escapes markup in labels") {
  SvgSeries s{"a<b&\"c\"", {{0.0, -1.0}, {1.0, 0.0}}};
  const std::string svg = emit_svg({s}, {"t<0 & more", "x", "y"});
  CHECK(svg.find("a<b") == std::string::npos);
  CHECK(svg.find("a&lt;b&amp;") != std::string::npos);
  CHECK(svg.find("t&lt;0 &amp; more") != std::string::npos);
}
