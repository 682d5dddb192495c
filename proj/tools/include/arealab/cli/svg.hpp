#pragma once

#include <string>
#include <utility>
#include <vector>

namespace arealab::cli {

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

struct ChartSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = true;
};

/// Standalone SVG 1.1 line chart, one polyline per series. Points with a
/// non-finite coordinate (or x <= 0 on a log axis) are dropped.
std::string render_line_chart(const ChartSpec& spec, const std::vector<Series>& series);

}  // namespace arealab::cli
