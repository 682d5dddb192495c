#include "arealab/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace arealab::cli {

namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 440;
constexpr double kLeft = 80;
constexpr double kRight = 200;
constexpr double kTop = 40;
constexpr double kBottom = 60;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
                                    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939"};

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string render_line_chart(const ChartSpec& spec, const std::vector<Series>& series) {
  std::vector<std::vector<std::pair<double, double>>> kept;
  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo;
  for (const auto& s : series) {
    auto& pts = kept.emplace_back();
    for (auto [x, y] : s.points) {
      if (spec.log_x) {
        if (!(x > 0)) continue;
        x = std::log10(x);
      }
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      pts.emplace_back(x, y);
      x_lo = std::min(x_lo, x);
      x_hi = std::max(x_hi, x);
      y_lo = std::min(y_lo, y);
      y_hi = std::max(y_hi, y);
    }
  }
  if (!(x_lo <= x_hi)) x_lo = 0, x_hi = 1;
  if (!(y_lo <= y_hi)) y_lo = 0, y_hi = 1;
  if (x_hi == x_lo) x_lo -= 0.5, x_hi += 0.5;
  if (y_hi == y_lo) {
    const double pad = std::max(1e-12, std::fabs(y_lo) * 0.05);
    y_lo -= pad, y_hi += pad;
  } else {
    const double pad = (y_hi - y_lo) * 0.05;
    y_lo -= pad, y_hi += pad;
  }

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  auto py = [&](double y) { return kTop + (y_hi - y) / (y_hi - y_lo) * plot_h; };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"yes\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt("%.0f", kWidth) +
         "\" height=\"" + fmt("%.0f", kHeight) + "\" viewBox=\"0 0 " + fmt("%.0f", kWidth) + " " +
         fmt("%.0f", kHeight) + "\">\n";
  out += "  <title>" + escape(spec.title) + "</title>\n";
  out += "  <rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "  <text x=\"" + fmt("%.1f", kLeft) + "\" y=\"24\" font-family=\"sans-serif\" font-size=\"15\">" +
         escape(spec.title) + "</text>\n";

  // Axes and ticks.
  out += "  <g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  out += "    <line x1=\"" + fmt("%.1f", kLeft) + "\" y1=\"" + fmt("%.1f", kTop + plot_h) + "\" x2=\"" +
         fmt("%.1f", kLeft + plot_w) + "\" y2=\"" + fmt("%.1f", kTop + plot_h) + "\"/>\n";
  out += "    <line x1=\"" + fmt("%.1f", kLeft) + "\" y1=\"" + fmt("%.1f", kTop) + "\" x2=\"" + fmt("%.1f", kLeft) +
         "\" y2=\"" + fmt("%.1f", kTop + plot_h) + "\"/>\n";
  out += "  </g>\n";
  out += "  <g font-family=\"sans-serif\" font-size=\"11\">\n";
  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double xv = x_lo + (x_hi - x_lo) * i / kTicks;
    const double yv = y_lo + (y_hi - y_lo) * i / kTicks;
    const std::string xt = spec.log_x ? "1e" + fmt("%.2g", xv) : fmt("%.4g", xv);
    out += "    <text x=\"" + fmt("%.1f", px(xv)) + "\" y=\"" + fmt("%.1f", kTop + plot_h + 16) +
           "\" text-anchor=\"middle\">" + xt + "</text>\n";
    out += "    <text x=\"" + fmt("%.1f", kLeft - 6) + "\" y=\"" + fmt("%.1f", py(yv) + 4) +
           "\" text-anchor=\"end\">" + fmt("%.4g", yv) + "</text>\n";
  }
  out += "    <text x=\"" + fmt("%.1f", kLeft + plot_w / 2) + "\" y=\"" + fmt("%.1f", kHeight - 16) +
         "\" text-anchor=\"middle\">" + escape(spec.x_label) + "</text>\n";
  out += "    <text x=\"16\" y=\"" + fmt("%.1f", kTop + plot_h / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         fmt("%.1f", kTop + plot_h / 2) + ")\">" + escape(spec.y_label) + "</text>\n";
  out += "  </g>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* colour = kPalette[s % std::size(kPalette)];
    std::string pts;
    for (const auto& [x, y] : kept[s]) {
      if (!pts.empty()) pts += ' ';
      pts += fmt("%.2f", px(x)) + "," + fmt("%.2f", py(y));
    }
    out += "  <polyline fill=\"none\" stroke=\"" + std::string(colour) + "\" stroke-width=\"1.5\" points=\"" + pts +
           "\"><title>" + escape(series[s].label) + "</title></polyline>\n";
    const double ly = kTop + 14.0 * static_cast<double>(s);
    out += "  <line x1=\"" + fmt("%.1f", kWidth - kRight + 12) + "\" y1=\"" + fmt("%.1f", ly) + "\" x2=\"" +
           fmt("%.1f", kWidth - kRight + 30) + "\" y2=\"" + fmt("%.1f", ly) + "\" stroke=\"" + colour +
           "\" stroke-width=\"2\"/>\n";
    out += "  <text x=\"" + fmt("%.1f", kWidth - kRight + 34) + "\" y=\"" + fmt("%.1f", ly + 4) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + escape(series[s].label) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace arealab::cli
