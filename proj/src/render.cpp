#include "amifmds/render.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace amifmds {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 540.0;
constexpr double kMargin = 60.0;
constexpr double kBaseRadius = 6.0;

constexpr std::array<const char*, 20> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2",
    "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78", "#98df8a", "#ff9896",
    "#c5b0d5", "#c49c94", "#f7b6d2", "#c7c7c7", "#dbdb8d", "#9edae5",
};
constexpr const char* kNoiseColor = "#000000";

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

struct Range {
  double lo = 0.0;
  double hi = 0.0;

  // Maps into [0, 1]; a flat range maps to the middle.
  double unit(double v) const { return hi > lo ? (v - lo) / (hi - lo) : 0.5; }
};

Range range_of(const RealMatrix& coords, Eigen::Index c) {
  return {coords.col(c).minCoeff(), coords.col(c).maxCoeff()};
}

}  // namespace

std::string render_scatter(const std::vector<std::string>& names, const RealMatrix& coords,
                           const std::vector<int>& clusters) {
  const Eigen::Index d = coords.cols();
  if (d < 2 || d > 3) throw std::invalid_argument("render_scatter: embedding dimension must be 2 or 3, got " + std::to_string(d));
  if (static_cast<Eigen::Index>(names.size()) != coords.rows()) throw std::invalid_argument("render_scatter: name count mismatch");
  if (!clusters.empty() && static_cast<Eigen::Index>(clusters.size()) != coords.rows()) {
    throw std::invalid_argument("render_scatter: cluster count mismatch");
  }
  if (coords.rows() == 0) throw std::invalid_argument("render_scatter: empty embedding");

  const Range rx = range_of(coords, 0);
  const Range ry = range_of(coords, 1);
  const Range rz = d == 3 ? range_of(coords, 2) : Range{};

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(kWidth) + "\" height=\"" + fixed(kHeight) +
         "\" viewBox=\"0 0 " + fixed(kWidth) + " " + fixed(kHeight) + "\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + fixed(kWidth) + "\" height=\"" + fixed(kHeight) + "\" fill=\"#ffffff\"/>\n";
  svg += "<rect x=\"" + fixed(kMargin) + "\" y=\"" + fixed(kMargin) + "\" width=\"" + fixed(kWidth - 2 * kMargin) +
         "\" height=\"" + fixed(kHeight - 2 * kMargin) + "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
  svg += "<text x=\"" + fixed(kWidth / 2) + "\" y=\"" + fixed(kHeight - 20) +
         "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">dim1</text>\n";
  svg += "<text x=\"20\" y=\"" + fixed(kHeight / 2) + "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" "
         "transform=\"rotate(-90 20 " + fixed(kHeight / 2) + ")\">dim2</text>\n";

  for (Eigen::Index i = 0; i < coords.rows(); ++i) {
    const double x = kMargin + rx.unit(coords(i, 0)) * (kWidth - 2 * kMargin);
    const double y = kHeight - kMargin - ry.unit(coords(i, 1)) * (kHeight - 2 * kMargin);
    const double r = d == 3 ? kBaseRadius * (0.5 + rz.unit(coords(i, 2))) : kBaseRadius;
    const char* color = kPalette[0];
    if (!clusters.empty()) {
      const int c = clusters[static_cast<std::size_t>(i)];
      color = c < 0 ? kNoiseColor : kPalette[static_cast<std::size_t>(c) % kPalette.size()];
    }
    svg += "<circle cx=\"" + fixed(x) + "\" cy=\"" + fixed(y) + "\" r=\"" + fixed(r) + "\" fill=\"" + color +
           "\" fill-opacity=\"0.8\" stroke=\"#333333\"/>\n";
    svg += "<text x=\"" + fixed(x + r + 2) + "\" y=\"" + fixed(y - r - 2) +
           "\" font-family=\"sans-serif\" font-size=\"10\">" + escape_xml(names[static_cast<std::size_t>(i)]) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace amifmds
