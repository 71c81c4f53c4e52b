#include "amifmds/render.hpp"

#include <doctest.h>

#include <set>
#include <string>

using namespace amifmds;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

std::set<std::string> fills(const std::string& svg) {
  std::set<std::string> out;
  for (auto pos = svg.find("<circle"); pos != std::string::npos; pos = svg.find("<circle", pos + 1)) {
    const auto f = svg.find("fill=\"", pos);
    out.insert(svg.substr(f + 6, 7));
  }
  return out;
}

}  // namespace

TEST_CASE("16 points in 8 clusters") {
  std::vector<std::string> names;
  std::vector<int> clusters;
  RealMatrix coords(16, 2);
  for (int i = 0; i < 16; ++i) {
    names.push_back("s" + std::to_string(i));
    clusters.push_back(i / 2);
    coords(i, 0) = i;
    coords(i, 1) = (i * 7) % 5;
  }
  const auto svg = render_scatter(names, coords, clusters);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count(svg, "<circle") == 16);
  CHECK(count(svg, "<text") >= 16);
  CHECK(fills(svg).size() == 8);
  CHECK(render_scatter(names, coords, clusters) == svg);
  CHECK(fills(render_scatter(names, coords, {})).size() == 1);
}

TEST_CASE("3-D input and escaping") {
  RealMatrix coords(2, 3);
  coords << 0, 0, 0, 1, 1, 1;
  const auto svg = render_scatter({"a<b", "c&d"}, coords, {0, 0});
  CHECK(svg.find("a&lt;b") != std::string::npos);
  CHECK(svg.find("c&amp;d") != std::string::npos);
  CHECK_THROWS(render_scatter({"a", "b"}, RealMatrix::Zero(2, 4), {}));
}
