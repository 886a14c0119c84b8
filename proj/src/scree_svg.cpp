// Copyright 2026 The pcakit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pcakit/scree_svg.hpp"

#include <algorithm>
#include <cstdio>

#include "pcakit/errors.hpp"

namespace pcakit {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kMarginLeft = 80.0;
constexpr double kMarginRight = 30.0;
constexpr double kMarginTop = 30.0;
constexpr double kMarginBottom = 70.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_scree_svg(const ScreeData& scree) {
  const std::size_t m = scree.eigenvalue.size();
  if (m == 0 || scree.component.size() != m) {
    throw ContractError("render_scree_svg: empty or inconsistent scree data");
  }

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const double x_lo = 0.5;
  const double x_hi = static_cast<double>(m) + 0.5;
  const double y_lo = 0.0;
  double y_hi = scree.kaiser_line;
  for (double v : scree.eigenvalue) y_hi = std::max(y_hi, v);
  y_hi *= 1.08;

  auto sx = [&](double x) {
    return kMarginLeft + (x - x_lo) / (x_hi - x_lo) * plot_w;
  };
  auto sy = [&](double y) {
    return kMarginTop + (y_hi - y) / (y_hi - y_lo) * plot_h;
  };

  std::string svg;
  svg +=
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      "width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
  svg += "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" "
         "fill=\"white\"/>\n";

  // axes
  svg += "  <line x1=\"" + num(kMarginLeft) + "\" y1=\"" + num(sy(y_lo)) +
         "\" x2=\"" + num(kWidth - kMarginRight) + "\" y2=\"" +
         num(sy(y_lo)) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg += "  <line x1=\"" + num(kMarginLeft) + "\" y1=\"" + num(kMarginTop) +
         "\" x2=\"" + num(kMarginLeft) + "\" y2=\"" + num(sy(y_lo)) +
         "\" stroke=\"black\" stroke-width=\"1\"/>\n";

  // x ticks, one per component
  for (std::size_t j = 0; j < m; ++j) {
    const double x = sx(static_cast<double>(scree.component[j]));
    svg += "  <line x1=\"" + num(x) + "\" y1=\"" + num(sy(y_lo)) + "\" x2=\"" +
           num(x) + "\" y2=\"" + num(sy(y_lo) + 6.0) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg += "  <text x=\"" + num(x) + "\" y=\"" + num(sy(y_lo) + 22.0) +
           "\" font-family=\"sans-serif\" font-size=\"13\" "
           "text-anchor=\"middle\">" +
           std::to_string(scree.component[j]) + "</text>\n";
  }

  // y ticks, five even divisions
  for (int t = 0; t <= 5; ++t) {
    const double yv = y_lo + (y_hi - y_lo) * static_cast<double>(t) / 5.0;
    const double y = sy(yv);
    svg += "  <line x1=\"" + num(kMarginLeft - 6.0) + "\" y1=\"" + num(y) +
           "\" x2=\"" + num(kMarginLeft) + "\" y2=\"" + num(y) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg += "  <text x=\"" + num(kMarginLeft - 10.0) + "\" y=\"" +
           num(y + 4.0) +
           "\" font-family=\"sans-serif\" font-size=\"13\" "
           "text-anchor=\"end\">" +
           tick_label(yv) + "</text>\n";
  }

  // Kaiser reference line
  svg += "  <line x1=\"" + num(kMarginLeft) + "\" y1=\"" +
         num(sy(scree.kaiser_line)) + "\" x2=\"" + num(kWidth - kMarginRight) +
         "\" y2=\"" + num(sy(scree.kaiser_line)) +
         "\" stroke=\"#888888\" stroke-width=\"1\" "
         "stroke-dasharray=\"6 4\"/>\n";
  svg += "  <text x=\"" + num(kWidth - kMarginRight - 4.0) + "\" y=\"" +
         num(sy(scree.kaiser_line) - 6.0) +
         "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#888888\" "
         "text-anchor=\"end\">Kaiser</text>\n";

  // eigenvalue polyline and markers
  if (m > 1) {
    std::string points;
    for (std::size_t j = 0; j < m; ++j) {
      if (j > 0) points += ' ';
      points += num(sx(static_cast<double>(scree.component[j]))) + "," +
                num(sy(scree.eigenvalue[j]));
    }
    svg += "  <polyline points=\"" + points +
           "\" fill=\"none\" stroke=\"#1f6fb4\" stroke-width=\"2\"/>\n";
  }
  for (std::size_t j = 0; j < m; ++j) {
    svg += "  <circle cx=\"" + num(sx(static_cast<double>(scree.component[j]))) +
           "\" cy=\"" + num(sy(scree.eigenvalue[j])) +
           "\" r=\"4.5\" fill=\"#1f6fb4\"/>\n";
  }

  // axis labels
  svg += "  <text x=\"" + num(kMarginLeft + plot_w / 2.0) + "\" y=\"" +
         num(kHeight - 20.0) +
         "\" font-family=\"sans-serif\" font-size=\"15\" "
         "text-anchor=\"middle\">component</text>\n";
  svg += "  <text x=\"22.00\" y=\"" + num(kMarginTop + plot_h / 2.0) +
         "\" font-family=\"sans-serif\" font-size=\"15\" "
         "text-anchor=\"middle\" transform=\"rotate(-90 22.00 " +
         num(kMarginTop + plot_h / 2.0) + ")\">eigenvalue</text>\n";

  svg += "</svg>\n";
  return svg;
}

}  // namespace pcakit
