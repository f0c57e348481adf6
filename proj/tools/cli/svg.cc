// Copyright 2026 The Stylolab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "svg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "stylolab/common/io.h"

namespace stylolab::cli {
namespace {

std::string Num(double v) { return FormatFixed(v, 1); }

std::string Header(double width, double height) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + Num(width) +
         "\" height=\"" + Num(height) + "\" viewBox=\"0 0 " + Num(width) +
         " " + Num(height) + "\" font-family=\"sans-serif\" font-size=\"12\">\n"
         "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

std::string Text(double x, double y, const std::string& s,
                 const std::string& anchor, const std::string& extra = {}) {
  return "<text x=\"" + Num(x) + "\" y=\"" + Num(y) + "\" text-anchor=\"" +
         anchor + "\"" + extra + ">" + XmlEscape(s) + "</text>\n";
}

}  // namespace

std::string XmlEscape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string EffectSizeChart(const std::string& title,
                            const std::vector<EffectBar>& bars) {
  constexpr double kLabel = 190, kPlot = 420, kRow = 20, kTop = 40,
                   kBottom = 40;
  const double width = kLabel + kPlot + 60;
  const double height =
      kTop + kRow * static_cast<double>(std::max<std::size_t>(bars.size(), 1)) +
      kBottom;
  double limit = 0.5;
  for (const EffectBar& b : bars) {
    if (std::isfinite(b.d)) limit = std::max(limit, std::abs(b.d));
  }
  limit = std::ceil(limit * 4) / 4;
  const double mid = kLabel + kPlot / 2;
  const double scale = (kPlot / 2) / limit;

  std::string svg = Header(width, height);
  svg += Text(width / 2, 22, title, "middle", " font-weight=\"bold\"");
  if (bars.empty()) {
    svg += Text(width / 2, kTop + 14, "no comparable features", "middle");
  }
  for (std::size_t i = 0; i < bars.size(); ++i) {
    const EffectBar& b = bars[i];
    const double y = kTop + kRow * static_cast<double>(i);
    svg += Text(kLabel - 6, y + 14, b.label, "end");
    const double d = std::isfinite(b.d) ? b.d : 0;
    const double x0 = d < 0 ? mid + d * scale : mid;
    svg += "<rect x=\"" + Num(x0) + "\" y=\"" + Num(y + 3) + "\" width=\"" +
           Num(std::abs(d) * scale) + "\" height=\"" + Num(kRow - 6) +
           "\" fill=\"" + (b.significant ? "#1f4e79" : "#b0b7c3") + "\"/>\n";
    // The value sits on the side of the axis opposite the bar.
    svg += Text(d < 0 ? mid + 4 : mid - 4, y + 14, FormatFixed(b.d, 2), d < 0 ? "start" : "end",
                " fill=\"#555\" font-size=\"10\"");
  }
  const double axis_y = kTop + kRow * static_cast<double>(
                                          std::max<std::size_t>(bars.size(), 1));
  svg += "<line x1=\"" + Num(mid) + "\" y1=\"" + Num(kTop) + "\" x2=\"" +
         Num(mid) + "\" y2=\"" + Num(axis_y) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + Num(kLabel) + "\" y1=\"" + Num(axis_y) + "\" x2=\"" +
         Num(kLabel + kPlot) + "\" y2=\"" + Num(axis_y) +
         "\" stroke=\"black\"/>\n";
  for (int k = -2; k <= 2; ++k) {
    const double v = limit * k / 2;
    const double x = mid + v * scale;
    svg += "<line x1=\"" + Num(x) + "\" y1=\"" + Num(axis_y) + "\" x2=\"" +
           Num(x) + "\" y2=\"" + Num(axis_y + 4) + "\" stroke=\"black\"/>\n";
    svg += Text(x, axis_y + 16, FormatFixed(v, 2), "middle");
  }
  svg += Text(mid, axis_y + 32, "Cohen's d", "middle");
  svg += "</svg>\n";
  return svg;
}

std::string ConfusionHeatmap(
    const std::string& title, const std::vector<std::string>& classes,
    const std::vector<std::vector<std::size_t>>& counts) {
  constexpr double kLabel = 130, kCell = 70, kTop = 60;
  const double n = static_cast<double>(classes.size());
  const double width = kLabel + kCell * n + 20;
  const double height = kTop + kCell * n + 50;
  std::string svg = Header(width, height);
  svg += Text(width / 2, 22, title, "middle", " font-weight=\"bold\"");
  svg += Text(kLabel + kCell * n / 2, 44, "predicted", "middle");
  for (std::size_t c = 0; c < classes.size(); ++c) {
    svg += Text(kLabel + kCell * (static_cast<double>(c) + 0.5),
                kTop + kCell * n + 18, classes[c], "middle");
  }
  for (std::size_t r = 0; r < classes.size(); ++r) {
    std::size_t total = 0;
    for (std::size_t v : counts[r]) total += v;
    const double y = kTop + kCell * static_cast<double>(r);
    svg += Text(kLabel - 6, y + kCell / 2 + 4, classes[r], "end");
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const double share =
          total ? static_cast<double>(counts[r][c]) / static_cast<double>(total)
                : 0;
      // White to dark blue.
      const int red = static_cast<int>(std::lround(255 - share * (255 - 31)));
      const int green = static_cast<int>(std::lround(255 - share * (255 - 78)));
      const int blue = static_cast<int>(std::lround(255 - share * (255 - 121)));
      char fill[8];
      std::snprintf(fill, sizeof fill, "#%02x%02x%02x", red, green, blue);
      const double x = kLabel + kCell * static_cast<double>(c);
      svg += "<rect x=\"" + Num(x) + "\" y=\"" + Num(y) + "\" width=\"" +
             Num(kCell) + "\" height=\"" + Num(kCell) + "\" fill=\"" + fill +
             "\" stroke=\"white\"/>\n";
      svg += Text(x + kCell / 2, y + kCell / 2 + 4,
                  std::to_string(counts[r][c]), "middle",
                  share > 0.5 ? " fill=\"white\"" : " fill=\"black\"");
    }
  }
  svg += Text(kLabel + kCell * n / 2, height - 10, "true class by row",
              "middle", " fill=\"#555\"");
  svg += "</svg>\n";
  return svg;
}

}  // namespace stylolab::cli
