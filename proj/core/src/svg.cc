// Copyright 2026 The ssbm Authors.
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
#include <limits>
#include <sstream>

namespace ssbm::internal {
namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 420;
constexpr double kLeft = 70;
constexpr double kRight = 170;
constexpr double kTop = 40;
constexpr double kBottom = 60;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finish() {
    if (!std::isfinite(lo)) {
      lo = 0.0;
      hi = 1.0;
    }
    if (hi - lo < 1e-12) {
      lo -= 0.5;
      hi += 0.5;
    }
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;
  }
};

class Canvas {
 public:
  Canvas(const PlotLabels& labels, Range x, Range y) : x_(x), y_(y) {
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
         << "\" height=\"" << kHeight << "\" font-family=\"sans-serif\" "
         << "font-size=\"12\">\n"
         << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
         << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" "
         << "font-size=\"14\">" << escape(labels.title) << "</text>\n"
         << "<text x=\"" << kLeft + plot_width() / 2 << "\" y=\""
         << kHeight - 15 << "\" text-anchor=\"middle\">" << escape(labels.x)
         << "</text>\n"
         << "<text transform=\"translate(18," << kTop + plot_height() / 2
         << ") rotate(-90)\" text-anchor=\"middle\">" << escape(labels.y)
         << "</text>\n"
         << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\""
         << plot_width() << "\" height=\"" << plot_height()
         << "\" fill=\"none\" stroke=\"black\"/>\n";
  }

  static double plot_width() { return kWidth - kLeft - kRight; }
  static double plot_height() { return kHeight - kTop - kBottom; }

  double px(double x) const {
    return kLeft + (x - x_.lo) / (x_.hi - x_.lo) * plot_width();
  }
  double py(double y) const {
    return kTop + (y_.hi - y) / (y_.hi - y_.lo) * plot_height();
  }

  void y_ticks() {
    for (int k = 0; k <= 4; ++k) {
      const double v = y_.lo + (y_.hi - y_.lo) * k / 4.0;
      out_ << "<text x=\"" << kLeft - 6 << "\" y=\"" << py(v) + 4
           << "\" text-anchor=\"end\">" << fmt(v) << "</text>\n";
    }
  }
  void x_ticks() {
    for (int k = 0; k <= 4; ++k) {
      const double v = x_.lo + (x_.hi - x_.lo) * k / 4.0;
      out_ << "<text x=\"" << px(v) << "\" y=\"" << kTop + plot_height() + 16
           << "\" text-anchor=\"middle\">" << fmt(v) << "</text>\n";
    }
  }
  void legend(int slot, const std::string& label, const char* colour,
              bool dashed) {
    const double y = kTop + 12 + 18 * slot;
    const double x = kWidth - kRight + 10;
    out_ << "<line x1=\"" << x << "\" y1=\"" << y << "\" x2=\"" << x + 20
         << "\" y2=\"" << y << "\" stroke=\"" << colour << "\" stroke-width=\"2\""
         << (dashed ? " stroke-dasharray=\"5,3\"" : "") << "/>\n"
         << "<text x=\"" << x + 26 << "\" y=\"" << y + 4 << "\">"
         << escape(label) << "</text>\n";
  }

  std::ostringstream& out() { return out_; }
  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  Range x_;
  Range y_;
  std::ostringstream out_;
};

}  // namespace

std::string line_plot(const PlotLabels& labels,
                      std::span<const Series> series) {
  Range xr, yr;
  for (const Series& s : series) {
    for (std::size_t k = 0; k < s.xs.size() && k < s.ys.size(); ++k) {
      if (!std::isfinite(s.xs[k]) || !std::isfinite(s.ys[k])) continue;
      xr.add(s.xs[k]);
      yr.add(s.ys[k]);
    }
  }
  xr.finish();
  yr.finish();
  Canvas canvas(labels, xr, yr);
  canvas.x_ticks();
  canvas.y_ticks();
  int slot = 0;
  for (const Series& s : series) {
    const char* colour = kPalette[slot % std::size(kPalette)];
    std::string points;
    for (std::size_t k = 0; k < s.xs.size() && k < s.ys.size(); ++k) {
      if (!std::isfinite(s.xs[k]) || !std::isfinite(s.ys[k])) continue;
      points += fmt(canvas.px(s.xs[k])) + "," + fmt(canvas.py(s.ys[k])) + " ";
    }
    canvas.out() << "<polyline fill=\"none\" stroke=\"" << colour
                 << "\" stroke-width=\"2\""
                 << (s.dashed ? " stroke-dasharray=\"5,3\"" : "")
                 << " points=\"" << points << "\"/>\n";
    canvas.legend(slot, s.label, colour, s.dashed);
    ++slot;
  }
  return canvas.finish();
}

std::string box_plot(const PlotLabels& labels, std::span<const Box> boxes) {
  Range xr, yr;
  xr.lo = 0.0;
  xr.hi = static_cast<double>(std::max<std::size_t>(boxes.size(), 1));
  for (const Box& b : boxes) {
    yr.add(b.stats.min);
    yr.add(b.stats.max);
  }
  yr.finish();
  Canvas canvas(labels, xr, yr);
  canvas.y_ticks();
  const double slot_width = Canvas::plot_width() / xr.hi;
  int slot = 0;
  for (const Box& b : boxes) {
    const char* colour = kPalette[slot % std::size(kPalette)];
    const double centre = canvas.px(slot + 0.5);
    const double half = 0.3 * slot_width;
    const Stats& s = b.stats;
    auto& out = canvas.out();
    out << "<line x1=\"" << centre << "\" y1=\"" << canvas.py(s.min)
        << "\" x2=\"" << centre << "\" y2=\"" << canvas.py(s.max)
        << "\" stroke=\"black\"/>\n"
        << "<rect x=\"" << centre - half << "\" y=\"" << canvas.py(s.q3)
        << "\" width=\"" << 2 * half << "\" height=\""
        << std::max(canvas.py(s.q1) - canvas.py(s.q3), 1.0) << "\" fill=\""
        << colour << "\" fill-opacity=\"0.5\" stroke=\"black\"/>\n"
        << "<line x1=\"" << centre - half << "\" y1=\"" << canvas.py(s.median)
        << "\" x2=\"" << centre + half << "\" y2=\"" << canvas.py(s.median)
        << "\" stroke=\"black\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << centre << "\" y=\""
        << kTop + Canvas::plot_height() + 16 << "\" text-anchor=\"middle\">"
        << escape(b.label) << "</text>\n";
    ++slot;
  }
  return canvas.finish();
}

std::string heatmap(const PlotLabels& labels, std::span<const double> xs,
                    std::span<const double> ys,
                    const std::vector<std::vector<double>>& values) {
  Range xr, yr, vr;
  xr.lo = 0.0;
  xr.hi = static_cast<double>(std::max<std::size_t>(xs.size(), 1));
  yr.lo = 0.0;
  yr.hi = static_cast<double>(std::max<std::size_t>(ys.size(), 1));
  for (const auto& row : values) {
    for (double v : row) vr.add(v);
  }
  if (!std::isfinite(vr.lo)) {
    vr.lo = 0.0;
    vr.hi = 1.0;
  }
  const double span = std::max(vr.hi - vr.lo, 1e-12);
  Canvas canvas(labels, xr, yr);
  auto& out = canvas.out();
  const double w = Canvas::plot_width() / xr.hi;
  const double h = Canvas::plot_height() / yr.hi;
  for (std::size_t r = 0; r < ys.size() && r < values.size(); ++r) {
    for (std::size_t c = 0; c < xs.size() && c < values[r].size(); ++c) {
      const double v = values[r][c];
      if (!std::isfinite(v)) continue;
      const int level = static_cast<int>(std::lround(255 * (v - vr.lo) / span));
      out << "<rect x=\"" << canvas.px(static_cast<double>(c)) << "\" y=\""
          << canvas.py(static_cast<double>(r + 1)) << "\" width=\"" << w
          << "\" height=\"" << h << "\" fill=\"rgb(" << 255 - level << ","
          << 255 - level / 2 << ",255)\"><title>" << fmt(v)
          << "</title></rect>\n";
    }
  }
  for (std::size_t c = 0; c < xs.size(); ++c) {
    out << "<text x=\"" << canvas.px(c + 0.5) << "\" y=\""
        << kTop + Canvas::plot_height() + 16 << "\" text-anchor=\"middle\">"
        << fmt(xs[c]) << "</text>\n";
  }
  for (std::size_t r = 0; r < ys.size(); ++r) {
    out << "<text x=\"" << kLeft - 6 << "\" y=\"" << canvas.py(r + 0.5) + 4
        << "\" text-anchor=\"end\">" << fmt(ys[r]) << "</text>\n";
  }
  out << "<text x=\"" << kWidth - kRight + 10 << "\" y=\"" << kTop + 12
      << "\">range " << fmt(vr.lo) << " to " << fmt(vr.hi) << "</text>\n";
  return canvas.finish();
}

}  // namespace ssbm::internal
