// Copyright 2026 The qpinn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qpinn/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace qpinn::svg {

namespace {

constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 170.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 55.0;
constexpr int kTicks = 5;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", std::abs(v) < 1e-12 ? 0.0 : v);
    return buf;
}

std::string escape(const std::string &text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&':
                out += "&amp;";
                break;
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '"':
                out += "&quot;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

struct Frame {
    double x0, x1, y0, y1;
    double left, right, top, bottom;

    double px(double x) const { return left + (x - x0) / (x1 - x0) * (right - left); }
    double py(double y) const { return bottom - (y - y0) / (y1 - y0) * (bottom - top); }
};

Frame make_frame(const ChartSpec &spec, double x0, double x1, double y0, double y1) {
    if (!(x1 > x0)) {
        x1 = x0 + 1.0;
    }
    if (!(y1 > y0)) {
        y1 = y0 + 1.0;
    }
    return {x0,
            x1,
            y0,
            y1,
            kMarginLeft,
            spec.width - kMarginRight,
            kMarginTop,
            spec.height - kMarginBottom};
}

void open_document(std::ostringstream &os, const ChartSpec &spec) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\"" << spec.height
       << "\" viewBox=\"0 0 " << spec.width << ' ' << spec.height << "\" font-family=\"sans-serif\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << spec.width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
       << escape(spec.title) << "</text>\n";
}

void draw_axes(std::ostringstream &os, const ChartSpec &spec, const Frame &f, bool x_ticks) {
    os << "<g stroke=\"black\" stroke-width=\"1\">\n";
    os << "<line x1=\"" << num(f.left) << "\" y1=\"" << num(f.bottom) << "\" x2=\"" << num(f.right) << "\" y2=\""
       << num(f.bottom) << "\"/>\n";
    os << "<line x1=\"" << num(f.left) << "\" y1=\"" << num(f.top) << "\" x2=\"" << num(f.left) << "\" y2=\""
       << num(f.bottom) << "\"/>\n";
    os << "</g>\n<g font-size=\"11\">\n";
    for (int k = 0; k <= kTicks; ++k) {
        const double frac = static_cast<double>(k) / kTicks;
        const double yv = f.y0 + frac * (f.y1 - f.y0);
        const double yp = f.py(yv);
        os << "<line x1=\"" << num(f.left - 5) << "\" y1=\"" << num(yp) << "\" x2=\"" << num(f.left)
           << "\" y2=\"" << num(yp) << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << num(f.left - 8) << "\" y=\"" << num(yp + 4) << "\" text-anchor=\"end\">"
           << tick_label(yv) << "</text>\n";
        if (x_ticks) {
            const double xv = f.x0 + frac * (f.x1 - f.x0);
            const double xp = f.px(xv);
            os << "<line x1=\"" << num(xp) << "\" y1=\"" << num(f.bottom) << "\" x2=\"" << num(xp) << "\" y2=\""
               << num(f.bottom + 5) << "\" stroke=\"black\"/>\n";
            os << "<text x=\"" << num(xp) << "\" y=\"" << num(f.bottom + 18) << "\" text-anchor=\"middle\">"
               << tick_label(xv) << "</text>\n";
        }
    }
    os << "</g>\n";
    os << "<text x=\"" << num((f.left + f.right) / 2) << "\" y=\"" << spec.height - 12
       << "\" text-anchor=\"middle\" font-size=\"13\">" << escape(spec.x_label) << "</text>\n";
    os << "<text x=\"16\" y=\"" << num((f.top + f.bottom) / 2) << "\" text-anchor=\"middle\" font-size=\"13\""
       << " transform=\"rotate(-90 16 " << num((f.top + f.bottom) / 2) << ")\">" << escape(spec.y_label)
       << "</text>\n";
}

void legend_entry(std::ostringstream &os, const Frame &f, int index, const std::string &label,
                  const std::string &color, bool dashed) {
    const double y = f.top + 12 + 20.0 * index;
    const double x = f.right + 15;
    os << "<line x1=\"" << num(x) << "\" y1=\"" << num(y) << "\" x2=\"" << num(x + 25) << "\" y2=\"" << num(y)
       << "\" stroke=\"" << color << "\" stroke-width=\"2\"" << (dashed ? " stroke-dasharray=\"6 4\"" : "")
       << "/>\n";
    os << "<text x=\"" << num(x + 32) << "\" y=\"" << num(y + 4) << "\" font-size=\"12\">" << escape(label)
       << "</text>\n";
}

}  // namespace

std::string line_chart(const ChartSpec &spec, std::span<const Series> series) {
    double x0 = std::numeric_limits<double>::infinity();
    double x1 = -x0;
    double y0 = x0;
    double y1 = -x0;
    for (const auto &s : series) {
        for (std::size_t i = 0; i < std::min(s.xs.size(), s.ys.size()); ++i) {
            x0 = std::min(x0, s.xs[i]);
            x1 = std::max(x1, s.xs[i]);
            y0 = std::min(y0, s.ys[i]);
            y1 = std::max(y1, s.ys[i]);
        }
    }
    if (!std::isfinite(x0)) {
        x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
    }
    const double pad = 0.05 * (y1 - y0);
    const Frame f = make_frame(spec, x0, x1, y0 - pad, y1 + pad);

    std::ostringstream os;
    open_document(os, spec);
    draw_axes(os, spec, f, true);
    int index = 0;
    for (const auto &s : series) {
        os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"2\""
           << (s.dashed ? " stroke-dasharray=\"6 4\"" : "") << " points=\"";
        for (std::size_t i = 0; i < std::min(s.xs.size(), s.ys.size()); ++i) {
            os << (i ? " " : "") << num(f.px(s.xs[i])) << ',' << num(f.py(s.ys[i]));
        }
        os << "\"/>\n";
        legend_entry(os, f, index++, s.label, s.color, s.dashed);
    }
    os << "</svg>\n";
    return os.str();
}

std::string bar_chart(const ChartSpec &spec, std::span<const Bar> bars, const std::string &value_legend,
                      const std::string &reference_legend) {
    double top = 0.0;
    for (const auto &b : bars) {
        top = std::max({top, b.value, b.reference});
    }
    const Frame f = make_frame(spec, 0.0, static_cast<double>(std::max<std::size_t>(bars.size(), 1)), 0.0,
                               top > 0.0 ? 1.1 * top : 1.0);

    const std::string bar_color = "#4c72b0";
    const std::string ref_color = "#c44e52";
    std::ostringstream os;
    open_document(os, spec);
    draw_axes(os, spec, f, false);
    for (std::size_t i = 0; i < bars.size(); ++i) {
        const double left = f.px(static_cast<double>(i) + 0.15);
        const double right = f.px(static_cast<double>(i) + 0.85);
        const double yv = f.py(bars[i].value);
        os << "<rect x=\"" << num(left) << "\" y=\"" << num(yv) << "\" width=\"" << num(right - left)
           << "\" height=\"" << num(f.bottom - yv) << "\" fill=\"" << bar_color << "\"/>\n";
        const double yr = f.py(bars[i].reference);
        os << "<line x1=\"" << num(left) << "\" y1=\"" << num(yr) << "\" x2=\"" << num(right) << "\" y2=\""
           << num(yr) << "\" stroke=\"" << ref_color << "\" stroke-width=\"2\" stroke-dasharray=\"6 4\"/>\n";
        os << "<text x=\"" << num((left + right) / 2) << "\" y=\"" << num(f.bottom + 18)
           << "\" text-anchor=\"middle\" font-size=\"12\">" << escape(bars[i].label) << "</text>\n";
    }
    legend_entry(os, f, 0, value_legend, bar_color, false);
    legend_entry(os, f, 1, reference_legend, ref_color, true);
    os << "</svg>\n";
    return os.str();
}

}  // namespace qpinn::svg
