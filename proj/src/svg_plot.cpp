/* Copyright 2026 The Qtrack Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "qtrack/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "qtrack/record_io.hpp"

namespace qtrack {

namespace {

constexpr int kMaxPolylinePoints = 4000;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// "Nice" tick spacing covering [lo, hi] with about n intervals.
double tick_step(double lo, double hi, int n) {
  const double raw = (hi - lo) / std::max(1, n);
  if (!(raw > 0.0)) return 1.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double norm = raw / mag;
  double step = 10.0;
  if (norm <= 1.5) step = 1.0;
  else if (norm <= 3.0) step = 2.0;
  else if (norm <= 7.0) step = 5.0;
  return step * mag;
}

std::size_t stride_for(std::size_t n) { return std::max<std::size_t>(1, n / kMaxPolylinePoints); }

void polyline(std::ostringstream& os, const std::vector<std::pair<double, double>>& pts,
              const std::string& color, double width) {
  os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << width
     << "\" points=\"";
  for (const auto& [x, y] : pts) os << fmt(x) << ',' << fmt(y) << ' ';
  os << "\"/>\n";
}

struct Panel {
  double px, py, pw, ph;  // pixel rect
  double x_lo, x_hi, y_lo, y_hi;

  double sx(double x) const { return px + (x - x_lo) / (x_hi - x_lo) * pw; }
  double sy(double y) const { return py + ph - (y - y_lo) / (y_hi - y_lo) * ph; }

  void frame(std::ostringstream& os, const std::string& x_label,
             const std::string& y_label) const {
    os << "<rect x=\"" << fmt(px) << "\" y=\"" << fmt(py) << "\" width=\"" << fmt(pw)
       << "\" height=\"" << fmt(ph) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    const double xs = tick_step(x_lo, x_hi, 6);
    for (double x = std::ceil(x_lo / xs) * xs; x <= x_hi + 1e-12; x += xs) {
      os << "<line x1=\"" << fmt(sx(x)) << "\" y1=\"" << fmt(py + ph) << "\" x2=\"" << fmt(sx(x))
         << "\" y2=\"" << fmt(py + ph + 4) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
      os << "<text x=\"" << fmt(sx(x)) << "\" y=\"" << fmt(py + ph + 16)
         << "\" font-size=\"11\" text-anchor=\"middle\">" << fmt(x) << "</text>\n";
    }
    const double ys = tick_step(y_lo, y_hi, 4);
    for (double y = std::ceil(y_lo / ys) * ys; y <= y_hi + 1e-12; y += ys) {
      os << "<line x1=\"" << fmt(px - 4) << "\" y1=\"" << fmt(sy(y)) << "\" x2=\"" << fmt(px)
         << "\" y2=\"" << fmt(sy(y)) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
      os << "<text x=\"" << fmt(px - 7) << "\" y=\"" << fmt(sy(y) + 4)
         << "\" font-size=\"11\" text-anchor=\"end\">" << fmt(y) << "</text>\n";
    }
    os << "<text x=\"" << fmt(px + pw / 2) << "\" y=\"" << fmt(py + ph + 32)
       << "\" font-size=\"12\" text-anchor=\"middle\">" << x_label << "</text>\n";
    os << "<text x=\"" << fmt(px - 48) << "\" y=\"" << fmt(py + ph / 2)
       << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 " << fmt(px - 48)
       << ' ' << fmt(py + ph / 2) << ")\">" << y_label << "</text>\n";
  }
};

}  // namespace

void write_fields_svg(const std::string& path, const SimulationRecord& record,
                      const std::string& title) {
  const int width = 760, panel_h = 170, margin = 70, gap = 50;
  const int height = margin + 3 * panel_h + 2 * gap + 60;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << width / 2 << "\" y=\"24\" font-size=\"15\" text-anchor=\"middle\">"
     << title << "</text>\n";

  const auto& rows = record.rows;
  const double t_lo = rows.empty() ? 0.0 : rows.front().t;
  const double t_hi = rows.empty() ? 1.0 : rows.back().t;

  const std::function<double(const StepRecord&)> getters[3] = {
      [](const StepRecord& r) { return r.eps_x; },
      [](const StepRecord& r) { return r.eps_y; },
      [](const StepRecord& r) { return r.eps_z; },
  };
  const char* labels[3] = {"eps_x [b/mu]", "eps_y [b/mu]", "eps_z [b/mu]"};
  const char* colors[3] = {"#c0392b", "#27ae60", "#2980b9"};

  for (int p = 0; p < 3; ++p) {
    double lo = 0.0, hi = 0.0;
    for (const StepRecord& r : rows) {
      lo = std::min(lo, getters[p](r));
      hi = std::max(hi, getters[p](r));
    }
    if (hi - lo < 1e-12) {
      lo -= 1.0;
      hi += 1.0;
    }
    const double pad = 0.05 * (hi - lo);
    Panel panel{static_cast<double>(margin), static_cast<double>(margin + p * (panel_h + gap)),
                static_cast<double>(width - margin - 30), static_cast<double>(panel_h),
                t_lo, t_hi, lo - pad, hi + pad};
    panel.frame(os, p == 2 ? "tau = b t" : "", labels[p]);

    std::vector<std::pair<double, double>> pts;
    const std::size_t stride = stride_for(rows.size());
    for (std::size_t i = 0; i < rows.size(); i += stride) {
      pts.emplace_back(panel.sx(rows[i].t), panel.sy(getters[p](rows[i])));
    }
    if (!rows.empty() && (rows.size() - 1) % stride != 0) {
      pts.emplace_back(panel.sx(rows.back().t), panel.sy(getters[p](rows.back())));
    }
    polyline(os, pts, colors[p], 1.0);
  }

  os << "</svg>\n";
  write_file_atomic(path, os.str());
}

void write_orbit_svg(const std::string& path, const SimulationRecord& record,
                     const std::string& title) {
  const int size = 640;
  const double cx = size / 2.0, cy = size / 2.0;
  const double scale = size * 0.36;

  // Fixed orthographic camera.
  const double az = 0.6, el = 0.38;
  const double ca = std::cos(az), sa = std::sin(az);
  const double ce = std::cos(el), se = std::sin(el);
  const auto project = [&](double x, double y, double z) {
    const double u = -x * sa + y * ca;
    const double v = -(x * ca + y * sa) * se + z * ce;
    return std::pair<double, double>(cx + scale * u, cy - scale * v);
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << cx << "\" y=\"24\" font-size=\"15\" text-anchor=\"middle\">" << title
     << "</text>\n";

  // Unit-sphere silhouette and equator.
  os << "<circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\"" << fmt(scale)
     << "\" fill=\"none\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  {
    std::vector<std::pair<double, double>> eq;
    for (int i = 0; i <= 128; ++i) {
      const double phi = 2.0 * 3.14159265358979323846 * i / 128;
      eq.push_back(project(std::cos(phi), std::sin(phi), 0.0));
    }
    polyline(os, eq, "#cccccc", 0.8);
  }
  // Axes.
  const char* axis_names[3] = {"X", "Y", "Z"};
  const double axes[3][3] = {{1.15, 0, 0}, {0, 1.15, 0}, {0, 0, 1.15}};
  for (int a = 0; a < 3; ++a) {
    const auto [x1, y1] = project(0, 0, 0);
    const auto [x2, y2] = project(axes[a][0], axes[a][1], axes[a][2]);
    os << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2) << "\" y2=\""
       << fmt(y2) << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    os << "<text x=\"" << fmt(x2) << "\" y=\"" << fmt(y2 - 4) << "\" font-size=\"12\">"
       << axis_names[a] << "</text>\n";
  }

  const auto& rows = record.rows;
  const std::size_t stride = stride_for(rows.size());
  std::vector<std::pair<double, double>> designated, achieved;
  for (std::size_t i = 0; i < rows.size(); i += stride) {
    designated.push_back(project(rows[i].x_d, rows[i].y_d, rows[i].z_d));
    achieved.push_back(project(rows[i].x, rows[i].y, rows[i].z));
  }
  polyline(os, designated, "black", 1.6);
  polyline(os, achieved, "#e67e22", 1.0);

  os << "<text x=\"20\" y=\"" << size - 34
     << "\" font-size=\"12\" fill=\"black\">designated track</text>\n";
  os << "<text x=\"20\" y=\"" << size - 18
     << "\" font-size=\"12\" fill=\"#e67e22\">achieved expectation</text>\n";
  os << "</svg>\n";
  write_file_atomic(path, os.str());
}

}  // namespace qtrack
