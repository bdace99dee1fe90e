#include "tpl/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace tpl {

namespace {

struct axis_range {
  double lo = 0.0;
  double hi = 1.0;
};

axis_range span(const std::vector<plot_series>& series, bool vertical) {
  axis_range r;
  bool seen = false;
  for (const plot_series& s : series) {
    const std::vector<double>& v = vertical ? s.y : s.x;
    for (double x : v) {
      if (!std::isfinite(x)) continue;
      if (!seen) {
        r.lo = r.hi = x;
        seen = true;
      } else {
        r.lo = std::min(r.lo, x);
        r.hi = std::max(r.hi, x);
      }
    }
  }
  if (!seen) return r;
  if (r.lo == r.hi) {
    r.lo -= 0.5;
    r.hi += 0.5;
  }
  return r;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

constexpr double width = 800.0, height = 600.0;
constexpr double left = 70.0, right = 780.0, top = 20.0, bottom = 560.0;

double map_x(double v, const axis_range& r) {
  return left + (v - r.lo) / (r.hi - r.lo) * (right - left);
}

double map_y(double v, const axis_range& r) {
  return bottom - (v - r.lo) / (r.hi - r.lo) * (bottom - top);
}

const char* const palette[4] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

void open_svg(std::ostream& os, const axis_range& xr, const axis_range& yr,
              const std::vector<plot_series>& series) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
     << height << "\">\n";
  os << "<rect width=\"" << width << "\" height=\"" << height
     << "\" fill=\"white\"/>\n";

  os << "<line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << right
     << "\" y2=\"" << bottom << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left
     << "\" y2=\"" << bottom << "\" stroke=\"black\"/>\n";

  for (int i = 0; i <= 4; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / 4.0;
    const double fy = yr.lo + (yr.hi - yr.lo) * i / 4.0;
    const double px = map_x(fx, xr);
    const double py = map_y(fy, yr);
    os << "<line x1=\"" << px << "\" y1=\"" << bottom << "\" x2=\"" << px
       << "\" y2=\"" << bottom + 5 << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << px << "\" y=\"" << bottom + 20
       << "\" font-family=\"sans-serif\" font-size=\"12\" "
          "text-anchor=\"middle\">"
       << tick_label(fx) << "</text>\n";
    os << "<line x1=\"" << left - 5 << "\" y1=\"" << py << "\" x2=\"" << left
       << "\" y2=\"" << py << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << left - 8 << "\" y=\"" << py + 4
       << "\" font-family=\"sans-serif\" font-size=\"12\" "
          "text-anchor=\"end\">"
       << tick_label(fy) << "</text>\n";
  }

  for (std::size_t i = 0; i < series.size(); ++i) {
    if (series[i].label.empty()) continue;
    const double ly = top + 16.0 + 18.0 * static_cast<double>(i);
    os << "<rect x=\"" << right - 150 << "\" y=\"" << ly - 10
       << "\" width=\"12\" height=\"12\" fill=\"" << palette[i % 4]
       << "\"/>\n";
    os << "<text x=\"" << right - 132 << "\" y=\"" << ly
       << "\" font-family=\"sans-serif\" font-size=\"12\">" << series[i].label
       << "</text>\n";
  }
}

void check_series(const std::vector<plot_series>& series) {
  for (const plot_series& s : series) {
    if (s.x.size() != s.y.size())
      throw std::invalid_argument("plot series has mismatched x and y sizes");
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns) {
  if (header.size() != columns.size())
    throw std::invalid_argument("csv header and column counts differ");
  for (std::size_t j = 0; j < header.size(); ++j) {
    if (j) os << ',';
    os << header[j];
  }
  os << '\n';
  if (columns.empty()) return;
  const std::size_t rows = columns.front().size();
  for (const auto& col : columns) {
    if (col.size() != rows)
      throw std::invalid_argument("csv columns have unequal lengths");
  }
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (j) os << ',';
      os << format_double(columns[j][i]);
    }
    os << '\n';
  }
}

void write_svg_lines(std::ostream& os,
                     const std::vector<plot_series>& series) {
  check_series(series);
  const axis_range xr = span(series, false);
  const axis_range yr = span(series, true);
  open_svg(os, xr, yr, series);
  for (std::size_t i = 0; i < series.size(); ++i) {
    const plot_series& s = series[i];
    if (s.x.empty()) continue;
    os << "<polyline fill=\"none\" stroke=\"" << palette[i % 4]
       << "\" stroke-width=\"1\" points=\"";
    for (std::size_t j = 0; j < s.x.size(); ++j) {
      if (j) os << ' ';
      os << map_x(s.x[j], xr) << ',' << map_y(s.y[j], yr);
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
}

void write_svg_scatter(std::ostream& os,
                       const std::vector<plot_series>& series) {
  check_series(series);
  const axis_range xr = span(series, false);
  const axis_range yr = span(series, true);
  open_svg(os, xr, yr, series);
  for (std::size_t i = 0; i < series.size(); ++i) {
    const plot_series& s = series[i];
    for (std::size_t j = 0; j < s.x.size(); ++j) {
      os << "<circle cx=\"" << map_x(s.x[j], xr) << "\" cy=\""
         << map_y(s.y[j], yr) << "\" r=\"2\" fill=\"" << palette[i % 4]
         << "\" fill-opacity=\"0.6\"/>\n";
    }
  }
  os << "</svg>\n";
}

}  // namespace tpl
