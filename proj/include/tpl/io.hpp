#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tpl {

// Round-trip safe decimal rendering (17 significant digits).
std::string format_double(double v);

// Column-oriented CSV table.  All columns must share one length; the header
// supplies one name per column.
void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns);

// One named series of (x, y) points for plotting.
struct plot_series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

// Self-contained static SVG with a fixed 800 x 600 viewport, axes, tick
// labels, and a legend.  Lines connect the points of each series in order;
// the scatter variant draws point markers instead.
void write_svg_lines(std::ostream& os, const std::vector<plot_series>& series);
void write_svg_scatter(std::ostream& os,
                       const std::vector<plot_series>& series);

}  // namespace tpl
