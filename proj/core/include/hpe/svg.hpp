#pragma once

#include <string>
#include <vector>

#include "hpe/timeseries.hpp"

namespace hpe {

struct PlotOptions {
  std::string x_column = "t";
  std::vector<std::string> y_columns;  // empty = all except x
  int width = 900;
  int height = 540;
  bool log_y = false;
  std::string title;
};

/// Renders the selected columns of a table as an SVG line chart.
std::string render_svg_chart(const Table& table, const PlotOptions& opt);

void write_svg_chart(const Table& table, const PlotOptions& opt, const std::string& path);

}  // namespace hpe
