#include "hpe/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "hpe/errors.hpp"

namespace hpe {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#8c564b", "#17becf", "#7f7f7f", "#bcbd22", "#e377c2"};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

std::string render_svg_chart(const Table& table, const PlotOptions& opt) {
  const int xi = table.column_index(opt.x_column);
  if (xi < 0) throw ValidationError("x_column", "no column named '" + opt.x_column + "'");

  std::vector<int> ys;
  if (opt.y_columns.empty()) {
    for (std::size_t c = 0; c < table.columns.size(); ++c)
      if (static_cast<int>(c) != xi) ys.push_back(static_cast<int>(c));
  } else {
    for (const auto& name : opt.y_columns) {
      const int c = table.column_index(name);
      if (c < 0) throw ValidationError("y_columns", "no column named '" + name + "'");
      ys.push_back(c);
    }
  }
  if (table.rows.empty()) throw ValidationError("table", "no rows to plot");

  auto yval = [&](double v) {
    return opt.log_y ? std::log10(std::max(std::abs(v), 1e-300)) : v;
  };

  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& r : table.rows) {
    xmin = std::min(xmin, r[xi]);
    xmax = std::max(xmax, r[xi]);
    for (int c : ys) {
      ymin = std::min(ymin, yval(r[c]));
      ymax = std::max(ymax, yval(r[c]));
    }
  }
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) ymax = ymin + 1.0;

  const int W = opt.width, H = opt.height;
  const int ml = 70, mr = 160, mt = opt.title.empty() ? 20 : 44, mb = 46;
  auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (W - ml - mr); };
  auto py = [&](double y) { return H - mb - (y - ymin) / (ymax - ymin) * (H - mt - mb); };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
    << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  s << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  if (!opt.title.empty())
    s << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"monospace\" "
         "font-size=\"15\">" << opt.title << "</text>\n";

  // axes and ticks
  s << "<g stroke=\"#222\" stroke-width=\"1\">";
  s << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr << "\" y2=\"" << H - mb
    << "\"/>";
  s << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << H - mb
    << "\"/></g>\n";
  s << "<g font-family=\"monospace\" font-size=\"11\" fill=\"#222\">\n";
  const int nticks = 5;
  for (int i = 0; i <= nticks; ++i) {
    const double xv = xmin + (xmax - xmin) * i / nticks;
    const double yv = ymin + (ymax - ymin) * i / nticks;
    s << "<text x=\"" << px(xv) << "\" y=\"" << H - mb + 16 << "\" text-anchor=\"middle\">"
      << fmt(xv) << "</text>\n";
    s << "<text x=\"" << ml - 6 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\">"
      << (opt.log_y ? "1e" + fmt(yv) : fmt(yv)) << "</text>\n";
    s << "<line x1=\"" << ml << "\" y1=\"" << py(yv) << "\" x2=\"" << W - mr << "\" y2=\""
      << py(yv) << "\" stroke=\"#ddd\" stroke-width=\"0.5\"/>\n";
  }
  s << "<text x=\"" << (ml + W - mr) / 2 << "\" y=\"" << H - 8
    << "\" text-anchor=\"middle\">" << opt.x_column << "</text>\n";
  s << "</g>\n";

  for (std::size_t c = 0; c < ys.size(); ++c) {
    const char* color = kPalette[c % (sizeof kPalette / sizeof kPalette[0])];
    s << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& r : table.rows) s << fmt(px(r[xi])) << ',' << fmt(py(yval(r[ys[c]]))) << ' ';
    s << "\"/>\n";
    const int ly = mt + 16 + static_cast<int>(c) * 16;
    s << "<line x1=\"" << W - mr + 10 << "\" y1=\"" << ly - 4 << "\" x2=\"" << W - mr + 30
      << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    s << "<text x=\"" << W - mr + 36 << "\" y=\"" << ly << "\" font-family=\"monospace\" "
         "font-size=\"11\">" << table.columns[ys[c]] << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

void write_svg_chart(const Table& table, const PlotOptions& opt, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << render_svg_chart(table, opt);
  if (!out) throw Error("write failed for '" + path + "'");
}

}  // namespace hpe
