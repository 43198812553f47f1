#include "hpe/timeseries.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hpe/errors.hpp"

namespace hpe {

namespace {

std::string header_line(const std::vector<std::string>& cols) {
  std::string s;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) s += ',';
    s += cols[i];
  }
  return s;
}

void append_row(std::ofstream& out, const std::vector<double>& row) {
  char buf[40];
  std::string line;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) line += ',';
    std::snprintf(buf, sizeof buf, "%.17g", row[i]);
    line += buf;
  }
  out << line << '\n';
}

}  // namespace

void write_timeseries(const std::vector<DiagnosticsRecord>& records, const std::string& path) {
  const std::string header = header_line(DiagnosticsRecord::column_names());
  bool need_header = true;
  if (std::filesystem::exists(path) && std::filesystem::file_size(path) > 0) {
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    if (first != header)
      throw HeaderMismatch("existing timeseries '" + path + "' has a different header");
    need_header = false;
  }
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  if (need_header) out << header << '\n';
  for (const auto& r : records) append_row(out, r.row());
  if (!out) throw Error("write failed for '" + path + "'");
}

int Table::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return static_cast<int>(i);
  return -1;
}

Table read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  Table t;
  std::string line;
  if (!std::getline(in, line)) throw Error("empty csv '" + path + "'");
  std::stringstream hs(line);
  std::string cell;
  while (std::getline(hs, cell, ',')) t.columns.push_back(cell);

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ls(line);
    while (std::getline(ls, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
    if (row.size() != t.columns.size()) throw Error("ragged csv row in '" + path + "'");
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::vector<DiagnosticsRecord> read_timeseries(const std::string& path) {
  Table t = read_csv(path);
  if (t.columns != DiagnosticsRecord::column_names())
    throw HeaderMismatch("'" + path + "' is not a diagnostics timeseries");
  std::vector<DiagnosticsRecord> out;
  out.reserve(t.rows.size());
  for (const auto& r : t.rows) out.push_back(DiagnosticsRecord::from_row(r));
  return out;
}

void write_csv(const Table& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << header_line(t.columns) << '\n';
  for (const auto& r : t.rows) append_row(out, r);
  if (!out) throw Error("write failed for '" + path + "'");
}

}  // namespace hpe
