#pragma once

#include <string>
#include <vector>

#include "hpe/diagnostics.hpp"

namespace hpe {

/// CSV with a stable header row and 17-significant-digit values, so reading
/// back reproduces every double bit-exactly.  Writing to an existing file
/// verifies the header and appends (restart-safe).
void write_timeseries(const std::vector<DiagnosticsRecord>& records, const std::string& path);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  int column_index(const std::string& name) const;  // -1 if absent
};

Table read_csv(const std::string& path);

std::vector<DiagnosticsRecord> read_timeseries(const std::string& path);

/// Generic CSV writer used by the verification reports.
void write_csv(const Table& t, const std::string& path);

}  // namespace hpe
