#pragma once

#include <string>

#include "hpe/domain.hpp"

namespace hpe {

/// State snapshot: a short text header (grid sizes, h, t, field names with
/// parities, byte order, element width) followed by flat little-endian
/// 8-byte reals per field in x-fastest order.  Round trips are bit-exact.
void write_snapshot(const State& s, const std::string& path);
State read_snapshot(const std::string& path);  // throws HeaderMismatch

/// Half-domain data file (same layout, fields v1, v2, T on nz/2 + 1 levels),
/// the input format of the extension tool.
void write_half_snapshot(const HalfField& v1, const HalfField& v2, const HalfField& T,
                         const std::string& path);
struct HalfData {
  HalfField v1, v2, T;
};
HalfData read_half_snapshot(const std::string& path);

}  // namespace hpe
