#include "hpe/grid.hpp"

#include <cstring>
#include <string>

#include "hpe/errors.hpp"

namespace hpe {

Grid::Grid(int nx_, int ny_, int nz_, double h_) : nx(nx_), ny(ny_), nz(nz_), h(h_) {
  auto check = [](int n, const char* name) {
    if (n < 4 || n % 2 != 0)
      throw ValidationError(name, "collocation counts must be even and >= 4, got " + std::to_string(n));
  };
  check(nx, "nx");
  check(ny, "ny");
  check(nz, "nz");
  if (!(h > 0.0)) throw ValidationError("h", "half-depth must be positive");
}

const char* parity_name(Parity p) {
  switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    default: return "none";
  }
}

Parity parity_from_name(const char* name) {
  if (std::strcmp(name, "even") == 0) return Parity::Even;
  if (std::strcmp(name, "odd") == 0) return Parity::Odd;
  if (std::strcmp(name, "none") == 0) return Parity::None;
  throw ValidationError("parity", std::string("unknown parity '") + name + "'");
}

}  // namespace hpe
