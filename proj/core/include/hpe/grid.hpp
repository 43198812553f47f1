#pragma once

#include <cstddef>

namespace hpe {

/// Behaviour of a field under the reflection z -> -z.
enum class Parity { Even, Odd, None };

/// Parity of a pointwise product.
constexpr Parity product_parity(Parity a, Parity b) {
  if (a == Parity::None || b == Parity::None) return Parity::None;
  return (a == b) ? Parity::Even : Parity::Odd;
}

/// Parity after one z-derivative or one z-antiderivative.
constexpr Parity flip_parity(Parity p) {
  switch (p) {
    case Parity::Even: return Parity::Odd;
    case Parity::Odd: return Parity::Even;
    default: return Parity::None;
  }
}

const char* parity_name(Parity p);
Parity parity_from_name(const char* name);

enum class Axis { X, Y, Z };

/// Uniform collocation grid on the symmetric box M x (-h, h) with
/// M = (0,1) x (0,1).  The horizontal periods are fixed to 1 and the
/// vertical period is 2h.  Counts must be even and at least 4 so that
/// z = -h and z = 0 are grid points and the 2/3 dealiasing band is
/// nonempty.
struct Grid {
  int nx = 0;
  int ny = 0;
  int nz = 0;
  double h = 1.0;

  Grid() = default;
  Grid(int nx_, int ny_, int nz_, double h_);

  double x(int i) const { return static_cast<double>(i) / nx; }
  double y(int j) const { return static_cast<double>(j) / ny; }
  double z(int k) const { return -h + 2.0 * h * k / nz; }

  double dx() const { return 1.0 / nx; }
  double dy() const { return 1.0 / ny; }
  double dz() const { return 2.0 * h / nz; }

  /// Quadrature weight of one collocation cell.
  double cell_volume() const { return dx() * dy() * dz(); }
  /// |Omega| = 2h.
  double volume() const { return 2.0 * h; }

  std::size_t size() const {
    return static_cast<std::size_t>(nx) * ny * nz;
  }
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(k) * ny + j) * nx + i;
  }
  /// z-index of the mirror point of level k under z -> -z.
  int reflect_k(int k) const { return k == 0 ? 0 : nz - k; }

  bool operator==(const Grid& other) const {
    return nx == other.nx && ny == other.ny && nz == other.nz && h == other.h;
  }
};

}  // namespace hpe
