#pragma once

#include <vector>

#include "hpe/field.hpp"
#include "hpe/grid.hpp"

namespace hpe {

/// Collocation data on the physical half-domain M x [-h, 0]: nz_half levels
/// z_k = -h + 2h*k/nz with nz = 2*(nz_half - 1), so z = -h and z = 0 are the
/// first and last levels.  x-fastest storage.
struct HalfField {
  int nx = 0;
  int ny = 0;
  int nz_half = 0;
  double h = 1.0;
  std::vector<double> values;

  HalfField() = default;
  HalfField(int nx_, int ny_, int nz_half_, double h_);

  double& at(int i, int j, int k) {
    return values[(static_cast<std::size_t>(k) * ny + j) * nx + i];
  }
  double at(int i, int j, int k) const {
    return values[(static_cast<std::size_t>(k) * ny + j) * nx + i];
  }
  /// Grid of the symmetry-extended box.
  Grid full_grid() const { return Grid(nx, ny, 2 * (nz_half - 1), h); }
};

template <typename F>
HalfField sample_half(int nx, int ny, int nz_half, double h, F&& f) {
  HalfField out(nx, ny, nz_half, h);
  const Grid g = out.full_grid();
  for (int k = 0; k < nz_half; ++k)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) out.at(i, j, k) = f(g.x(i), g.y(j), g.z(k));
  return out;
}

/// Absolute tolerance on |f| at z = 0 and z = -h below which odd extension is
/// admissible.
inline constexpr double kOddBoundaryTolerance = 1e-10;

/// Even or odd reflection of half-domain data onto the symmetric box.  The
/// result satisfies its parity relation exactly by construction and restricts
/// back to the input verbatim.  Odd extension requires the data to vanish at
/// z = 0 and z = -h (tolerance above); otherwise OddExtensionMismatch.
ScalarField extend(const HalfField& f, Parity parity);

/// Values on z in [-h, 0] copied verbatim.
HalfField restrict_to_half(const ScalarField& f);

/// Physical and numerical constants of a run.  Horizontal viscosity and
/// diffusivity are fixed to 1 (nondimensional form); eps is the vertical
/// regularization.
struct Params {
  double h = 1.0;
  double f0 = 1.0;
  double eps = 1e-3;
  double cfl = 0.5;
  double dt_max = 1e-3;
  double t_end = 0.1;
  unsigned long seed = 1;
};

/// Prognostic unknowns: horizontal velocity (even in z), temperature (odd in
/// z), and time.  Construct through make_state so the barotropic constraint
/// holds.
struct State {
  VectorField v;
  ScalarField T;
  double t = 0.0;
};

/// Validates parities (Even, Even, Odd) and the shared grid, then applies the
/// barotropic projection to (v1, v2).
State make_state(ScalarField v1, ScalarField v2, ScalarField T, double t);

}  // namespace hpe
