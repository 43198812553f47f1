#include "hpe/domain.hpp"

#include <cmath>
#include <string>

#include "hpe/errors.hpp"
#include "hpe/tendency.hpp"

namespace hpe {

HalfField::HalfField(int nx_, int ny_, int nz_half_, double h_)
    : nx(nx_), ny(ny_), nz_half(nz_half_), h(h_),
      values(static_cast<std::size_t>(nx_) * ny_ * nz_half_, 0.0) {
  if (nz_half < 3) throw ValidationError("nz_half", "need at least 3 levels on the half-domain");
}

ScalarField extend(const HalfField& f, Parity parity) {
  if (parity == Parity::None)
    throw ParityError("extension requires an Even or Odd parity");
  const Grid g = f.full_grid();
  const int nz = g.nz;

  if (parity == Parity::Odd) {
    // z = -h is level 0 and z = 0 is level nz/2; odd data must vanish there
    // or the extension is discontinuous, violating the boundary conditions.
    double worst = 0.0;
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        worst = std::max(worst, std::abs(f.at(i, j, 0)));
        worst = std::max(worst, std::abs(f.at(i, j, nz / 2)));
      }
    if (worst > kOddBoundaryTolerance)
      throw OddExtensionMismatch("odd extension requires data vanishing at z = 0 and z = -h; max |f| there is " +
                                 std::to_string(worst));
  }

  ScalarField out(g, parity);
  const double sign = (parity == Parity::Odd) ? -1.0 : 1.0;
  for (int k = 0; k <= nz / 2; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) out.at(i, j, k) = f.at(i, j, k);
  for (int k = nz / 2 + 1; k < nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) out.at(i, j, k) = sign * f.at(i, j, nz - k);
  if (parity == Parity::Odd) {
    // Pin the symmetry planes so the parity relation holds exactly.
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        out.at(i, j, 0) = 0.0;
        out.at(i, j, nz / 2) = 0.0;
      }
  }
  return out;
}

HalfField restrict_to_half(const ScalarField& f) {
  const Grid& g = f.grid;
  HalfField out(g.nx, g.ny, g.nz / 2 + 1, g.h);
  for (int k = 0; k <= g.nz / 2; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) out.at(i, j, k) = f.at(i, j, k);
  return out;
}

State make_state(ScalarField v1, ScalarField v2, ScalarField T, double t) {
  if (v1.parity != Parity::Even || v2.parity != Parity::Even)
    throw ParityError("velocity components must be tagged Even");
  if (T.parity != Parity::Odd) throw ParityError("temperature must be tagged Odd");
  require_same_grid(v1, v2);
  require_same_grid(v1, T);
  if (t < 0.0) throw ValidationError("t", "time must be nonnegative");

  State s;
  s.v = {std::move(v1), std::move(v2)};
  s.T = std::move(T);
  s.t = t;
  barotropic_project(s.v);
  return s;
}

}  // namespace hpe
