#pragma once

#include <array>
#include <vector>

#include "hpe/grid.hpp"

namespace hpe {

/// Collocation values of a periodic scalar on the symmetric box, together
/// with a declared z-parity.  Values are stored x-fastest:
/// index = (k*ny + j)*nx + i.
struct ScalarField {
  Grid grid;
  Parity parity = Parity::None;
  std::vector<double> values;

  ScalarField() = default;
  ScalarField(const Grid& g, Parity p);
  ScalarField(const Grid& g, Parity p, std::vector<double> v);

  double& at(int i, int j, int k) { return values[grid.index(i, j, k)]; }
  double at(int i, int j, int k) const { return values[grid.index(i, j, k)]; }
};

/// Values of a periodic scalar on the horizontal torus M, x-fastest.
struct Field2D {
  int nx = 0;
  int ny = 0;
  std::vector<double> values;

  Field2D() = default;
  Field2D(int nx_, int ny_);

  double& at(int i, int j) { return values[static_cast<std::size_t>(j) * nx + i]; }
  double at(int i, int j) const { return values[static_cast<std::size_t>(j) * nx + i]; }
};

using VectorField = std::array<ScalarField, 2>;

void require_same_grid(const ScalarField& a, const ScalarField& b);

/// Fill from a closed-form function of (x, y, z).
template <typename F>
ScalarField sample(const Grid& g, Parity p, F&& f) {
  ScalarField out(g, p);
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i)
        out.at(i, j, k) = f(g.x(i), g.y(j), g.z(k));
  return out;
}

// Elementwise arithmetic.  Sums require matching parity tags (None absorbs);
// products combine tags via product_parity.
ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(const ScalarField& a, const ScalarField& b);
ScalarField operator*(double s, const ScalarField& a);
void add_scaled(ScalarField& dst, double s, const ScalarField& src);

ScalarField zeros_like(const ScalarField& a);
bool all_finite(const ScalarField& a);

/// f(x,y,z) -> +-f(x,y,-z) with the sign of the declared parity, so that the
/// result equals f itself when the tag is honest.
ScalarField parity_reflect(const ScalarField& f);

double max_abs(const ScalarField& f);
double max_abs_diff(const ScalarField& a, const ScalarField& b);

}  // namespace hpe
