#include "hpe/field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "hpe/errors.hpp"

namespace hpe {

ScalarField::ScalarField(const Grid& g, Parity p) : grid(g), parity(p), values(g.size(), 0.0) {}

ScalarField::ScalarField(const Grid& g, Parity p, std::vector<double> v)
    : grid(g), parity(p), values(std::move(v)) {
  if (values.size() != grid.size()) throw GridMismatch("value array does not match grid size");
}

Field2D::Field2D(int nx_, int ny_) : nx(nx_), ny(ny_), values(static_cast<std::size_t>(nx_) * ny_, 0.0) {}

void require_same_grid(const ScalarField& a, const ScalarField& b) {
  if (!(a.grid == b.grid)) throw GridMismatch("fields live on different grids");
}

namespace {
Parity sum_parity(Parity a, Parity b) {
  if (a == b) return a;
  return Parity::None;
}
}  // namespace

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a, b);
  ScalarField out(a.grid, sum_parity(a.parity, b.parity));
  for (std::size_t n = 0; n < out.values.size(); ++n) out.values[n] = a.values[n] + b.values[n];
  return out;
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a, b);
  ScalarField out(a.grid, sum_parity(a.parity, b.parity));
  for (std::size_t n = 0; n < out.values.size(); ++n) out.values[n] = a.values[n] - b.values[n];
  return out;
}

ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a, b);
  ScalarField out(a.grid, product_parity(a.parity, b.parity));
  for (std::size_t n = 0; n < out.values.size(); ++n) out.values[n] = a.values[n] * b.values[n];
  return out;
}

ScalarField operator*(double s, const ScalarField& a) {
  ScalarField out(a.grid, a.parity);
  for (std::size_t n = 0; n < out.values.size(); ++n) out.values[n] = s * a.values[n];
  return out;
}

void add_scaled(ScalarField& dst, double s, const ScalarField& src) {
  require_same_grid(dst, src);
  dst.parity = sum_parity(dst.parity, src.parity);
  for (std::size_t n = 0; n < dst.values.size(); ++n) dst.values[n] += s * src.values[n];
}

ScalarField zeros_like(const ScalarField& a) { return ScalarField(a.grid, a.parity); }

bool all_finite(const ScalarField& a) {
  for (double v : a.values)
    if (!std::isfinite(v)) return false;
  return true;
}

ScalarField parity_reflect(const ScalarField& f) {
  ScalarField out(f.grid, f.parity);
  const double sign = (f.parity == Parity::Odd) ? -1.0 : 1.0;
  const Grid& g = f.grid;
  for (int k = 0; k < g.nz; ++k) {
    const int km = g.reflect_k(k);
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) out.at(i, j, k) = sign * f.at(i, j, km);
  }
  return out;
}

double max_abs(const ScalarField& f) {
  double m = 0.0;
  for (double v : f.values) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a, b);
  double m = 0.0;
  for (std::size_t n = 0; n < a.values.size(); ++n)
    m = std::max(m, std::abs(a.values[n] - b.values[n]));
  return m;
}

}  // namespace hpe
