#include "hpe/tendency.hpp"

#include <cmath>
#include <string>

#include "hpe/errors.hpp"
#include "hpe/spectral.hpp"

namespace hpe {

namespace sp = hpe::spectral;

void barotropic_project(VectorField& v) {
  require_same_grid(v[0], v[1]);
  const Grid& g = v[0].grid;
  sp::SpectralField s1 = sp::analyze(v[0]);
  sp::SpectralField s2 = sp::analyze(v[1]);
  const int hx = g.nx / 2 + 1;
  // The depth mean lives on the m_z = 0 plane; remove its curl-free part.
  for (int j = 0; j < g.ny; ++j) {
    const double ky = sp::wavenumber_y(g, j);
    for (int i = 0; i < hx; ++i) {
      const double kx = sp::wavenumber_x(g, i);
      const double k2 = kx * kx + ky * ky;
      if (k2 == 0.0) continue;
      const std::size_t n = s1.index(i, j, 0);
      const std::complex<double> kdotv = kx * s1.coef[n] + ky * s2.coef[n];
      s1.coef[n] -= kx * kdotv / k2;
      s2.coef[n] -= ky * kdotv / k2;
    }
  }
  v[0] = sp::synthesize(s1, v[0].parity);
  v[1] = sp::synthesize(s2, v[1].parity);
}

ScalarField diagnose_w(const VectorField& v) {
  require_same_grid(v[0], v[1]);
  ScalarField div = sp::derivative(v[0], Axis::X) + sp::derivative(v[1], Axis::Y);
  return -1.0 * sp::z_antiderivative(div);
}

namespace {

/// ps1 and ps2 elliptic solves on the torus M, given depth means of the
/// dealiased momentum flux and of the velocity.
Field2D solve_ps1(const Field2D& i11, const Field2D& i12, const Field2D& i22, int nx, int ny) {
  sp::Spectral2D s11 = sp::analyze(i11);
  sp::Spectral2D s12 = sp::analyze(i12);
  sp::Spectral2D s22 = sp::analyze(i22);
  sp::dealias_inplace(s11);
  sp::dealias_inplace(s12);
  sp::dealias_inplace(s22);
  sp::Spectral2D out;
  out.nx = nx;
  out.ny = ny;
  out.coef.assign(s11.coef.size(), 0.0);
  const int hx = nx / 2 + 1;
  for (int j = 0; j < ny; ++j) {
    const double ky = 2.0 * M_PI * sp::signed_mode(j, ny);
    for (int i = 0; i < hx; ++i) {
      const double kx = 2.0 * M_PI * i;
      const double k2 = kx * kx + ky * ky;
      if (k2 == 0.0) continue;
      const std::size_t n = out.index(i, j);
      // div_H div_H hat: -(kx^2 I11 + 2 kx ky I12 + ky^2 I22)
      const std::complex<double> rhs =
          -(kx * kx * s11.coef[n] + 2.0 * kx * ky * s12.coef[n] + ky * ky * s22.coef[n]);
      out.coef[n] = rhs / k2;
    }
  }
  return sp::synthesize(out);
}

Field2D solve_ps2(const Field2D& vbar1, const Field2D& vbar2, double f0, int nx, int ny) {
  // g = f0 * (k x vbar) = f0 * (-vbar2, vbar1)
  sp::Spectral2D s1 = sp::analyze(vbar1);
  sp::Spectral2D s2 = sp::analyze(vbar2);
  sp::Spectral2D out;
  out.nx = nx;
  out.ny = ny;
  out.coef.assign(s1.coef.size(), 0.0);
  const int hx = nx / 2 + 1;
  const std::complex<double> iu(0.0, 1.0);
  for (int j = 0; j < ny; ++j) {
    const double ky = 2.0 * M_PI * sp::signed_mode(j, ny);
    for (int i = 0; i < hx; ++i) {
      const double kx = 2.0 * M_PI * i;
      const double k2 = kx * kx + ky * ky;
      if (k2 == 0.0) continue;
      const std::size_t n = out.index(i, j);
      const std::complex<double> rhs = iu * (kx * (f0 * -s2.coef[n]) + ky * (f0 * s1.coef[n]));
      out.coef[n] = rhs / k2;
    }
  }
  return sp::synthesize(out);
}

void subtract_mean(Field2D& f) {
  double sum = 0.0;
  for (double v : f.values) sum += v;
  const double mean = sum / static_cast<double>(f.values.size());
  for (double& v : f.values) v -= mean;
}

Field2D add2d(const Field2D& a, const Field2D& b, const Field2D& c) {
  Field2D out(a.nx, a.ny);
  for (std::size_t n = 0; n < out.values.size(); ++n)
    out.values[n] = a.values[n] + b.values[n] + c.values[n];
  return out;
}

/// Shared assembly for the explicit tendency and the derived fields.  All
/// quadratic products are dealiased (the final 2/3 truncation of the
/// assembled tendency is equivalent to truncating each product, since the
/// spectral derivatives are diagonal).
struct Assembly {
  const State& s;
  const Grid& g;
  ScalarField dxv1, dyv1, dzv1, dxv2, dyv2, dzv2, dxT, dyT, dzT;
  ScalarField div;     // div_H v
  ScalarField w;       // odd
  ScalarField intdiv;  // int_{-h}^{z} div dxi = -w
  ScalarField intT;    // int_{-h}^{z} T dxi, even
  SurfacePressure psd;

  explicit Assembly(const State& state, double f0)
      : s(state),
        g(state.v[0].grid),
        dxv1(sp::derivative(s.v[0], Axis::X)),
        dyv1(sp::derivative(s.v[0], Axis::Y)),
        dzv1(sp::derivative(s.v[0], Axis::Z)),
        dxv2(sp::derivative(s.v[1], Axis::X)),
        dyv2(sp::derivative(s.v[1], Axis::Y)),
        dzv2(sp::derivative(s.v[1], Axis::Z)),
        dxT(sp::derivative(s.T, Axis::X)),
        dyT(sp::derivative(s.T, Axis::Y)),
        dzT(sp::derivative(s.T, Axis::Z)),
        div(dxv1 + dyv2),
        w(-1.0 * sp::z_antiderivative(div)),
        intdiv(-1.0 * w),
        intT(sp::z_antiderivative(s.T)) {
    // ps0: depth mean of int T minus its horizontal mean.
    Field2D ps0 = sp::vertical_average(intT);
    subtract_mean(ps0);
    // ps1/ps2 sources are depth means of dealiased products.
    Field2D i11 = sp::vertical_average(sp::dealias(s.v[0] * s.v[0]));
    Field2D i12 = sp::vertical_average(sp::dealias(s.v[0] * s.v[1]));
    Field2D i22 = sp::vertical_average(sp::dealias(s.v[1] * s.v[1]));
    Field2D ps1 = solve_ps1(i11, i12, i22, g.nx, g.ny);
    Field2D vbar1 = sp::vertical_average(s.v[0]);
    Field2D vbar2 = sp::vertical_average(s.v[1]);
    Field2D ps2 = solve_ps2(vbar1, vbar2, f0, g.nx, g.ny);
    psd.ps = add2d(ps0, ps1, ps2);
    psd.ps0 = std::move(ps0);
    psd.ps1 = std::move(ps1);
    psd.ps2 = std::move(ps2);
  }

  /// Skew-symmetric transport of f: average of advective and divergence
  /// forms over the incompressible pair (v, w).
  ScalarField skew_advect(const ScalarField& f, const ScalarField& fx, const ScalarField& fy,
                          const ScalarField& fz) const {
    ScalarField adv = s.v[0] * fx;
    add_scaled(adv, 1.0, s.v[1] * fy);
    add_scaled(adv, 1.0, w * fz);

    // Divergence form: combine d_x(v1 f) + d_y(v2 f) + d_z(w f) in one pass.
    sp::SpectralField p1 = sp::analyze(s.v[0] * f);
    sp::SpectralField p2 = sp::analyze(s.v[1] * f);
    sp::SpectralField p3 = sp::analyze(w * f);
    const int hx = g.nx / 2 + 1;
    for (int k = 0; k < g.nz; ++k) {
      const double kz = (k == g.nz / 2) ? 0.0 : sp::wavenumber_z(g, k);
      for (int j = 0; j < g.ny; ++j) {
        const double ky = (j == g.ny / 2) ? 0.0 : sp::wavenumber_y(g, j);
        for (int i = 0; i < hx; ++i) {
          const double kx = (i == g.nx / 2) ? 0.0 : sp::wavenumber_x(g, i);
          const std::size_t n = p1.index(i, j, k);
          p1.coef[n] = std::complex<double>(0.0, 1.0) *
                       (kx * p1.coef[n] + ky * p2.coef[n] + kz * p3.coef[n]);
        }
      }
    }
    ScalarField divform = sp::synthesize(p1, f.parity);

    ScalarField out(g, f.parity);
    for (std::size_t n = 0; n < out.values.size(); ++n)
      out.values[n] = 0.5 * (adv.values[n] + divform.values[n]);
    return out;
  }
};

void broadcast_gradient_2d(const Field2D& ps, const Grid& g, ScalarField& gx, ScalarField& gy) {
  sp::Spectral2D s = sp::analyze(ps);
  sp::Spectral2D sx = s, sy = s;
  sp::differentiate_inplace(sx, Axis::X);
  sp::differentiate_inplace(sy, Axis::Y);
  Field2D px = sp::synthesize(sx);
  Field2D py = sp::synthesize(sy);
  gx = ScalarField(g, Parity::Even);
  gy = ScalarField(g, Parity::Even);
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        gx.at(i, j, k) = px.at(i, j);
        gy.at(i, j, k) = py.at(i, j);
      }
}

}  // namespace

SurfacePressure solve_ps(const VectorField& v, const ScalarField& T, double f0) {
  State tmp;
  tmp.v = v;
  tmp.T = T;
  Assembly a(tmp, f0);
  return std::move(a.psd);
}

VectorField pressure_gradient(const ScalarField& T, const Field2D& ps) {
  if (T.parity != Parity::Odd)
    throw ParityError("pressure_gradient requires odd temperature");
  const Grid& g = T.grid;
  ScalarField intT = sp::z_antiderivative(T);
  ScalarField gx, gy;
  broadcast_gradient_2d(ps, g, gx, gy);
  add_scaled(gx, -1.0, sp::derivative(intT, Axis::X));
  add_scaled(gy, -1.0, sp::derivative(intT, Axis::Y));
  return {std::move(gx), std::move(gy)};
}

Tendency explicit_tendency(const State& s, const Params& p) {
  Assembly a(s, p.f0);
  const Grid& g = a.g;

  ScalarField adv1 = a.skew_advect(s.v[0], a.dxv1, a.dyv1, a.dzv1);
  ScalarField adv2 = a.skew_advect(s.v[1], a.dxv2, a.dyv2, a.dzv2);
  ScalarField advT = a.skew_advect(s.T, a.dxT, a.dyT, a.dzT);

  // grad_H(ps - int T): 2D pressure gradient broadcast minus the 3D part.
  ScalarField gx, gy;
  broadcast_gradient_2d(a.psd.ps, g, gx, gy);
  sp::SpectralField sIT = sp::analyze(a.intT);
  sp::SpectralField sITx = sIT;
  sp::differentiate_inplace(sITx, Axis::X);
  sp::differentiate_inplace(sIT, Axis::Y);
  add_scaled(gx, -1.0, sp::synthesize(sITx, Parity::Even));
  add_scaled(gy, -1.0, sp::synthesize(sIT, Parity::Even));

  Tendency out;
  out.dv[0] = ScalarField(g, Parity::Even);
  out.dv[1] = ScalarField(g, Parity::Even);
  out.dT = ScalarField(g, Parity::Odd);
  for (std::size_t n = 0; n < g.size(); ++n) {
    out.dv[0].values[n] = -adv1.values[n] + p.f0 * s.v[1].values[n] - gx.values[n];
    out.dv[1].values[n] = -adv2.values[n] - p.f0 * s.v[0].values[n] - gy.values[n];
    out.dT.values[n] = -advT.values[n] + a.intdiv.values[n] / p.h;
  }
  out.dv[0] = sp::dealias(out.dv[0]);
  out.dv[1] = sp::dealias(out.dv[1]);
  out.dT = sp::dealias(out.dT);
  return out;
}

VectorField momentum_rhs(const State& s, const Params& p) {
  Tendency t = explicit_tendency(s, p);
  for (int c = 0; c < 2; ++c) {
    add_scaled(t.dv[c], 1.0, sp::laplacian_h(s.v[c]));
    if (p.eps != 0.0)
      add_scaled(t.dv[c], p.eps, sp::derivative(sp::derivative(s.v[c], Axis::Z), Axis::Z));
  }
  return std::move(t.dv);
}

ScalarField temperature_rhs(const State& s, const Params& p) {
  Tendency t = explicit_tendency(s, p);
  add_scaled(t.dT, 1.0, sp::laplacian_h(s.T));
  if (p.eps != 0.0)
    add_scaled(t.dT, p.eps, sp::derivative(sp::derivative(s.T, Axis::Z), Axis::Z));
  return std::move(t.dT);
}

DerivedFields compute_derived(const State& s, double f0) {
  DerivedFields d;
  d.w = diagnose_w(s.v);
  SurfacePressure ps = solve_ps(s.v, s.T, f0);
  d.ps = std::move(ps.ps);
  d.ps0 = std::move(ps.ps0);
  d.ps1 = std::move(ps.ps1);
  d.ps2 = std::move(ps.ps2);
  d.u = {sp::derivative(s.v[0], Axis::Z), sp::derivative(s.v[1], Axis::Z)};
  return d;
}

}  // namespace hpe
