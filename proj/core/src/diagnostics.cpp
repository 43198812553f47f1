#include "hpe/diagnostics.hpp"

#include <cmath>

#include "hpe/errors.hpp"
#include "hpe/spectral.hpp"

namespace hpe {

namespace sp = hpe::spectral;

namespace {

double sum_pow_half(const std::vector<double>& m2, double q, double cell) {
  // m2 holds |f|^2 pointwise; returns sum of |f|^q * cell.
  double s = 0.0;
  if (q == 2.0) {
    for (double x : m2) s += x;
  } else if (q == 4.0) {
    for (double x : m2) s += x * x;
  } else {
    const double e = 0.5 * q;
    for (double x : m2) s += std::pow(x, e);
  }
  return s * cell;
}

std::vector<double> squared_magnitude(const ScalarField& f) {
  std::vector<double> m2(f.values.size());
  for (std::size_t n = 0; n < m2.size(); ++n) m2[n] = f.values[n] * f.values[n];
  return m2;
}

std::vector<double> squared_magnitude(const VectorField& v) {
  std::vector<double> m2(v[0].values.size());
  for (std::size_t n = 0; n < m2.size(); ++n)
    m2[n] = v[0].values[n] * v[0].values[n] + v[1].values[n] * v[1].values[n];
  return m2;
}

double lq_from_m2(const std::vector<double>& m2, double q, double cell) {
  if (std::isinf(q)) {
    double m = 0.0;
    for (double x : m2) m = std::max(m, x);
    return std::sqrt(m);
  }
  return std::pow(sum_pow_half(m2, q, cell), 1.0 / q);
}

/// All kQSet norms in one pass (exponents are powers of two plus infinity).
std::array<double, 6> qset_norms(const std::vector<double>& m2, double cell) {
  double s2 = 0, s4 = 0, s8 = 0, s16 = 0, s32 = 0, m = 0;
  for (double x : m2) {
    const double x2 = x * x;
    const double x4 = x2 * x2;
    const double x8 = x4 * x4;
    s2 += x;
    s4 += x2;
    s8 += x4;
    s16 += x8;
    s32 += x8 * x8;
    m = std::max(m, x);
  }
  return {std::sqrt(s2 * cell),      std::pow(s4 * cell, 1.0 / 4.0),
          std::pow(s8 * cell, 1.0 / 8.0), std::pow(s16 * cell, 1.0 / 16.0),
          std::pow(s32 * cell, 1.0 / 32.0), std::sqrt(m)};
}

double l2sq(const ScalarField& f) {
  double s = 0.0;
  for (double v : f.values) s += v * v;
  return s * f.grid.cell_volume();
}

/// Per-mode effective wavenumbers reproducing the Nyquist conventions of the
/// physical-space operators (odd derivatives drop the unpaired mode, the
/// Laplacian keeps it).
struct ModeFactors {
  double kxe2, kye2, kze2, lh;  // lh = kx^2 + ky^2 with the full Nyquist value
};

template <typename F>
void for_each_mode(const Grid& g, F&& f) {
  const int hx = g.nx / 2 + 1;
  for (int k = 0; k < g.nz; ++k) {
    const double kz = sp::wavenumber_z(g, k);
    const double kze2 = (k == g.nz / 2) ? 0.0 : kz * kz;
    for (int j = 0; j < g.ny; ++j) {
      const double ky = sp::wavenumber_y(g, j);
      const double kye2 = (j == g.ny / 2) ? 0.0 : ky * ky;
      for (int i = 0; i < hx; ++i) {
        const double kx = sp::wavenumber_x(g, i);
        const double kxe2 = (i == g.nx / 2) ? 0.0 : kx * kx;
        const double weight = (i == 0 || i == g.nx / 2) ? 1.0 : 2.0;
        const std::size_t n = (static_cast<std::size_t>(k) * g.ny + j) * hx + i;
        f(n, weight, ModeFactors{kxe2, kye2, kze2, kx * kx + ky * ky});
      }
    }
  }
}

}  // namespace

double lq_norm(const ScalarField& f, double q) {
  if (!(q >= 1.0)) throw ValidationError("q", "exponent must be in [1, inf]");
  if (std::isinf(q)) return max_abs(f);
  double s = 0.0;
  for (double v : f.values) s += std::pow(std::abs(v), q);
  return std::pow(s * f.grid.cell_volume(), 1.0 / q);
}

double lq_norm(const VectorField& f, double q) {
  if (!(q >= 1.0)) throw ValidationError("q", "exponent must be in [1, inf]");
  std::vector<double> m2 = squared_magnitude(f);
  return lq_from_m2(m2, q, f[0].grid.cell_volume());
}

ScalarField shifted_temperature(const State& s) {
  const Grid& g = s.T.grid;
  // The sawtooth periodization of z/h breaks the discrete odd symmetry at
  // the z = -h plane, so T* carries no parity tag.
  ScalarField out(g, Parity::None);
  for (int k = 0; k < g.nz; ++k) {
    const double zk = g.z(k) / g.h;
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) out.at(i, j, k) = s.T.at(i, j, k) + zk;
  }
  return out;
}

double energy_budget_residual(const State& prev, const State& next, double dt, const Params& p) {
  require_same_grid(prev.T, next.T);
  const Grid& g = prev.T.grid;
  const double cell = g.cell_volume();

  auto energy = [&](const State& s) {
    double e = 0.0;
    for (int c = 0; c < 2; ++c)
      for (double v : s.v[c].values) e += v * v;
    for (double v : s.T.values) e += v * v;
    return e * cell;
  };

  State mid;
  mid.v[0] = 0.5 * (prev.v[0] + next.v[0]);
  mid.v[1] = 0.5 * (prev.v[1] + next.v[1]);
  mid.T = 0.5 * (prev.T + next.T);

  // Dissipation at the midpoint, by Parseval.
  sp::SpectralField s1 = sp::analyze(mid.v[0]);
  sp::SpectralField s2 = sp::analyze(mid.v[1]);
  sp::SpectralField sT = sp::analyze(mid.T);
  double diss = 0.0;
  for_each_mode(g, [&](std::size_t n, double w, ModeFactors m) {
    const double hfac = m.kxe2 + m.kye2 + p.eps * m.kze2;
    diss += w * hfac * (std::norm(s1.coef[n]) + std::norm(s2.coef[n]) + std::norm(sT.coef[n]));
  });
  diss *= g.volume();

  // Work terms of the energy identity.
  ScalarField div = sp::derivative(mid.v[0], Axis::X) + sp::derivative(mid.v[1], Axis::Y);
  ScalarField intT = sp::z_antiderivative(mid.T);
  ScalarField intdiv = sp::z_antiderivative(div);
  double work = 0.0;
  for (std::size_t n = 0; n < g.size(); ++n)
    work += intT.values[n] * div.values[n] - intdiv.values[n] * mid.T.values[n] / p.h;
  work *= cell;

  return 0.5 * (energy(next) - energy(prev)) / dt + diss + work;
}

double constraint_residual(const VectorField& v) {
  const Grid& g = v[0].grid;
  Field2D vbar1 = sp::vertical_average(v[0]);
  Field2D vbar2 = sp::vertical_average(v[1]);
  sp::Spectral2D a = sp::analyze(vbar1);
  sp::Spectral2D b = sp::analyze(vbar2);
  sp::differentiate_inplace(a, Axis::X);
  sp::differentiate_inplace(b, Axis::Y);
  Field2D da = sp::synthesize(a);
  Field2D db = sp::synthesize(b);
  double s = 0.0;
  for (std::size_t n = 0; n < da.values.size(); ++n) {
    const double d = da.values[n] + db.values[n];
    s += d * d;
  }
  const double cell = 1.0 / (static_cast<double>(g.nx) * g.ny);
  return 2.0 * g.h * std::sqrt(s * cell);
}

double constraint_residual(const State& s) { return constraint_residual(s.v); }

double parity_drift(const State& s) {
  double worst = 0.0;
  for (int c = 0; c < 2; ++c)
    worst = std::max(worst, max_abs_diff(s.v[c], parity_reflect(s.v[c])));
  worst = std::max(worst, max_abs_diff(s.T, parity_reflect(s.T)));
  return worst;
}

double lq_growth_ratio(const State& s, const State& initial) {
  std::vector<double> m2 = squared_magnitude(s.v);
  std::vector<double> m20 = squared_magnitude(initial.v);
  const double cell = s.v[0].grid.cell_volume();
  const double cell0 = initial.v[0].grid.cell_volume();
  double worst = 0.0;
  for (double q : kQSet) {
    if (std::isinf(q)) continue;
    const double nq = lq_from_m2(m2, q, cell);
    const double nq0 = lq_from_m2(m20, q, cell0);
    worst = std::max(worst, nq / ((1.0 + nq0) * std::sqrt(q)));
  }
  return worst;
}

AprioriVectors apriori_monitor(const State& s, const Params& p, NormRoute route) {
  const Grid& g = s.v[0].grid;
  const double eps = p.eps;
  AprioriVectors out;

  // Quartic terms need physical u and grad_H u on either route.
  ScalarField u1 = sp::derivative(s.v[0], Axis::Z);
  ScalarField u2 = sp::derivative(s.v[1], Axis::Z);
  ScalarField dxu1 = sp::derivative(u1, Axis::X);
  ScalarField dyu1 = sp::derivative(u1, Axis::Y);
  ScalarField dxu2 = sp::derivative(u2, Axis::X);
  ScalarField dyu2 = sp::derivative(u2, Axis::Y);

  ScalarField uquart(g, Parity::None);   // |u|^4
  ScalarField ugrad(g, Parity::None);    // |u|^2 |grad_H u|^2
  for (std::size_t n = 0; n < g.size(); ++n) {
    const double m2 = u1.values[n] * u1.values[n] + u2.values[n] * u2.values[n];
    const double g2 = dxu1.values[n] * dxu1.values[n] + dyu1.values[n] * dyu1.values[n] +
                      dxu2.values[n] * dxu2.values[n] + dyu2.values[n] * dyu2.values[n];
    uquart.values[n] = m2 * m2;
    ugrad.values[n] = m2 * g2;
  }

  auto integral = [&](const ScalarField& f) {
    if (route == NormRoute::Quadrature) {
      double acc = 0.0;
      for (double v : f.values) acc += v;
      return acc * g.cell_volume();
    }
    // Parseval route: the volume integral is |Omega| times the mean mode.
    sp::SpectralField sf = sp::analyze(f);
    return g.volume() * sf.coef[0].real();
  };
  const double u_l4_4 = integral(uquart);
  const double u_grad_sq = integral(ugrad);

  if (route == NormRoute::Parseval) {
    sp::SpectralField s1 = sp::analyze(s.v[0]);
    sp::SpectralField s2 = sp::analyze(s.v[1]);
    sp::SpectralField sT = sp::analyze(s.T);
    double acc[18] = {0};
    for_each_mode(g, [&](std::size_t n, double w, ModeFactors m) {
      const double cv = std::norm(s1.coef[n]) + std::norm(s2.coef[n]);
      const double cT = std::norm(sT.coef[n]);
      const double gh = m.kxe2 + m.kye2;
      const double lh2 = m.lh * m.lh;
      acc[0] += w * m.kze2 * cv;                        // ||u||_2^2
      acc[1] += w * gh * m.kze2 * cv;                   // ||grad_H u||_2^2
      acc[2] += w * m.kze2 * m.kze2 * cv;               // ||dz u||_2^2
      acc[3] += w * m.kze2 * cT;                        // ||dz T||_2^2
      acc[4] += w * gh * m.kze2 * cT;                   // ||grad_H dz T||_2^2
      acc[5] += w * m.kze2 * m.kze2 * cT;               // ||dzz T||_2^2
      acc[6] += w * gh * cv;                            // ||grad_H v||_2^2
      acc[7] += w * lh2 * cv;                           // ||lap_H v||_2^2
      acc[8] += w * gh * cT;                            // ||grad_H T||_2^2
      acc[9] += w * lh2 * cT;                           // ||lap_H T||_2^2
      acc[10] += w * gh * m.kze2 * m.kze2 * cv;         // ||grad_H dz u||_2^2
      acc[11] += w * m.kze2 * m.kze2 * m.kze2 * cv;     // ||dzz u||_2^2
      acc[12] += w * gh * m.kze2 * m.kze2 * cT;         // ||grad_H dzz T||_2^2
      acc[13] += w * m.kze2 * m.kze2 * m.kze2 * cT;     // ||dzzz T||_2^2
      acc[14] += w * lh2 * m.kze2 * cv;                 // ||lap_H u||_2^2
      acc[15] += w * lh2 * m.kze2 * cT;                 // ||lap_H dz T||_2^2
      acc[16] += w * gh * lh2 * (cv + cT);              // ||grad_H lap_H (v,T)||_2^2
      acc[17] += w * m.kze2 * lh2 * (cv + cT);          // ||dz lap_H (v,T)||_2^2
    });
    for (double& x : acc) x *= g.volume();
    out.a = {acc[0] + u_l4_4, acc[3], acc[6], acc[8], acc[2], acc[5], acc[1], acc[4],
             acc[7] + acc[9]};
    out.b = {acc[1] + eps * acc[2] + u_grad_sq,
             acc[4] + eps * acc[5],
             acc[7] + eps * acc[1],
             acc[9] + eps * acc[4],
             acc[10] + eps * acc[11],
             acc[12] + eps * acc[13],
             acc[14] + eps * acc[10],
             acc[15] + eps * acc[12],
             acc[16] + eps * acc[17]};
    return out;
  }

  // Quadrature route: build every derivative field and integrate directly.
  ScalarField dzu1 = sp::derivative(u1, Axis::Z);
  ScalarField dzu2 = sp::derivative(u2, Axis::Z);
  ScalarField dzT = sp::derivative(s.T, Axis::Z);
  ScalarField dzzT = sp::derivative(dzT, Axis::Z);
  ScalarField dzzzT = sp::derivative(dzzT, Axis::Z);
  auto gradsq = [&](const ScalarField& f) {
    return l2sq(sp::derivative(f, Axis::X)) + l2sq(sp::derivative(f, Axis::Y));
  };
  const double u_l2 = l2sq(u1) + l2sq(u2);
  const double gradh_u = gradsq(u1) + gradsq(u2);
  const double dz_u = l2sq(dzu1) + l2sq(dzu2);
  const double dzT_l2 = l2sq(dzT);
  const double gradh_dzT = gradsq(dzT);
  const double dzzT_l2 = l2sq(dzzT);
  const double gradh_v = gradsq(s.v[0]) + gradsq(s.v[1]);
  ScalarField lapv1 = sp::laplacian_h(s.v[0]);
  ScalarField lapv2 = sp::laplacian_h(s.v[1]);
  ScalarField lapT = sp::laplacian_h(s.T);
  const double laph_v = l2sq(lapv1) + l2sq(lapv2);
  const double gradh_T = gradsq(s.T);
  const double laph_T = l2sq(lapT);
  const double gradh_dzu = gradsq(dzu1) + gradsq(dzu2);
  const double dzz_u = l2sq(sp::derivative(dzu1, Axis::Z)) + l2sq(sp::derivative(dzu2, Axis::Z));
  const double gradh_dzzT = gradsq(dzzT);
  const double dzzzT_l2 = l2sq(dzzzT);
  const double laph_u = l2sq(sp::laplacian_h(u1)) + l2sq(sp::laplacian_h(u2));
  const double laph_dzT = l2sq(sp::laplacian_h(dzT));
  const double gradh_lap = gradsq(lapv1) + gradsq(lapv2) + gradsq(lapT);
  const double dz_lap =
      l2sq(sp::derivative(lapv1, Axis::Z)) + l2sq(sp::derivative(lapv2, Axis::Z)) +
      l2sq(sp::derivative(lapT, Axis::Z));

  out.a = {u_l2 + u_l4_4, dzT_l2, gradh_v, gradh_T, dz_u, dzzT_l2, gradh_u, gradh_dzT,
           laph_v + laph_T};
  out.b = {gradh_u + eps * dz_u + u_grad_sq,
           gradh_dzT + eps * dzzT_l2,
           laph_v + eps * gradh_u,
           laph_T + eps * gradh_dzT,
           gradh_dzu + eps * dzz_u,
           gradh_dzzT + eps * dzzzT_l2,
           laph_u + eps * gradh_dzu,
           laph_dzT + eps * gradh_dzzT,
           gradh_lap + eps * dz_lap};
  return out;
}

const std::vector<std::string>& DiagnosticsRecord::column_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n = {"t", "dt"};
    const char* qn[] = {"l2", "l4", "l8", "l16", "l32", "linf"};
    for (const char* q : qn) n.push_back(std::string("v_") + q);
    for (const char* q : qn) n.push_back(std::string("tstar_") + q);
    for (const char* f : {"gradh_v", "dz_v", "laph_v", "gradh_dz_v", "dzz_v", "gradh_T", "dz_T",
                          "laph_T", "gradh_dz_T", "dzz_T"})
      n.push_back(f);
    n.insert(n.end(), {"energy_residual", "constraint_residual", "parity_drift", "lq_growth_ratio"});
    for (int i = 1; i <= 9; ++i) n.push_back("a" + std::to_string(i));
    for (int i = 1; i <= 9; ++i) n.push_back("b" + std::to_string(i));
    return n;
  }();
  return names;
}

std::vector<double> DiagnosticsRecord::row() const {
  std::vector<double> r = {t, dt};
  r.insert(r.end(), v_lq.begin(), v_lq.end());
  r.insert(r.end(), tstar_lq.begin(), tstar_lq.end());
  for (double x : {gradh_v, dz_v, laph_v, gradh_dz_v, dzz_v, gradh_T, dz_T, laph_T, gradh_dz_T,
                   dzz_T, energy_residual, constraint_residual, parity_drift, lq_growth_ratio})
    r.push_back(x);
  r.insert(r.end(), a.begin(), a.end());
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

DiagnosticsRecord DiagnosticsRecord::from_row(const std::vector<double>& row) {
  if (row.size() != column_names().size())
    throw ValidationError("row", "diagnostics row has wrong width");
  DiagnosticsRecord r;
  std::size_t n = 0;
  r.t = row[n++];
  r.dt = row[n++];
  for (double& x : r.v_lq) x = row[n++];
  for (double& x : r.tstar_lq) x = row[n++];
  for (double* x : {&r.gradh_v, &r.dz_v, &r.laph_v, &r.gradh_dz_v, &r.dzz_v, &r.gradh_T, &r.dz_T,
                    &r.laph_T, &r.gradh_dz_T, &r.dzz_T, &r.energy_residual, &r.constraint_residual,
                    &r.parity_drift, &r.lq_growth_ratio})
    *x = row[n++];
  for (double& x : r.a) x = row[n++];
  for (double& x : r.b) x = row[n++];
  return r;
}

MaxPrincipleVerdict max_principle_series(const std::vector<DiagnosticsRecord>& records, double dt,
                                         double c) {
  MaxPrincipleVerdict v;
  if (records.size() < 2) return v;
  if (c < 0.0) c = 10.0 * records.front().tstar_lq[5];
  const double tol = c * dt;
  for (std::size_t qi = 0; qi < kQSet.size(); ++qi) {
    double runmin = records.front().tstar_lq[qi];
    for (std::size_t n = 1; n < records.size(); ++n) {
      const double rise = records[n].tstar_lq[qi] - runmin;
      if (rise > v.worst_violation) {
        v.worst_violation = rise;
        v.t_at = records[n].t;
        v.q_at = kQSet[qi];
        v.index_at = n;
      }
      runmin = std::min(runmin, records[n].tstar_lq[qi]);
    }
  }
  v.pass = v.worst_violation <= tol;
  return v;
}

DiagnosticsRecord record_diagnostics(const State& s, const State* prev, double dt,
                                     const State& initial, const Params& p) {
  DiagnosticsRecord r;
  r.t = s.t;
  r.dt = dt;
  const Grid& g = s.v[0].grid;
  const double cell = g.cell_volume();

  r.v_lq = qset_norms(squared_magnitude(s.v), cell);
  r.tstar_lq = qset_norms(squared_magnitude(shifted_temperature(s)), cell);

  sp::SpectralField s1 = sp::analyze(s.v[0]);
  sp::SpectralField s2 = sp::analyze(s.v[1]);
  sp::SpectralField sT = sp::analyze(s.T);
  double nv[5] = {0}, nT[5] = {0};
  for_each_mode(g, [&](std::size_t n, double w, ModeFactors m) {
    const double cv = std::norm(s1.coef[n]) + std::norm(s2.coef[n]);
    const double cT = std::norm(sT.coef[n]);
    const double gh = m.kxe2 + m.kye2;
    const double lh2 = m.lh * m.lh;
    nv[0] += w * gh * cv;
    nv[1] += w * m.kze2 * cv;
    nv[2] += w * lh2 * cv;
    nv[3] += w * gh * m.kze2 * cv;
    nv[4] += w * m.kze2 * m.kze2 * cv;
    nT[0] += w * gh * cT;
    nT[1] += w * m.kze2 * cT;
    nT[2] += w * lh2 * cT;
    nT[3] += w * gh * m.kze2 * cT;
    nT[4] += w * m.kze2 * m.kze2 * cT;
  });
  r.gradh_v = std::sqrt(nv[0] * g.volume());
  r.dz_v = std::sqrt(nv[1] * g.volume());
  r.laph_v = std::sqrt(nv[2] * g.volume());
  r.gradh_dz_v = std::sqrt(nv[3] * g.volume());
  r.dzz_v = std::sqrt(nv[4] * g.volume());
  r.gradh_T = std::sqrt(nT[0] * g.volume());
  r.dz_T = std::sqrt(nT[1] * g.volume());
  r.laph_T = std::sqrt(nT[2] * g.volume());
  r.gradh_dz_T = std::sqrt(nT[3] * g.volume());
  r.dzz_T = std::sqrt(nT[4] * g.volume());

  r.energy_residual = (prev != nullptr) ? energy_budget_residual(*prev, s, dt, p) : 0.0;
  r.constraint_residual = constraint_residual(s);
  r.parity_drift = parity_drift(s);
  r.lq_growth_ratio = lq_growth_ratio(s, initial);

  AprioriVectors ab = apriori_monitor(s, p, NormRoute::Parseval);
  r.a = ab.a;
  r.b = ab.b;
  return r;
}

}  // namespace hpe
