#include "hpe/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hpe/errors.hpp"
#include "hpe/spectral.hpp"

namespace hpe::ineq {

namespace sp = hpe::spectral;

namespace {

double l2_norm(const ScalarField& f) {
  double s = 0.0;
  for (double v : f.values) s += v * v;
  return std::sqrt(s * f.grid.cell_volume());
}

double gradh_l2(const ScalarField& f) {
  ScalarField fx = sp::derivative(f, Axis::X);
  ScalarField fy = sp::derivative(f, Axis::Y);
  double s = 0.0;
  for (std::size_t n = 0; n < fx.values.size(); ++n)
    s += fx.values[n] * fx.values[n] + fy.values[n] * fy.values[n];
  return std::sqrt(s * f.grid.cell_volume());
}

/// ||f||_2^{1/2} (||f||_2^{1/2} + ||grad_H f||_2^{1/2}), with the lower-order
/// term dropped on request.
double anisotropic_factor(const ScalarField& f, bool drop_lower) {
  const double l2 = std::sqrt(l2_norm(f));
  const double g2 = std::sqrt(gradh_l2(f));
  return drop_lower ? l2 * g2 : l2 * (l2 + g2);
}

double logaddexp(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double m = std::max(a, b);
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

}  // namespace

LadyzhenskayaResult ladyzhenskaya_ratio(const ScalarField& phi, const ScalarField& varphi,
                                        const ScalarField& third, LadyzhenskayaForm form,
                                        const LadyzhenskayaOptions& opt) {
  require_same_grid(phi, varphi);
  require_same_grid(phi, third);
  const Grid& g = phi.grid;

  // The integrand of the second column and the third-factor bound.
  std::vector<double> third_mag(g.size());
  double third_factor;
  if (form == LadyzhenskayaForm::Product) {
    for (std::size_t n = 0; n < g.size(); ++n) third_mag[n] = std::abs(third.values[n]);
    third_factor = anisotropic_factor(third, opt.drop_psi_lower);
  } else {
    ScalarField px = sp::derivative(third, Axis::X);
    ScalarField py = sp::derivative(third, Axis::Y);
    for (std::size_t n = 0; n < g.size(); ++n)
      third_mag[n] = std::hypot(px.values[n], py.values[n]);
    ScalarField pxx = sp::derivative(px, Axis::X);
    ScalarField pxy = sp::derivative(px, Axis::Y);
    ScalarField pyy = sp::derivative(py, Axis::Y);
    double hess = 0.0;
    for (std::size_t n = 0; n < g.size(); ++n)
      hess += pxx.values[n] * pxx.values[n] + 2.0 * pxy.values[n] * pxy.values[n] +
              pyy.values[n] * pyy.values[n];
    hess = std::sqrt(hess * g.cell_volume());
    third_factor = std::sqrt(max_abs(third)) * std::sqrt(hess);
  }

  // LHS = int_M (int |phi| dz)(int |varphi| * third_mag dz) dxdy.
  LadyzhenskayaResult r;
  const double dz = g.dz();
  const double dxdy = g.dx() * g.dy();
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      double ca = 0.0, cb = 0.0;
      for (int k = 0; k < g.nz; ++k) {
        const std::size_t n = g.index(i, j, k);
        ca += std::abs(phi.values[n]);
        cb += std::abs(varphi.values[n]) * third_mag[n];
      }
      r.lhs += ca * cb;
    }
  r.lhs *= dz * dz * dxdy;

  r.rhs_branch1 = anisotropic_factor(phi, opt.drop_phi_lower) * l2_norm(varphi) * third_factor;
  r.rhs_branch2 = l2_norm(phi) * anisotropic_factor(varphi, opt.drop_varphi_lower) * third_factor;
  r.rhs = std::min(r.rhs_branch1, r.rhs_branch2);

  if (r.lhs == 0.0) {
    r.ratio = 0.0;
    return r;
  }
  if (r.rhs == 0.0)
    throw DegenerateRHS("Ladyzhenskaya bound is zero while the left side is positive");
  r.ratio = r.lhs / r.rhs;
  return r;
}

std::vector<double> ladyzhenskaya_ratios(const Grid& g, const SupStudy& study,
                                         LadyzhenskayaForm form) {
  std::vector<double> out;
  out.reserve(study.samples);
  for (int s = 0; s < study.samples; ++s) {
    auto part = [&](int comp, Parity p) {
      RandomFieldSpec spec;
      spec.seed = study.seed + 1000003ull * static_cast<unsigned long>(s) + comp;
      spec.max_mode = study.max_mode;
      spec.decay = study.decay;
      return random_field(g, p, spec);
    };
    const Parity pa = (s % 2 == 0) ? Parity::Even : Parity::Odd;
    const Parity pb = (s % 2 == 0) ? Parity::Odd : Parity::Even;
    ScalarField phi = part(0, pa);
    ScalarField varphi = part(1, pb);
    ScalarField third = part(2, pa);
    out.push_back(ladyzhenskaya_ratio(phi, varphi, third, form).ratio);
  }
  return out;
}

// ---------------------------------------------------------------------------
// log-Sobolev
// ---------------------------------------------------------------------------

BoxField box_from_field(const ScalarField& f) {
  BoxField b;
  b.nx = f.grid.nx;
  b.ny = f.grid.ny;
  b.nz = f.grid.nz;
  b.lx = 1.0;
  b.ly = 1.0;
  b.lz = 2.0 * f.grid.h;
  b.values = f.values;
  return b;
}

namespace {

double box_lr_norm(const BoxField& f, double r) {
  if (std::isinf(r)) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::abs(v));
    return m;
  }
  double s = 0.0;
  for (double v : f.values) s += std::pow(std::abs(v), r);
  return std::pow(s * f.cell(), 1.0 / r);
}

/// p-norm of the gradient magnitude, computed spectrally on the box.
double box_grad_lp(const BoxField& f, double p) {
  Grid g(f.nx, f.ny, f.nz, 0.5 * f.lz);
  ScalarField w(g, Parity::None, f.values);
  sp::SpectralField s = sp::analyze(w);
  sp::SpectralField sx = s, sy = s;
  sp::differentiate_inplace(sx, Axis::X);
  sp::differentiate_inplace(sy, Axis::Y);
  sp::differentiate_inplace(s, Axis::Z);
  ScalarField gx = sp::synthesize(sx, Parity::None);
  ScalarField gy = sp::synthesize(sy, Parity::None);
  ScalarField gz = sp::synthesize(s, Parity::None);
  // Grid wavenumbers assume unit horizontal periods; rescale to the box.
  const double ax = 1.0 / f.lx, ay = 1.0 / f.ly;
  double acc = 0.0;
  for (std::size_t n = 0; n < gx.values.size(); ++n) {
    const double m = std::sqrt(ax * gx.values[n] * ax * gx.values[n] +
                               ay * gy.values[n] * ay * gy.values[n] +
                               gz.values[n] * gz.values[n]);
    acc += std::pow(m, p);
  }
  return std::pow(acc * f.cell(), 1.0 / p);
}

}  // namespace

LogSobolevResult log_sobolev_ratio(const LogSobolevQuery& q) {
  if (!(q.p > 3.0)) throw ValidationError("p", "the embedding needs p > N = 3");
  if (!(q.lambda > 0.0)) throw ValidationError("lambda", "lambda must be positive");
  if (!(q.R > 0.0)) throw ValidationError("R", "R must be positive");
  constexpr double N = 3.0;

  LogSobolevResult r;
  r.lhs = box_lr_norm(q.F, std::numeric_limits<double>::infinity());

  for (double rr : q.r_samples) {
    if (!(rr >= 2.0)) throw ValidationError("r_samples", "sampled exponents must be >= 2");
    const double term =
        box_lr_norm(q.F, rr) / (std::pow(rr, q.lambda) * std::pow(q.R, N / rr));
    r.sup_term = std::max(r.sup_term, term);
  }

  const double fp = box_lr_norm(q.F, q.p);
  const double gp = box_grad_lp(q.F, q.p);
  r.log_arg = std::numbers::e + fp / std::pow(q.R, N / q.p) + gp / std::pow(q.R, N / q.p - 1.0);
  r.rhs = std::max(1.0, r.sup_term) * std::pow(std::log(r.log_arg), q.lambda);
  r.ratio = (r.lhs == 0.0) ? 0.0 : r.lhs / r.rhs;
  return r;
}

LogSobolevQuery rescale(const LogSobolevQuery& q, double s) {
  if (!(s > 0.0)) throw ValidationError("s", "scale factor must be positive");
  LogSobolevQuery out = q;
  out.F.lx = q.F.lx / s;
  out.F.ly = q.F.ly / s;
  out.F.lz = q.F.lz / s;
  out.R = q.R / s;
  return out;
}

OscillatoryFamilyResult log_sobolev_family_study(int kmax, int nx, int nyz, double p,
                                                 double lambda) {
  auto bump = [](double t) {
    const double s = 2.0 * t - 1.0;
    const double d = 1.0 - s * s;
    return d <= 0.0 ? 0.0 : std::exp(1.0 - 1.0 / d);
  };
  OscillatoryFamilyResult out;
  BoxField f;
  f.nx = nx;
  f.ny = nyz;
  f.nz = nyz;
  f.values.resize(f.size());

  for (int k = 1; k <= kmax; ++k) {
    std::size_t n = 0;
    for (int kz = 0; kz < f.nz; ++kz) {
      const double bz = bump(static_cast<double>(kz) / f.nz);
      for (int jy = 0; jy < f.ny; ++jy) {
        const double by = bump(static_cast<double>(jy) / f.ny);
        for (int ix = 0; ix < f.nx; ++ix, ++n) {
          const double x = static_cast<double>(ix) / f.nx;
          f.values[n] = std::sin(2.0 * std::numbers::pi * k * x) * bump(x) * by * bz;
        }
      }
    }
    LogSobolevQuery q;
    q.F = f;
    q.p = p;
    q.lambda = lambda;
    LogSobolevResult r = log_sobolev_ratio(q);
    out.k.push_back(k);
    out.ratio.push_back(r.ratio);
    out.lhs.push_back(r.lhs);
    out.rhs.push_back(r.rhs);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Gronwall
// ---------------------------------------------------------------------------

namespace {

void validate(const GronwallSpec& spec) {
  if (spec.n < 1) throw ValidationError("n", "system size must be >= 1");
  if (!(spec.alpha >= 1.0)) throw ValidationError("alpha", "alpha must be >= 1");
  if (!(spec.zeta >= 1.0)) throw ValidationError("zeta", "zeta must be >= 1");
  if (static_cast<int>(spec.A0.size()) != spec.n)
    throw ValidationError("A0", "need exactly n initial values");
  for (double a : spec.A0)
    if (!(a >= std::numbers::e)) throw ValidationError("A0", "initial values must be >= e");
  if (!spec.K) throw ValidationError("K", "coefficient function missing");
}

/// Composite Simpson on [0, t]; K is smooth in every use here.
double integrate_K(const std::function<double(double)>& K, double t) {
  if (t == 0.0) return 0.0;
  const int panels = 2048;
  const double dt = t / (2 * panels);
  double acc = K(0.0) + K(t);
  for (int i = 1; i < 2 * panels; ++i) acc += K(i * dt) * (i % 2 == 1 ? 4.0 : 2.0);
  return acc * dt / 3.0;
}

constexpr double kLogDomainThreshold = 700.0;

}  // namespace

GronwallBound gronwall_bound(const GronwallSpec& spec, double t) {
  validate(spec);
  GronwallBound b;

  // Cascade script-A_i(0) = A_i(0) + zeta script-A_{i-1}^{alpha+1}, tracked in
  // both linear and log form (the tower can overflow).
  double log_casc = std::log(spec.A0[0]);
  b.cascade.push_back(spec.A0[0]);
  for (int i = 1; i < spec.n; ++i) {
    log_casc = logaddexp(std::log(spec.A0[i]),
                         std::log(spec.zeta) + (spec.alpha + 1.0) * log_casc);
    b.cascade.push_back(std::exp(log_casc));
  }
  b.log_cascade_A0 = log_casc;
  b.cascade_A0 = std::exp(log_casc);

  b.int_K = integrate_K(spec.K, t);
  const double pref = std::pow(spec.alpha + 1.0, spec.n - 1);
  b.q0 = std::exp(pref * b.int_K) * log_casc;
  b.degenerate_int_K = (b.int_K == 0.0);

  if (b.q0 > kLogDomainThreshold) {
    b.log_domain = true;
    b.log_q1 = b.q0;
    b.log_Q = b.degenerate_int_K ? -std::numeric_limits<double>::infinity()
                                 : std::log(pref * b.int_K) + b.q0 + std::log(b.q0);
    b.q1 = std::numeric_limits<double>::infinity();
    b.Q = b.degenerate_int_K ? 0.0 : std::numeric_limits<double>::infinity();
  } else {
    b.q1 = std::exp(b.q0);
    b.Q = pref * b.int_K * b.q1 * b.q0;
    b.log_q1 = b.q0;
    b.log_Q = b.degenerate_int_K ? -std::numeric_limits<double>::infinity()
                                 : std::log(pref * b.int_K) + b.q0 + std::log(b.q0);
  }
  return b;
}

namespace {

/// Right-hand side of the saturated system in y_i = log A_i variables, with
/// the cumulative dissipation integrals appended.
struct SaturatedSystem {
  const GronwallSpec& spec;
  const std::vector<double>& c;

  void operator()(double t, const std::vector<double>& x, std::vector<double>& dx) const {
    const int n = spec.n;
    double ymax = x[0];
    for (int i = 1; i < n; ++i) ymax = std::max(ymax, x[i]);
    double lse = 0.0;
    for (int i = 0; i < n; ++i) lse += std::exp(x[i] - ymax);
    const double m = spec.K(t) * (ymax + std::log(lse));

    for (int i = 0; i < n; ++i) {
      const double yi = x[i];
      const double bi_over_ai = c[i] * (1.0 - std::exp(1.0 - yi));
      double coupling = 0.0;
      if (i > 0 && c[i - 1] > 0.0) {
        const double ym = x[i - 1];
        const double log_b = std::log(c[i - 1]) + ym + std::log1p(-std::exp(1.0 - ym));
        if (std::isfinite(log_b))
          coupling = spec.zeta * std::exp(spec.alpha * ym + log_b - yi);
      }
      dx[i] = m - bi_over_ai + coupling;
      dx[n + i] = c[i] * (std::exp(yi) - std::numbers::e);  // d/dt int B_i
    }
  }
};

/// Cash-Karp embedded RK4(5) with per-component error control.
void rk45_integrate(const SaturatedSystem& f, double t0, double t1, std::vector<double>& x,
                    double rtol) {
  static const double a2 = 0.2, a3 = 0.3, a4 = 0.6, a5 = 1.0, a6 = 0.875;
  static const double b21 = 0.2;
  static const double b31 = 3.0 / 40, b32 = 9.0 / 40;
  static const double b41 = 0.3, b42 = -0.9, b43 = 1.2;
  static const double b51 = -11.0 / 54, b52 = 2.5, b53 = -70.0 / 27, b54 = 35.0 / 27;
  static const double b61 = 1631.0 / 55296, b62 = 175.0 / 512, b63 = 575.0 / 13824,
                      b64 = 44275.0 / 110592, b65 = 253.0 / 4096;
  static const double c1 = 37.0 / 378, c3 = 250.0 / 621, c4 = 125.0 / 594, c6 = 512.0 / 1771;
  static const double d1 = c1 - 2825.0 / 27648, d3 = c3 - 18575.0 / 48384,
                      d4 = c4 - 13525.0 / 55296, d5 = -277.0 / 14336, d6 = c6 - 0.25;

  const std::size_t m = x.size();
  std::vector<double> k1(m), k2(m), k3(m), k4(m), k5(m), k6(m), xt(m);
  double t = t0;
  double dt = (t1 - t0) / 256.0;
  const double atol = 1e-13;
  int guard = 0;

  while (t < t1 && ++guard < 2000000) {
    dt = std::min(dt, t1 - t);
    f(t, x, k1);
    for (std::size_t i = 0; i < m; ++i) xt[i] = x[i] + dt * b21 * k1[i];
    f(t + a2 * dt, xt, k2);
    for (std::size_t i = 0; i < m; ++i) xt[i] = x[i] + dt * (b31 * k1[i] + b32 * k2[i]);
    f(t + a3 * dt, xt, k3);
    for (std::size_t i = 0; i < m; ++i)
      xt[i] = x[i] + dt * (b41 * k1[i] + b42 * k2[i] + b43 * k3[i]);
    f(t + a4 * dt, xt, k4);
    for (std::size_t i = 0; i < m; ++i)
      xt[i] = x[i] + dt * (b51 * k1[i] + b52 * k2[i] + b53 * k3[i] + b54 * k4[i]);
    f(t + a5 * dt, xt, k5);
    for (std::size_t i = 0; i < m; ++i)
      xt[i] = x[i] + dt * (b61 * k1[i] + b62 * k2[i] + b63 * k3[i] + b64 * k4[i] + b65 * k5[i]);
    f(t + a6 * dt, xt, k6);

    double err = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double inc = dt * (c1 * k1[i] + c3 * k3[i] + c4 * k4[i] + c6 * k6[i]);
      const double e = dt * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i]);
      const double scale = atol + rtol * (std::abs(x[i]) + std::abs(inc));
      err = std::max(err, std::abs(e) / scale);
      xt[i] = x[i] + inc;
    }
    if (err <= 1.0) {
      x = xt;
      t += dt;
    }
    const double grow = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
    dt *= std::clamp(grow, 0.2, 5.0);
  }
}

}  // namespace

GronwallTrajectories integrate_saturated_system(const GronwallSpec& spec,
                                                const std::vector<double>& dissipation_c,
                                                int checkpoints, double rtol) {
  validate(spec);
  if (static_cast<int>(dissipation_c.size()) != spec.n)
    throw ValidationError("dissipation_c", "need one coefficient per component");
  for (double c : dissipation_c)
    if (c < 0.0) throw ValidationError("dissipation_c", "B_i must be nonnegative");

  SaturatedSystem sys{spec, dissipation_c};
  std::vector<double> x(2 * spec.n, 0.0);
  for (int i = 0; i < spec.n; ++i) x[i] = std::log(spec.A0[i]);

  GronwallTrajectories out;
  auto push = [&](double t) {
    out.times.push_back(t);
    std::vector<double> a(spec.n), ib(spec.n);
    for (int i = 0; i < spec.n; ++i) {
      a[i] = std::exp(x[i]);
      ib[i] = x[spec.n + i];
    }
    out.A.push_back(std::move(a));
    out.int_B.push_back(std::move(ib));
  };

  push(0.0);
  for (int s = 1; s <= checkpoints; ++s) {
    const double t0 = spec.t_end * (s - 1) / checkpoints;
    const double t1 = spec.t_end * s / checkpoints;
    rk45_integrate(sys, t0, t1, x, rtol);
    push(t1);
  }
  return out;
}

GronwallVerifyResult gronwall_verify(const GronwallSpec& spec, const GronwallTrajectories& traj,
                                     double slack) {
  validate(spec);
  GronwallVerifyResult r;
  r.checkpoints = static_cast<int>(traj.times.size());
  r.worst_log_margin = std::numeric_limits<double>::infinity();
  r.max_cascade_excess = -std::numeric_limits<double>::infinity();
  r.pass = true;

  for (std::size_t s = 0; s < traj.times.size(); ++s) {
    const double t = traj.times[s];
    GronwallBound b = gronwall_bound(spec, t);

    double lhs = 0.0;
    double sumA = 0.0;
    for (int i = 0; i < spec.n; ++i) {
      sumA += traj.A[s][i];
      lhs += traj.A[s][i] + traj.int_B[s][i];
    }
    const double log_lhs = std::log(lhs);

    // The cascade argument bounds sum A + sum int B by script-A_n(0) + Q(t).
    const double log_Qeff = logaddexp(b.log_cascade_A0, b.log_Q);
    const double margin = log_Qeff + std::log1p(slack) - log_lhs;
    if (margin < r.worst_log_margin) {
      r.worst_log_margin = margin;
      r.t_worst = t;
    }
    if (margin < 0.0) r.pass = false;
    if (std::log(sumA) <= b.log_Q) ++r.printed_bound_held;

    r.max_cascade_excess = std::max(r.max_cascade_excess, sumA / b.q1 - 1.0);
  }
  return r;
}

RandomGronwallDraw random_gronwall_spec(unsigned long seed) {
  std::mt19937_64 rng(seed);
  auto uni = [&](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };

  RandomGronwallDraw d;
  d.spec.n = std::uniform_int_distribution<int>(1, 4)(rng);
  d.spec.alpha = static_cast<double>(std::uniform_int_distribution<int>(1, 3)(rng));
  d.spec.zeta = uni(1.0, 2.0);
  for (int i = 0; i < d.spec.n; ++i) d.spec.A0.push_back(std::numbers::e + uni(0.0, 1.0));
  d.spec.t_end = uni(0.25, 1.0);
  for (int i = 0; i < d.spec.n; ++i)
    d.dissipation_c.push_back(uni(0.0, 1.0) < 0.25 ? 0.0 : uni(0.0, 0.2));

  double k0 = uni(0.01, 1.0), k1 = uni(0.0, 1.0);
  const double omega = uni(1.0, 6.0), phase = uni(0.0, 2.0 * std::numbers::pi);

  // Cap q0(t_end) so saturated trajectories stay representable in doubles.
  GronwallSpec probe = d.spec;
  probe.K = [=](double t) { return k0 + 0.5 * k1 * (1.0 + std::sin(omega * t + phase)); };
  GronwallBound b = gronwall_bound(probe, d.spec.t_end);
  const double pref = std::pow(d.spec.alpha + 1.0, d.spec.n - 1);
  const double cap = 250.0;
  const double budget = std::log(cap / b.log_cascade_A0) / pref;  // max allowed int K
  if (b.int_K > 0.0 && b.int_K > budget) {
    const double shrink = uni(0.3, 0.95) * budget / b.int_K;
    k0 *= shrink;
    k1 *= shrink;
  }
  d.spec.K = [=](double t) { return k0 + 0.5 * k1 * (1.0 + std::sin(omega * t + phase)); };
  return d;
}

}  // namespace hpe::ineq
