#include "hpe/stepper.hpp"

#include <cmath>
#include <string>

#include "hpe/errors.hpp"
#include "hpe/spectral.hpp"

namespace hpe {

namespace sp = hpe::spectral;

double cfl_dt(const State& s, const StepControls& c) {
  const Grid& g = s.v[0].grid;
  constexpr double kQuiet = 1e-12;
  double dt = c.dt_max;
  const double m1 = max_abs(s.v[0]);
  const double m2 = max_abs(s.v[1]);
  const double mw = max_abs(diagnose_w(s.v));
  if (m1 > kQuiet) dt = std::min(dt, c.cfl * g.dx() / m1);
  if (m2 > kQuiet) dt = std::min(dt, c.cfl * g.dy() / m2);
  if (mw > kQuiet) dt = std::min(dt, c.cfl * g.dz() / mw);
  if (dt < c.dt_min)
    throw StepTooSmall("CFL step " + std::to_string(dt) + " fell below dt_min at t = " +
                           std::to_string(s.t),
                       s.t);
  return dt;
}

namespace {

/// Crank-Nicolson (or backward Euler) solve of the diagonal dissipation plus
/// the given explicit increment, followed by the barotropic projection.
/// theta = 0.5 gives CN, theta = 1 backward Euler.
State solve_implicit(const State& s, const VectorField& ev, const ScalarField& eT, double dt,
                     double eps, double theta) {
  const Grid& g = s.v[0].grid;
  sp::SpectralField sv1 = sp::analyze(s.v[0]);
  sp::SpectralField sv2 = sp::analyze(s.v[1]);
  sp::SpectralField sT = sp::analyze(s.T);
  sp::SpectralField se1 = sp::analyze(ev[0]);
  sp::SpectralField se2 = sp::analyze(ev[1]);
  sp::SpectralField seT = sp::analyze(eT);

  const int hx = g.nx / 2 + 1;
  for (int k = 0; k < g.nz; ++k) {
    const double kz = sp::wavenumber_z(g, k);
    for (int j = 0; j < g.ny; ++j) {
      const double ky = sp::wavenumber_y(g, j);
      for (int i = 0; i < hx; ++i) {
        const double kx = sp::wavenumber_x(g, i);
        const double lam = -(kx * kx + ky * ky) - eps * kz * kz;
        const double denom = 1.0 - theta * dt * lam;
        const double keep = 1.0 + (1.0 - theta) * dt * lam;
        const std::size_t n = sv1.index(i, j, k);
        sv1.coef[n] = (keep * sv1.coef[n] + dt * se1.coef[n]) / denom;
        sv2.coef[n] = (keep * sv2.coef[n] + dt * se2.coef[n]) / denom;
        sT.coef[n] = (keep * sT.coef[n] + dt * seT.coef[n]) / denom;
      }
    }
  }

  // Project the depth mean before leaving spectral space.
  for (int j = 0; j < g.ny; ++j) {
    const double ky = sp::wavenumber_y(g, j);
    for (int i = 0; i < hx; ++i) {
      const double kx = sp::wavenumber_x(g, i);
      const double k2 = kx * kx + ky * ky;
      if (k2 == 0.0) continue;
      const std::size_t n = sv1.index(i, j, 0);
      const std::complex<double> kdotv = kx * sv1.coef[n] + ky * sv2.coef[n];
      sv1.coef[n] -= kx * kdotv / k2;
      sv2.coef[n] -= ky * kdotv / k2;
    }
  }

  State out;
  out.v[0] = sp::synthesize(sv1, Parity::Even);
  out.v[1] = sp::synthesize(sv2, Parity::Even);
  out.T = sp::synthesize(sT, Parity::Odd);
  out.t = s.t + dt;
  return out;
}

void check_finite(const State& s) {
  if (!all_finite(s.v[0]) || !all_finite(s.v[1]) || !all_finite(s.T))
    throw NonFinite("non-finite value in state at t = " + std::to_string(s.t), s.t);
}

Tendency combine(const Tendency& a, double ca, const Tendency& b, double cb) {
  Tendency out;
  for (int c = 0; c < 2; ++c) {
    out.dv[c] = ca * a.dv[c];
    add_scaled(out.dv[c], cb, b.dv[c]);
  }
  out.dT = ca * a.dT;
  add_scaled(out.dT, cb, b.dT);
  return out;
}

}  // namespace

Stepper::Stepper(State initial, Params params, StepControls controls)
    : state_(std::move(initial)), params_(params), controls_(controls) {}

State Stepper::imex_update(const Tendency& expl, double dt, bool crank_nicolson) const {
  return solve_implicit(state_, expl.dv, expl.dT, dt, params_.eps, crank_nicolson ? 0.5 : 1.0);
}

void Stepper::advance(double dt) {
  if (!(dt > 0.0)) throw ValidationError("dt", "step size must be positive");
  Tendency e_now = explicit_tendency(state_, params_);

  if (controls_.scheme == Scheme::ImexEuler) {
    state_ = solve_implicit(state_, e_now.dv, e_now.dT, dt, params_.eps, 1.0);
    check_finite(state_);
    return;
  }

  if (!have_history_) {
    // Heun start: predict with the current tendency, correct with the
    // trapezoidal average; Crank-Nicolson on the dissipation throughout.
    State pred = imex_update(e_now, dt, true);
    Tendency e_pred = explicit_tendency(pred, params_);
    Tendency e_avg = combine(e_now, 0.5, e_pred, 0.5);
    state_ = solve_implicit(state_, e_avg.dv, e_avg.dT, dt, params_.eps, 0.5);
    have_history_ = true;
  } else {
    // Variable-step AB2 extrapolation of the explicit terms to t + dt/2.
    const double r = 0.5 * dt / prev_dt_;
    Tendency e_ab = combine(e_now, 1.0 + r, prev_explicit_, -r);
    state_ = solve_implicit(state_, e_ab.dv, e_ab.dT, dt, params_.eps, 0.5);
  }
  prev_explicit_ = std::move(e_now);
  prev_dt_ = dt;
  check_finite(state_);
}

State step(const State& s, double dt, const StepControls& c, const Params& p) {
  Stepper st(s, p, c);
  st.advance(dt);
  return st.state();
}

RunResult run(State initial, const Params& params, const StepControls& controls,
              const RunHooks& hooks) {
  if (params.t_end < initial.t)
    throw ValidationError("t_end", "t_end must not precede the initial time");

  // Keep the state band-limited from the start so the discrete energy
  // identities are exact along the trajectory.
  initial.v[0] = sp::dealias(initial.v[0]);
  initial.v[1] = sp::dealias(initial.v[1]);
  initial.T = sp::dealias(initial.T);
  barotropic_project(initial.v);

  RunResult out;
  const State init_copy = initial;
  Stepper stepper(std::move(initial), params, controls);

  auto emit = [&](const State* prev, double dt) {
    DiagnosticsRecord rec =
        record_diagnostics(stepper.state(), prev, dt, init_copy, params);
    if (hooks.on_record) hooks.on_record(stepper.state(), rec);
    out.records.push_back(std::move(rec));
  };

  emit(nullptr, 0.0);

  const int cadence = hooks.cadence > 0 ? hooks.cadence : 1;
  long step_count = 0;
  // Absolute guard against dt underflow stalling the loop at t_end.
  const double t_end = params.t_end;
  try {
    while (stepper.state().t < t_end - 1e-14 * std::max(1.0, std::abs(t_end))) {
      StepControls c = controls;
      double dt = cfl_dt(stepper.state(), c);
      dt = std::min(dt, t_end - stepper.state().t);
      State prev = stepper.state();
      stepper.advance(dt);
      ++step_count;
      const bool final_step =
          stepper.state().t >= t_end - 1e-14 * std::max(1.0, std::abs(t_end));
      if (step_count % cadence == 0 || final_step) emit(&prev, dt);
    }
  } catch (...) {
    if (hooks.on_failure) hooks.on_failure(stepper.state());
    throw;
  }

  out.final_state = stepper.state();
  return out;
}

}  // namespace hpe
