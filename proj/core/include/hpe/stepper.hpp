#pragma once

#include <functional>
#include <vector>

#include "hpe/diagnostics.hpp"
#include "hpe/domain.hpp"
#include "hpe/tendency.hpp"

namespace hpe {

enum class Scheme { ImexCnab2, ImexEuler };

struct StepControls {
  Scheme scheme = Scheme::ImexCnab2;
  double cfl = 0.5;
  double dt_max = 1e-3;
  double dt_min = 1e-12;
};

/// CFL-limited step: min(dt_max, cfl * min(dx/max|v1|, dy/max|v2|, dz/max|w|)),
/// dropping a term when its velocity max is below 1e-12.  Throws StepTooSmall
/// below dt_min.
double cfl_dt(const State& s, const StepControls& c);

/// Advances states with horizontal diffusion (and the eps vertical
/// regularization) treated by Crank-Nicolson per Fourier mode and everything
/// else explicit: second-order Adams-Bashforth once history exists, a Heun
/// predictor-corrector on the first step.  The barotropic projection is
/// applied after every stage.
class Stepper {
 public:
  Stepper(State initial, Params params, StepControls controls);

  const State& state() const { return state_; }
  const Params& params() const { return params_; }

  /// One IMEX step of size dt; t advances to t + dt.  Throws NonFinite when
  /// the update produces a non-finite value.
  void advance(double dt);

 private:
  State state_;
  Params params_;
  StepControls controls_;
  bool have_history_ = false;
  double prev_dt_ = 0.0;
  Tendency prev_explicit_;

  State imex_update(const Tendency& expl, double dt, bool crank_nicolson) const;
};

/// One self-contained step (no Adams-Bashforth history): Heun/CN for the
/// CNAB2 scheme, backward-Euler/forward-Euler for ImexEuler.
State step(const State& s, double dt, const StepControls& c, const Params& p);

struct RunHooks {
  /// Diagnostics cadence in steps (a record is always emitted at t = 0 and
  /// at the final time).
  int cadence = 1;
  std::function<void(const State&, const DiagnosticsRecord&)> on_record;
  /// Called with the last healthy state before a blow-up error propagates.
  std::function<void(const State&)> on_failure;
};

struct RunResult {
  State final_state;
  std::vector<DiagnosticsRecord> records;
};

/// Advances to params.t_end with CFL-adaptive steps, recording diagnostics.
/// Deterministic for fixed inputs.  Propagates StepTooSmall / NonFinite with
/// the failing time attached.
RunResult run(State initial, const Params& params, const StepControls& controls,
              const RunHooks& hooks = {});

}  // namespace hpe
