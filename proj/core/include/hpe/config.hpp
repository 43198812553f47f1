#pragma once

#include <string>

#include "hpe/domain.hpp"
#include "hpe/stepper.hpp"

namespace hpe {

enum class InitialConditionKind { HeatMode, TaylorGreenLike, RandomBandlimited, Snapshot };

/// A fully validated run configuration.  Config files are line-oriented
/// `key = value` text with `#` comments; unknown keys are errors.
struct RunConfig {
  int nx = 32, ny = 32, nz = 32;
  Params params;                 // h, f0, eps, cfl, dt_max, t_end, seed
  StepControls controls;         // scheme, cfl, dt_max, dt_min
  InitialConditionKind ic = InitialConditionKind::RandomBandlimited;
  std::string ic_snapshot_path;  // when ic == Snapshot
  double ic_decay = 2.0;
  double ic_amplitude = 1.0;
  int diag_cadence = 1;
  int snapshot_cadence = 0;      // 0 disables intermediate snapshots
  double growth_ceiling = 50.0;  // lq growth-ratio ceiling
  double maxprin_c = -1.0;       // tolerance factor; <0 = default 10*||T*_0||_inf
  std::string out_dir = ".";

  Grid grid() const { return Grid(nx, ny, nz, params.h); }
};

/// Parses and validates config text.  Throws ParseError (with line number)
/// for malformed lines or unknown keys, ValidationError (naming the field)
/// for out-of-range values.
RunConfig parse_config(const std::string& text);

/// Reads a file and parses it; referenced snapshot paths must exist.
RunConfig load_config(const std::string& path);

/// Builds the configured initial state.
State initial_state(const RunConfig& cfg);

}  // namespace hpe
