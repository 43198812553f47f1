#pragma once

#include "hpe/domain.hpp"

namespace hpe {

/// v = (sin(2 pi y), 0), T = 0: an exact solution of the full nonlinear
/// system decaying like e^{-4 pi^2 t}.
State heat_mode_state(const Grid& g);

/// A cellular flow with vertical structure and a temperature anomaly; the
/// projection activates every term of the equations.
State taylor_green_like_state(const Grid& g);

/// Band-limited random data (see RandomFieldSpec); velocity amplitude as
/// given, temperature at 0.3 of it.
State random_bandlimited_state(const Grid& g, unsigned long seed, double decay, double amplitude);

}  // namespace hpe
