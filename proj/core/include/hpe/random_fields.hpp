#pragma once

#include "hpe/field.hpp"
#include "hpe/grid.hpp"

namespace hpe {

/// Band-limited Gaussian random field with coefficient amplitudes
/// ~ amplitude * (1 + |m|^2)^(-decay/2) on integer modes |m_x|,|m_y|,|m_z|
/// <= max_mode, drawn in a fixed mode order so that one seed names one
/// function independently of the grid it is materialized on (any grid
/// resolving the band gives the same trigonometric polynomial).  Parity in z
/// and realness are imposed exactly on the coefficients.
struct RandomFieldSpec {
  unsigned long seed = 1;
  int max_mode = 8;
  double decay = 2.0;
  double amplitude = 1.0;
};

ScalarField random_field(const Grid& g, Parity parity, const RandomFieldSpec& spec);

}  // namespace hpe
