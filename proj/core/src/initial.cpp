#include "hpe/initial.hpp"

#include <cmath>
#include <numbers>

#include "hpe/random_fields.hpp"
#include "hpe/spectral.hpp"

namespace hpe {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

State heat_mode_state(const Grid& g) {
  ScalarField v1 = sample(g, Parity::Even, [](double, double y, double) { return std::sin(kTwoPi * y); });
  ScalarField v2(g, Parity::Even);
  ScalarField T(g, Parity::Odd);
  return make_state(std::move(v1), std::move(v2), std::move(T), 0.0);
}

State taylor_green_like_state(const Grid& g) {
  const double h = g.h;
  ScalarField v1 = sample(g, Parity::Even, [h](double x, double y, double z) {
    return std::sin(kTwoPi * x) * std::cos(kTwoPi * y) * std::cos(std::numbers::pi * z / h);
  });
  ScalarField v2 = sample(g, Parity::Even, [](double x, double y, double) {
    return -std::cos(kTwoPi * x) * std::sin(kTwoPi * y);
  });
  ScalarField T = sample(g, Parity::Odd, [h](double x, double, double z) {
    return 0.5 * std::sin(std::numbers::pi * z / h) * std::cos(kTwoPi * x);
  });
  return make_state(std::move(v1), std::move(v2), std::move(T), 0.0);
}

State random_bandlimited_state(const Grid& g, unsigned long seed, double decay, double amplitude) {
  const int cap = std::min({spectral::dealias_cutoff(g.nx), spectral::dealias_cutoff(g.ny),
                            spectral::dealias_cutoff(g.nz)});
  RandomFieldSpec spec;
  spec.max_mode = cap;
  spec.decay = decay;

  spec.seed = seed;
  ScalarField v1 = random_field(g, Parity::Even, spec);
  spec.seed = seed + 1;
  ScalarField v2 = random_field(g, Parity::Even, spec);
  spec.seed = seed + 2;
  ScalarField T = random_field(g, Parity::Odd, spec);

  // Normalize the velocity magnitude to `amplitude` at the collocation max.
  double m = 0.0;
  for (std::size_t n = 0; n < g.size(); ++n)
    m = std::max(m, std::hypot(v1.values[n], v2.values[n]));
  const double sv = (m > 0.0) ? amplitude / m : 1.0;
  const double sT = 0.3 * sv;
  v1 = sv * v1;
  v2 = sv * v2;
  T = sT * T;
  return make_state(std::move(v1), std::move(v2), std::move(T), 0.0);
}

}  // namespace hpe
