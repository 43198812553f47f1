#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hpe/diagnostics.hpp"
#include "hpe/domain.hpp"
#include "hpe/errors.hpp"
#include "hpe/random_fields.hpp"

using namespace hpe;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

TEST_CASE("even extension of z^2 reproduces z^2 on the whole box") {
  const double h = 0.7;
  HalfField half = sample_half(8, 8, 9, h, [](double, double, double z) { return z * z; });
  ScalarField f = extend(half, Parity::Even);
  const Grid& g = f.grid;
  CHECK(g.nz == 16);
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) CHECK(f.at(i, j, k) == doctest::Approx(g.z(k) * g.z(k)).epsilon(1e-15));
}

TEST_CASE("odd extension of zero is zero") {
  HalfField half(8, 8, 9, 1.0);
  ScalarField f = extend(half, Parity::Odd);
  CHECK(max_abs(f) == 0.0);
}

TEST_CASE("odd extension of sin(pi z / h) matches the closed form pointwise") {
  const double h = 1.3;
  HalfField half = sample_half(8, 6, 9, h, [h](double, double, double z) { return std::sin(kPi * z / h); });
  ScalarField f = extend(half, Parity::Odd);
  const Grid& g = f.grid;
  for (int k = 0; k < g.nz; ++k)
    CHECK(f.at(3, 2, k) == doctest::Approx(std::sin(kPi * g.z(k) / h)).epsilon(1e-13));
}

TEST_CASE("odd extension rejects data violating the boundary conditions") {
  const double h = 1.0;
  HalfField half = sample_half(8, 8, 9, h, [h](double, double, double z) { return std::cos(kPi * z / h); });
  CHECK_THROWS_AS(extend(half, Parity::Odd), OddExtensionMismatch);
}

TEST_CASE("restrict after extend is the identity; extend after restrict too") {
  const double h = 0.9;
  HalfField half = sample_half(8, 8, 9, h, [](double x, double y, double z) {
    return std::cos(kTwoPi * x) + y + z * z;
  });
  ScalarField f = extend(half, Parity::Even);
  HalfField back = restrict_to_half(f);
  for (std::size_t n = 0; n < back.values.size(); ++n) CHECK(back.values[n] == half.values[n]);
  ScalarField f2 = extend(back, Parity::Even);
  CHECK(max_abs_diff(f, f2) == 0.0);
}

TEST_CASE("extended fields have exactly one parity component") {
  RandomFieldSpec spec;
  spec.seed = 11;
  spec.max_mode = 4;
  Grid g(16, 16, 16, 1.0);
  ScalarField any = random_field(g, Parity::Even, spec);

  HalfField half = restrict_to_half(any);
  ScalarField even = extend(half, Parity::Even);
  // odd part of an even extension vanishes identically
  ScalarField mirrored = parity_reflect(even);
  CHECK(max_abs_diff(even, mirrored) == 0.0);
}

TEST_CASE("make_state validates parity and grid") {
  Grid g(8, 8, 8, 1.0);
  Grid g2(8, 8, 16, 1.0);
  ScalarField e(g, Parity::Even), o(g, Parity::Odd);
  CHECK_THROWS_AS(make_state(e, e, e, 0.0), ParityError);
  CHECK_THROWS_AS(make_state(o, e, o, 0.0), ParityError);
  CHECK_THROWS_AS(make_state(e, ScalarField(g2, Parity::Even), o, 0.0), GridMismatch);
}

TEST_CASE("make_state leaves a barotropically solenoidal field unchanged") {
  Grid g(32, 32, 8, 1.0);
  ScalarField v1 = sample(g, Parity::Even, [](double, double y, double) { return std::sin(kTwoPi * y); });
  ScalarField v2(g, Parity::Even);
  ScalarField T(g, Parity::Odd);
  ScalarField v1_copy = v1;
  State s = make_state(std::move(v1), std::move(v2), std::move(T), 0.25);
  CHECK(max_abs_diff(s.v[0], v1_copy) <= 1e-12);
  CHECK(constraint_residual(s) <= 1e-12);
  CHECK(s.t == 0.25);
}

TEST_CASE("make_state projects out a pure-gradient barotropic mode") {
  Grid g(32, 32, 8, 1.0);
  ScalarField v1 = sample(g, Parity::Even, [](double x, double, double) { return std::sin(kTwoPi * x); });
  ScalarField v2(g, Parity::Even);
  ScalarField T(g, Parity::Odd);

  // Brute-force residual of the unprojected field: ||2h * 2pi cos||_{L2(M)}.
  VectorField raw{v1, v2};
  const double before = constraint_residual(raw);
  CHECK(before == doctest::Approx(2.0 * kTwoPi / std::sqrt(2.0)).epsilon(1e-10));

  State s = make_state(std::move(v1), std::move(v2), std::move(T), 0.0);
  CHECK(max_abs(s.v[0]) <= 1e-12);  // sin(2 pi x) e1 is a pure 2D gradient
  CHECK(max_abs(s.v[1]) <= 1e-12);
  CHECK(constraint_residual(s) <= 1e-12);
}

TEST_CASE("projection is exact for random states and idempotent") {
  Grid g(16, 16, 16, 0.8);
  RandomFieldSpec spec;
  spec.max_mode = 5;
  spec.seed = 3;
  ScalarField v1 = random_field(g, Parity::Even, spec);
  spec.seed = 4;
  ScalarField v2 = random_field(g, Parity::Even, spec);
  State s = make_state(v1, v2, ScalarField(g, Parity::Odd), 0.0);
  CHECK(constraint_residual(s) <= 1e-12);

  State s2 = make_state(s.v[0], s.v[1], s.T, 0.0);
  CHECK(max_abs_diff(s.v[0], s2.v[0]) <= 1e-13);
  CHECK(max_abs_diff(s.v[1], s2.v[1]) <= 1e-13);
}
