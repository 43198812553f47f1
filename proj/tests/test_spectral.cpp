#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hpe/errors.hpp"
#include "hpe/random_fields.hpp"
#include "hpe/spectral.hpp"

using namespace hpe;
namespace sp = hpe::spectral;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

ScalarField random_even(const Grid& g, unsigned long seed, int cap = 4) {
  RandomFieldSpec spec;
  spec.seed = seed;
  spec.max_mode = cap;
  return random_field(g, Parity::Even, spec);
}
}  // namespace

TEST_CASE("x derivative of a resolved mode is exact") {
  Grid g(32, 8, 8, 1.0);
  ScalarField f = sample(g, Parity::Even, [](double x, double, double) { return std::sin(kTwoPi * x); });
  ScalarField d = sp::derivative(f, Axis::X);
  ScalarField expected =
      sample(g, Parity::Even, [](double x, double, double) { return kTwoPi * std::cos(kTwoPi * x); });
  CHECK(max_abs_diff(d, expected) <= 1e-12);
}

TEST_CASE("derivative of a constant vanishes") {
  Grid g(8, 8, 8, 2.0);
  ScalarField f = sample(g, Parity::Even, [](double, double, double) { return 3.5; });
  for (Axis a : {Axis::X, Axis::Y, Axis::Z}) CHECK(max_abs(sp::derivative(f, a)) <= 1e-14);
}

TEST_CASE("z derivative flips parity and matches the closed form") {
  const double h = 0.6;
  Grid g(8, 8, 32, h);
  ScalarField f = sample(g, Parity::Even, [h](double, double, double z) { return std::cos(kPi * z / h); });
  ScalarField d = sp::derivative(f, Axis::Z);
  CHECK(d.parity == Parity::Odd);
  ScalarField expected = sample(
      g, Parity::Odd, [h](double, double, double z) { return -(kPi / h) * std::sin(kPi * z / h); });
  CHECK(max_abs_diff(d, expected) <= 1e-12);
}

TEST_CASE("horizontal Laplacian eigenfunctions") {
  Grid g(32, 32, 8, 1.0);
  ScalarField f = sample(g, Parity::Even, [](double x, double, double) { return std::sin(kTwoPi * x); });
  ScalarField lap = sp::laplacian_h(f);
  ScalarField expected = -4.0 * kPi * kPi * f;
  CHECK(max_abs_diff(lap, expected) <= 1e-10);

  ScalarField fz = sample(g, Parity::Even, [](double, double, double z) { return z * z; });
  CHECK(max_abs(sp::laplacian_h(fz)) <= 1e-10);

  ScalarField fxy = sample(g, Parity::Even,
                           [](double x, double y, double) { return std::cos(kTwoPi * x) * std::cos(kTwoPi * y); });
  CHECK(max_abs_diff(sp::laplacian_h(fxy), -8.0 * kPi * kPi * fxy) <= 1e-9);
}

TEST_CASE("horizontal Poisson inversion") {
  Grid g(32, 32, 8, 1.0);
  ScalarField src = sample(g, Parity::Even, [](double x, double y, double) {
    return 8.0 * kPi * kPi * std::cos(kTwoPi * x) * std::cos(kTwoPi * y);
  });
  ScalarField u = sp::invert_laplacian_h(src);
  ScalarField expected = sample(
      g, Parity::Even, [](double x, double y, double) { return std::cos(kTwoPi * x) * std::cos(kTwoPi * y); });
  CHECK(max_abs_diff(u, expected) <= 1e-12);

  CHECK(max_abs(sp::invert_laplacian_h(ScalarField(g, Parity::Even))) == 0.0);

  ScalarField single = sample(g, Parity::Even,
                              [](double, double y, double) { return 4.0 * kPi * kPi * std::sin(kTwoPi * y); });
  ScalarField uy = sp::invert_laplacian_h(single);
  ScalarField ey = sample(g, Parity::Even, [](double, double y, double) { return std::sin(kTwoPi * y); });
  CHECK(max_abs_diff(uy, ey) <= 1e-12);
}

TEST_CASE("Poisson inversion requires zero horizontal mean at every level") {
  Grid g(8, 8, 8, 1.0);
  ScalarField bad = sample(g, Parity::Even, [](double, double, double z) { return z * z; });
  CHECK_THROWS_AS(sp::invert_laplacian_h(bad), NonZeroMeanError);
}

TEST_CASE("laplacian_h(invert_laplacian_h(f)) = -f on zero-mean fields") {
  Grid g(16, 16, 8, 1.0);
  ScalarField f = random_even(g, 21);
  // remove horizontal means level by level
  for (int k = 0; k < g.nz; ++k) {
    double m = 0.0;
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) m += f.at(i, j, k);
    m /= g.nx * g.ny;
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) f.at(i, j, k) -= m;
  }
  ScalarField u = sp::invert_laplacian_h(f);
  ScalarField back = sp::laplacian_h(u);
  CHECK(max_abs_diff(back, -1.0 * f) <= 1e-12);
}

TEST_CASE("vertical antiderivative: closed forms, endpoints, parity") {
  const double h = 1.4;
  Grid g(8, 8, 64, h);

  ScalarField c = sample(g, Parity::Even, [h](double, double, double z) { return std::cos(kPi * z / h); });
  ScalarField F = sp::z_antiderivative(c);
  CHECK(F.parity == Parity::Odd);
  ScalarField Fexp =
      sample(g, Parity::Odd, [h](double, double, double z) { return h / kPi * std::sin(kPi * z / h); });
  CHECK(max_abs_diff(F, Fexp) <= 1e-12);

  CHECK(max_abs(sp::z_antiderivative(ScalarField(g, Parity::Odd))) == 0.0);

  ScalarField s = sample(g, Parity::Odd, [h](double, double, double z) { return std::sin(kPi * z / h); });
  ScalarField G = sp::z_antiderivative(s);
  ScalarField Gexp = sample(g, Parity::Even, [h](double, double, double z) {
    return -(h / kPi) * (std::cos(kPi * z / h) + 1.0);
  });
  CHECK(max_abs_diff(G, Gexp) <= 1e-12);
  // F(-h) = 0 and F(h) = 0 for the odd integrand (level 0 is z = -h)
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) CHECK(std::abs(G.at(i, j, 0)) <= 1e-13);
}

TEST_CASE("vertical antiderivative agrees with a composite-Simpson oracle") {
  const double h = 0.8;
  Grid g(4, 4, 32, h);
  auto fn = [h](double z) { return std::cos(kPi * z / h) + 0.3 * std::sin(2.0 * kPi * z / h); };
  ScalarField f = sample(g, Parity::None, [fn](double, double, double z) { return fn(z); });
  ScalarField F = sp::z_antiderivative(f);

  for (int k = 0; k < g.nz; ++k) {
    // Simpson on [-h, z_k] with a fine subgrid
    const double zk = g.z(k);
    const int m = 2000;
    double acc = fn(-h) + fn(zk);
    for (int q = 1; q < m; ++q) acc += fn(-h + (zk + h) * q / m) * (q % 2 ? 4.0 : 2.0);
    acc *= (zk + h) / m / 3.0;
    CHECK(F.at(1, 2, k) == doctest::Approx(acc).epsilon(1e-8));
  }
}

TEST_CASE("vertical antiderivative rejects nonzero vertical mean") {
  Grid g(8, 8, 8, 1.0);
  ScalarField one = sample(g, Parity::Even, [](double, double, double) { return 1.0; });
  CHECK_THROWS_AS(sp::z_antiderivative(one), NonZeroVerticalMeanError);
}

TEST_CASE("derivative of the antiderivative returns the field") {
  Grid g(8, 8, 16, 1.1);
  RandomFieldSpec spec;
  spec.seed = 5;
  spec.max_mode = 4;
  ScalarField f = random_field(g, Parity::Odd, spec);
  ScalarField F = sp::z_antiderivative(f);
  CHECK(F.parity == Parity::Even);
  CHECK(max_abs_diff(sp::derivative(F, Axis::Z), f) <= 1e-12);
}

TEST_CASE("vertical average: odd kills, constants pass, z^2 has the periodization defect") {
  const double h = 1.0;
  Grid g(8, 8, 32, h);
  ScalarField odd = sample(g, Parity::Odd, [h](double, double, double z) { return std::sin(kPi * z / h); });
  Field2D a = sp::vertical_average(odd);
  for (double v : a.values) CHECK(std::abs(v) <= 1e-15);

  ScalarField one = sample(g, Parity::Even, [](double, double, double) { return 1.0; });
  for (double v : sp::vertical_average(one).values) CHECK(v == doctest::Approx(1.0));

  ScalarField zsq = sample(g, Parity::Even, [](double, double, double z) { return z * z; });
  Field2D m = sp::vertical_average(zsq);
  // collocation mean of z^2 on the uniform grid is 1/3 + 2/(3 nz^2)
  const double defect = 2.0 / (3.0 * g.nz * g.nz);
  for (double v : m.values) {
    CHECK(std::abs(v - 1.0 / 3.0) <= 2.0 * defect);
    CHECK(v == doctest::Approx(1.0 / 3.0 + defect).epsilon(1e-12));
  }
}

TEST_CASE("dealiasing: idempotent, band-limited fields unchanged, top modes removed") {
  Grid g(32, 32, 32, 1.0);
  ScalarField f = random_even(g, 9, 10);  // inside the 2/3 ball (cutoff = 10)
  CHECK(max_abs_diff(sp::dealias(f), f) <= 1e-13);

  ScalarField top =
      sample(g, Parity::Even, [](double x, double, double) { return std::sin(kTwoPi * 15 * x); });
  CHECK(max_abs(sp::dealias(top)) <= 1e-13);

  ScalarField mixed = f + top;
  ScalarField once = sp::dealias(mixed);
  ScalarField twice = sp::dealias(once);
  CHECK(max_abs_diff(once, twice) <= 1e-14);
}

TEST_CASE("kernels commute with the z reflection up to parity sign") {
  Grid g(16, 16, 16, 0.9);
  for (Parity p : {Parity::Even, Parity::Odd}) {
    RandomFieldSpec spec;
    spec.seed = 31;
    spec.max_mode = 5;
    ScalarField f = random_field(g, p, spec);
    ScalarField rf = parity_reflect(f);  // equals f up to round-off if tag honest
    CHECK(max_abs_diff(rf, f) <= 1e-13);

    ScalarField d = sp::derivative(f, Axis::Z);
    CHECK(max_abs_diff(parity_reflect(d), d) <= 1e-12);
    ScalarField l = sp::laplacian_h(f);
    CHECK(max_abs_diff(parity_reflect(l), l) <= 1e-12);
  }
}

TEST_CASE("one seed names one function across resolutions") {
  RandomFieldSpec spec;
  spec.seed = 77;
  spec.max_mode = 5;
  Grid coarse(16, 16, 16, 1.0);
  Grid fine(32, 32, 32, 1.0);
  ScalarField fc = random_field(coarse, Parity::Even, spec);
  ScalarField ff = random_field(fine, Parity::Even, spec);
  // compare on the common collocation points (every second fine point)
  for (int k = 0; k < 16; ++k)
    for (int j = 0; j < 16; ++j)
      for (int i = 0; i < 16; ++i)
        CHECK(fc.at(i, j, k) == doctest::Approx(ff.at(2 * i, 2 * j, 2 * k)).epsilon(1e-12));
}
