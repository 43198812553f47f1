#include "hpe/random_fields.hpp"

#include <cmath>
#include <complex>
#include <random>

#include "hpe/errors.hpp"
#include "hpe/spectral.hpp"

namespace hpe {

namespace sp = hpe::spectral;

namespace {

int wrap_mode(int m, int n) { return m >= 0 ? m : m + n; }

}  // namespace

ScalarField random_field(const Grid& g, Parity parity, const RandomFieldSpec& spec) {
  if (parity == Parity::None) throw ParityError("random fields need a definite parity");
  const int cap = spec.max_mode;
  if (cap > g.nx / 2 - 1 || cap > g.ny / 2 - 1 || cap > g.nz / 2 - 1)
    throw ValidationError("max_mode", "band does not fit on the grid");

  sp::SpectralField s;
  s.grid = g;
  s.coef.assign(static_cast<std::size_t>(g.nx / 2 + 1) * g.ny * g.nz, 0.0);

  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const std::complex<double> iunit(0.0, 1.0);
  const double sign = (parity == Parity::Odd) ? -1.0 : 1.0;

  auto set_pair = [&](int mx, int my, int mz, std::complex<double> c) {
    // c is the coefficient at +mz; parity fixes the -mz partner.
    const int jy = wrap_mode(my, g.ny);
    s.coef[s.index(mx, jy, wrap_mode(mz, g.nz))] += c;
    if (mz != 0) s.coef[s.index(mx, jy, wrap_mode(-mz, g.nz))] += sign * c;
  };

  // Fixed draw order: mz, then my, then mx, so the same seed gives the same
  // function on any admissible grid.
  for (int mz = 0; mz <= cap; ++mz) {
    if (parity == Parity::Odd && mz == 0) continue;  // sine content only
    for (int my = -cap; my <= cap; ++my) {
      for (int mx = 0; mx <= cap; ++mx) {
        // For the mx = 0 plane the Hermitian partner lives in-plane; keep
        // only a canonical half of the (my, mz) lattice.
        if (mx == 0 && my < 0) continue;
        if (mx == 0 && my == 0 && mz == 0) continue;  // zero-mean field
        const double m2 = static_cast<double>(mx) * mx + static_cast<double>(my) * my +
                          static_cast<double>(mz) * mz;
        const double amp = spec.amplitude * std::pow(1.0 + m2, -0.5 * spec.decay);
        const double gre = normal(rng);
        const double gim = normal(rng);

        if (mx == 0 && my == 0) {
          // Realness ties (0,0,-mz) to the conjugate; with the parity tie it
          // forces a real (even) or imaginary (odd) coefficient.
          const std::complex<double> c = (parity == Parity::Even)
                                             ? std::complex<double>(amp * gre, 0.0)
                                             : std::complex<double>(0.0, amp * gre);
          set_pair(0, 0, mz, 0.5 * c);
          continue;
        }

        std::complex<double> c(amp * gre, amp * gim);
        if (mz == 0) {
          set_pair(mx, my, 0, 0.5 * c);
          if (mx == 0) {
            // in-plane Hermitian partner (0, -my, 0)
            s.coef[s.index(0, wrap_mode(-my, g.ny), 0)] += 0.5 * std::conj(c);
          }
        } else {
          set_pair(mx, my, mz, 0.25 * c);
          if (mx == 0) {
            const std::complex<double> cc = std::conj(c);
            const int jm = wrap_mode(-my, g.ny);
            s.coef[s.index(0, jm, wrap_mode(-mz, g.nz))] += 0.25 * cc;
            s.coef[s.index(0, jm, wrap_mode(mz, g.nz))] += sign * 0.25 * cc;
          }
        }
      }
    }
  }

  return sp::synthesize(s, parity);
}

}  // namespace hpe
