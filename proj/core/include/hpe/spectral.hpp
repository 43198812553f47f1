#pragma once

#include <complex>
#include <vector>

#include "hpe/field.hpp"
#include "hpe/grid.hpp"

namespace hpe::spectral {

/// Fourier coefficients of a real field in Hermitian (r2c) storage:
/// index = (k*ny + j)*(nx/2+1) + i with i the nonnegative x mode.
/// Wavenumbers are k_x = 2*pi*m_x, k_y = 2*pi*m_y, k_z = (pi/h)*m_z.
struct SpectralField {
  Grid grid;
  std::vector<std::complex<double>> coef;

  std::size_t hx() const { return static_cast<std::size_t>(grid.nx / 2 + 1); }
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(k) * grid.ny + j) * hx() + i;
  }
};

/// 2D counterpart on the horizontal torus M.
struct Spectral2D {
  int nx = 0;
  int ny = 0;
  std::vector<std::complex<double>> coef;

  std::size_t hx() const { return static_cast<std::size_t>(nx / 2 + 1); }
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * hx() + i; }
};

/// Signed integer mode for storage row j of an n-point transform.
inline int signed_mode(int j, int n) { return j <= n / 2 ? j : j - n; }

double wavenumber_x(const Grid& g, int i);
double wavenumber_y(const Grid& g, int j);
double wavenumber_z(const Grid& g, int k);

// Transforms.  analyze() normalizes so that coefficients are those of the
// trigonometric interpolant; synthesize() is the plain inverse sum.
SpectralField analyze(const ScalarField& f);
ScalarField synthesize(const SpectralField& s, Parity parity);
Spectral2D analyze(const Field2D& f);
Field2D synthesize(const Spectral2D& s);

// In-place coefficient-space kernels.
void differentiate_inplace(SpectralField& s, Axis axis);
void differentiate_inplace(Spectral2D& s, Axis axis);
void laplacian_h_inplace(SpectralField& s);
void dealias_inplace(SpectralField& s);
void dealias_inplace(Spectral2D& s);
void invert_laplacian_h_inplace(SpectralField& s);
void invert_laplacian_h_inplace(Spectral2D& s);
/// Coefficients of F(z) = int_{-h}^{z} f dxi given those of f; the
/// vertical-mean (m_z = 0) plane of the input is treated as exactly zero.
void z_antiderivative_inplace(SpectralField& s);

/// Exact spectral derivative of the interpolant; the z-derivative flips the
/// parity tag.
ScalarField derivative(const ScalarField& f, Axis axis);

/// Horizontal Laplacian d_xx + d_yy; parity preserved.
ScalarField laplacian_h(const ScalarField& f);

/// Solves -Lap_H u = f level-by-level in z with zero horizontal mean.
/// Throws NonZeroMeanError unless the horizontal mean of f vanishes at every
/// z (tolerance 1e-10 absolute).
ScalarField invert_laplacian_h(const ScalarField& f);
Field2D invert_laplacian_h(const Field2D& f);

/// F(x,y,z) = int_{-h}^{z} f(x,y,xi) dxi with F(.,.,-h) = 0; flips parity.
/// Throws NonZeroVerticalMeanError unless int_{-h}^{h} f dz vanishes
/// pointwise in (x,y) (tolerance 1e-10 absolute).
ScalarField z_antiderivative(const ScalarField& f);

/// (1/2h) int_{-h}^{h} f dz, exact for the interpolant (collocation mean).
Field2D vertical_average(const ScalarField& f);

/// 2/3-rule truncation in all three directions.
ScalarField dealias(const ScalarField& f);

/// Largest integer mode kept by the 2/3 rule for an n-point direction.
inline int dealias_cutoff(int n) { return n / 3; }

/// Absolute tolerance for the zero-mean preconditions above.
inline constexpr double kMeanTolerance = 1e-10;

}  // namespace hpe::spectral
