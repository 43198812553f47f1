#include "hpe/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "hpe/errors.hpp"

namespace hpe::spectral {

namespace {

// FFTW's planner is not thread-safe; execution on distinct buffers is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct Engine3D {
  int nx, ny, nz;
  std::size_t nreal, ncplx;
  double* real_buf;
  fftw_complex* cplx_buf;
  fftw_plan fwd, bwd;

  Engine3D(int nx_, int ny_, int nz_) : nx(nx_), ny(ny_), nz(nz_) {
    nreal = static_cast<std::size_t>(nx) * ny * nz;
    ncplx = static_cast<std::size_t>(nx / 2 + 1) * ny * nz;
    real_buf = fftw_alloc_real(nreal);
    cplx_buf = fftw_alloc_complex(ncplx);
    std::lock_guard<std::mutex> lock(planner_mutex());
    // Row-major dims (nz, ny, nx) give x-fastest storage; FFTW_ESTIMATE keeps
    // plan choice deterministic across runs.
    fwd = fftw_plan_dft_r2c_3d(nz, ny, nx, real_buf, cplx_buf, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_c2r_3d(nz, ny, nx, cplx_buf, real_buf, FFTW_ESTIMATE);
  }
  ~Engine3D() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
    fftw_free(real_buf);
    fftw_free(cplx_buf);
  }
  Engine3D(const Engine3D&) = delete;
  Engine3D& operator=(const Engine3D&) = delete;
};

struct Engine2D {
  int nx, ny;
  std::size_t nreal, ncplx;
  double* real_buf;
  fftw_complex* cplx_buf;
  fftw_plan fwd, bwd;

  Engine2D(int nx_, int ny_) : nx(nx_), ny(ny_) {
    nreal = static_cast<std::size_t>(nx) * ny;
    ncplx = static_cast<std::size_t>(nx / 2 + 1) * ny;
    real_buf = fftw_alloc_real(nreal);
    cplx_buf = fftw_alloc_complex(ncplx);
    std::lock_guard<std::mutex> lock(planner_mutex());
    fwd = fftw_plan_dft_r2c_2d(ny, nx, real_buf, cplx_buf, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_c2r_2d(ny, nx, cplx_buf, real_buf, FFTW_ESTIMATE);
  }
  ~Engine2D() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
    fftw_free(real_buf);
    fftw_free(cplx_buf);
  }
  Engine2D(const Engine2D&) = delete;
  Engine2D& operator=(const Engine2D&) = delete;
};

Engine3D& engine3d(const Grid& g) {
  thread_local std::map<std::tuple<int, int, int>, std::unique_ptr<Engine3D>> cache;
  auto key = std::make_tuple(g.nx, g.ny, g.nz);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<Engine3D>(g.nx, g.ny, g.nz)).first;
  return *it->second;
}

Engine2D& engine2d(int nx, int ny) {
  thread_local std::map<std::pair<int, int>, std::unique_ptr<Engine2D>> cache;
  auto key = std::make_pair(nx, ny);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_unique<Engine2D>(nx, ny)).first;
  return *it->second;
}

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

double wavenumber_x(const Grid&, int i) { return kTwoPi * i; }
double wavenumber_y(const Grid& g, int j) { return kTwoPi * signed_mode(j, g.ny); }
double wavenumber_z(const Grid& g, int k) {
  return std::numbers::pi / g.h * signed_mode(k, g.nz);
}

SpectralField analyze(const ScalarField& f) {
  Engine3D& e = engine3d(f.grid);
  std::memcpy(e.real_buf, f.values.data(), e.nreal * sizeof(double));
  fftw_execute(e.fwd);
  SpectralField s;
  s.grid = f.grid;
  s.coef.resize(e.ncplx);
  const double norm = 1.0 / static_cast<double>(e.nreal);
  const double* c = reinterpret_cast<const double*>(e.cplx_buf);
  for (std::size_t n = 0; n < e.ncplx; ++n)
    s.coef[n] = std::complex<double>(c[2 * n] * norm, c[2 * n + 1] * norm);
  return s;
}

ScalarField synthesize(const SpectralField& s, Parity parity) {
  Engine3D& e = engine3d(s.grid);
  std::memcpy(e.cplx_buf, s.coef.data(), e.ncplx * sizeof(fftw_complex));
  fftw_execute(e.bwd);
  ScalarField f(s.grid, parity);
  std::memcpy(f.values.data(), e.real_buf, e.nreal * sizeof(double));
  return f;
}

Spectral2D analyze(const Field2D& f) {
  Engine2D& e = engine2d(f.nx, f.ny);
  std::memcpy(e.real_buf, f.values.data(), e.nreal * sizeof(double));
  fftw_execute(e.fwd);
  Spectral2D s;
  s.nx = f.nx;
  s.ny = f.ny;
  s.coef.resize(e.ncplx);
  const double norm = 1.0 / static_cast<double>(e.nreal);
  const double* c = reinterpret_cast<const double*>(e.cplx_buf);
  for (std::size_t n = 0; n < e.ncplx; ++n)
    s.coef[n] = std::complex<double>(c[2 * n] * norm, c[2 * n + 1] * norm);
  return s;
}

Field2D synthesize(const Spectral2D& s) {
  Engine2D& e = engine2d(s.nx, s.ny);
  std::memcpy(e.cplx_buf, s.coef.data(), e.ncplx * sizeof(fftw_complex));
  fftw_execute(e.bwd);
  Field2D f(s.nx, s.ny);
  std::memcpy(f.values.data(), e.real_buf, e.nreal * sizeof(double));
  return f;
}

void differentiate_inplace(SpectralField& s, Axis axis) {
  const Grid& g = s.grid;
  const int hx = g.nx / 2 + 1;
  const std::complex<double> iunit(0.0, 1.0);
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < hx; ++i) {
        double kk = 0.0;
        bool nyq = false;
        switch (axis) {
          case Axis::X:
            kk = wavenumber_x(g, i);
            nyq = (i == g.nx / 2);
            break;
          case Axis::Y:
            kk = wavenumber_y(g, j);
            nyq = (j == g.ny / 2);
            break;
          case Axis::Z:
            kk = wavenumber_z(g, k);
            nyq = (k == g.nz / 2);
            break;
        }
        // The first derivative of the unpaired Nyquist cosine mode is not
        // representable on the grid; drop it.
        s.coef[s.index(i, j, k)] *= nyq ? 0.0 : iunit * kk;
      }
}

void differentiate_inplace(Spectral2D& s, Axis axis) {
  const int hx = s.nx / 2 + 1;
  const std::complex<double> iunit(0.0, 1.0);
  for (int j = 0; j < s.ny; ++j)
    for (int i = 0; i < hx; ++i) {
      double kk = 0.0;
      bool nyq = false;
      if (axis == Axis::X) {
        kk = kTwoPi * i;
        nyq = (i == s.nx / 2);
      } else {
        kk = kTwoPi * signed_mode(j, s.ny);
        nyq = (j == s.ny / 2);
      }
      s.coef[s.index(i, j)] *= nyq ? 0.0 : iunit * kk;
    }
}

void laplacian_h_inplace(SpectralField& s) {
  const Grid& g = s.grid;
  const int hx = g.nx / 2 + 1;
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j) {
      const double ky = wavenumber_y(g, j);
      for (int i = 0; i < hx; ++i) {
        const double kx = wavenumber_x(g, i);
        s.coef[s.index(i, j, k)] *= -(kx * kx + ky * ky);
      }
    }
}

void dealias_inplace(SpectralField& s) {
  const Grid& g = s.grid;
  const int hx = g.nx / 2 + 1;
  const int cx = dealias_cutoff(g.nx), cy = dealias_cutoff(g.ny), cz = dealias_cutoff(g.nz);
  for (int k = 0; k < g.nz; ++k) {
    const bool killz = std::abs(signed_mode(k, g.nz)) > cz;
    for (int j = 0; j < g.ny; ++j) {
      const bool killy = std::abs(signed_mode(j, g.ny)) > cy;
      for (int i = 0; i < hx; ++i)
        if (killz || killy || i > cx) s.coef[s.index(i, j, k)] = 0.0;
    }
  }
}

void dealias_inplace(Spectral2D& s) {
  const int hx = s.nx / 2 + 1;
  const int cx = dealias_cutoff(s.nx), cy = dealias_cutoff(s.ny);
  for (int j = 0; j < s.ny; ++j) {
    const bool killy = std::abs(signed_mode(j, s.ny)) > cy;
    for (int i = 0; i < hx; ++i)
      if (killy || i > cx) s.coef[s.index(i, j)] = 0.0;
  }
}

void invert_laplacian_h_inplace(SpectralField& s) {
  const Grid& g = s.grid;
  const int hx = g.nx / 2 + 1;
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j) {
      const double ky = wavenumber_y(g, j);
      for (int i = 0; i < hx; ++i) {
        const double kx = wavenumber_x(g, i);
        const double k2 = kx * kx + ky * ky;
        s.coef[s.index(i, j, k)] = (k2 == 0.0) ? 0.0 : s.coef[s.index(i, j, k)] / k2;
      }
    }
}

void invert_laplacian_h_inplace(Spectral2D& s) {
  const int hx = s.nx / 2 + 1;
  for (int j = 0; j < s.ny; ++j) {
    const double ky = kTwoPi * signed_mode(j, s.ny);
    for (int i = 0; i < hx; ++i) {
      const double kx = kTwoPi * i;
      const double k2 = kx * kx + ky * ky;
      s.coef[s.index(i, j)] = (k2 == 0.0) ? 0.0 : s.coef[s.index(i, j)] / k2;
    }
  }
}

void z_antiderivative_inplace(SpectralField& s) {
  const Grid& g = s.grid;
  const int hx = g.nx / 2 + 1;
  const std::complex<double> iunit(0.0, 1.0);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < hx; ++i) {
      std::complex<double> mean_mode = 0.0;
      for (int k = 1; k < g.nz; ++k) {
        const std::size_t n = s.index(i, j, k);
        if (k == g.nz / 2) {
          s.coef[n] = 0.0;  // Nyquist sine partner is absent
          continue;
        }
        s.coef[n] /= iunit * wavenumber_z(g, k);
        // e^{i k_z (-h)} = (-1)^{m_z}
        const int m = signed_mode(k, g.nz);
        mean_mode += (m % 2 == 0 ? 1.0 : -1.0) * s.coef[n];
      }
      // Fix the constant so that F(x,y,-h) = 0.
      s.coef[s.index(i, j, 0)] = -mean_mode;
    }
}

ScalarField derivative(const ScalarField& f, Axis axis) {
  SpectralField s = analyze(f);
  differentiate_inplace(s, axis);
  const Parity p = (axis == Axis::Z) ? flip_parity(f.parity) : f.parity;
  return synthesize(s, p);
}

ScalarField laplacian_h(const ScalarField& f) {
  SpectralField s = analyze(f);
  laplacian_h_inplace(s);
  return synthesize(s, f.parity);
}

namespace {

double max_horizontal_mean(const ScalarField& f) {
  const Grid& g = f.grid;
  double worst = 0.0;
  const double w = 1.0 / (static_cast<double>(g.nx) * g.ny);
  for (int k = 0; k < g.nz; ++k) {
    double sum = 0.0;
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) sum += f.at(i, j, k);
    worst = std::max(worst, std::abs(sum * w));
  }
  return worst;
}

}  // namespace

ScalarField invert_laplacian_h(const ScalarField& f) {
  const double m = max_horizontal_mean(f);
  if (m > kMeanTolerance)
    throw NonZeroMeanError("horizontal mean " + std::to_string(m) +
                           " exceeds tolerance; the periodic Poisson problem is unsolvable");
  SpectralField s = analyze(f);
  invert_laplacian_h_inplace(s);
  return synthesize(s, f.parity);
}

Field2D invert_laplacian_h(const Field2D& f) {
  double sum = 0.0;
  for (double v : f.values) sum += v;
  const double mean = sum / static_cast<double>(f.values.size());
  if (std::abs(mean) > kMeanTolerance)
    throw NonZeroMeanError("horizontal mean " + std::to_string(mean) +
                           " exceeds tolerance; the periodic Poisson problem is unsolvable");
  Spectral2D s = analyze(f);
  invert_laplacian_h_inplace(s);
  return synthesize(s);
}

ScalarField z_antiderivative(const ScalarField& f) {
  const Grid& g = f.grid;
  // int_{-h}^{h} f dz = 2h * (collocation mean); require it to vanish
  // pointwise in (x,y) or the antiderivative is not periodic.
  double worst = 0.0;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      double sum = 0.0;
      for (int k = 0; k < g.nz; ++k) sum += f.at(i, j, k);
      worst = std::max(worst, std::abs(sum * g.dz()));
    }
  if (worst > kMeanTolerance)
    throw NonZeroVerticalMeanError("vertical integral " + std::to_string(worst) +
                                   " exceeds tolerance; antiderivative not periodic");
  SpectralField s = analyze(f);
  z_antiderivative_inplace(s);
  return synthesize(s, flip_parity(f.parity));
}

Field2D vertical_average(const ScalarField& f) {
  const Grid& g = f.grid;
  Field2D out(g.nx, g.ny);
  const double w = 1.0 / g.nz;
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) out.at(i, j) += w * f.at(i, j, k);
  return out;
}

ScalarField dealias(const ScalarField& f) {
  SpectralField s = analyze(f);
  dealias_inplace(s);
  return synthesize(s, f.parity);
}

}  // namespace hpe::spectral
