#pragma once

#include <array>
#include <limits>
#include <string>
#include <vector>

#include "hpe/domain.hpp"
#include "hpe/field.hpp"

namespace hpe {

/// Sampled Lebesgue exponents; the last entry stands for infinity.
inline constexpr std::array<double, 6> kQSet = {2.0, 4.0, 8.0, 16.0, 32.0,
                                                std::numeric_limits<double>::infinity()};

/// (int_Omega |f|^q)^{1/q} by collocation quadrature; q = inf returns the
/// collocation max.  Vector fields use the pointwise Euclidean magnitude.
double lq_norm(const ScalarField& f, double q);
double lq_norm(const VectorField& f, double q);

/// T* = T + z/h, the shifted temperature obeying a maximum principle.
ScalarField shifted_temperature(const State& s);

/// Per-step (or per-cadence) monitored quantities.
struct DiagnosticsRecord {
  double t = 0.0;
  double dt = 0.0;
  std::array<double, 6> v_lq{};      // over kQSet
  std::array<double, 6> tstar_lq{};  // over kQSet
  // H1/H2 partial norms (L2, not squared)
  double gradh_v = 0.0, dz_v = 0.0, laph_v = 0.0, gradh_dz_v = 0.0, dzz_v = 0.0;
  double gradh_T = 0.0, dz_T = 0.0, laph_T = 0.0, gradh_dz_T = 0.0, dzz_T = 0.0;
  double energy_residual = 0.0;
  double constraint_residual = 0.0;
  double parity_drift = 0.0;
  double lq_growth_ratio = 0.0;
  std::array<double, 9> a{};
  std::array<double, 9> b{};

  static const std::vector<std::string>& column_names();
  std::vector<double> row() const;
  static DiagnosticsRecord from_row(const std::vector<double>& row);
};

/// Residual of the discrete energy identity between two consecutive states,
/// with the spatial terms evaluated at the midpoint average.  O(dt^2) on
/// trajectories of the scheme.
double energy_budget_residual(const State& prev, const State& next, double dt, const Params& p);

/// ||grad_H . int_{-h}^{h} v dz||_{L2(M)}.
double constraint_residual(const State& s);
double constraint_residual(const VectorField& v);

/// Max over fields of ||f - parity_reflect(f)||_inf.
double parity_drift(const State& s);

/// Max over finite q in kQSet of ||v(t)||_q / ((1 + ||v0||_q) sqrt(q)).
double lq_growth_ratio(const State& s, const State& initial);

/// Which summation route evaluates the monitored norms.
enum class NormRoute { Parseval, Quadrature };

struct AprioriVectors {
  std::array<double, 9> a{};
  std::array<double, 9> b{};
};

/// The nine a_i / b_i energy quantities (squared norms) with u = dz v
/// obtained spectrally.
AprioriVectors apriori_monitor(const State& s, const Params& p,
                               NormRoute route = NormRoute::Parseval);

struct MaxPrincipleVerdict {
  bool pass = true;
  double worst_violation = 0.0;  // max over pairs of later-norm minus running min, minus tol
  double t_at = 0.0;
  double q_at = 0.0;
  std::size_t index_at = 0;
};

/// Checks that every ||T*||_q series is non-increasing within tol = c * dt.
/// c < 0 selects the default 10 * ||T*_0||_inf.
MaxPrincipleVerdict max_principle_series(const std::vector<DiagnosticsRecord>& records,
                                         double dt, double c = -1.0);

/// Full record assembly; prev == nullptr skips the energy residual.
DiagnosticsRecord record_diagnostics(const State& s, const State* prev, double dt,
                                     const State& initial, const Params& p);

}  // namespace hpe
