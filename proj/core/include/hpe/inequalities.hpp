#pragma once

#include <functional>
#include <vector>

#include "hpe/field.hpp"
#include "hpe/grid.hpp"
#include "hpe/random_fields.hpp"

namespace hpe::ineq {

// ---------------------------------------------------------------------------
// Ladyzhenskaya-type integral inequality
// ---------------------------------------------------------------------------

enum class LadyzhenskayaForm { Product, Gradient };

struct LadyzhenskayaOptions {
  // With phi (resp. varphi, psi) of gradient type, the lower-order L2 term in
  // its parenthesis may be dropped.
  bool drop_phi_lower = false;
  bool drop_varphi_lower = false;
  bool drop_psi_lower = false;
};

struct LadyzhenskayaResult {
  double lhs = 0.0;
  double rhs_branch1 = 0.0;  // ||phi||-anisotropic branch
  double rhs_branch2 = 0.0;  // ||varphi||-anisotropic branch
  double rhs = 0.0;          // min of the two, constant-free
  double ratio = 0.0;        // lhs / rhs, 0 when lhs == 0
};

/// LHS = int_M (int |phi| dz)(int |varphi * third| dz) dxdy by collocation
/// quadrature, where `third` is psi itself (Product) or |grad_H third|
/// (Gradient, `third` playing the role of the potential Psi).  RHS is the
/// constant-free minimum of the two bracketed bounds.  Throws DegenerateRHS
/// when rhs == 0 while lhs > 0.
LadyzhenskayaResult ladyzhenskaya_ratio(const ScalarField& phi, const ScalarField& varphi,
                                        const ScalarField& third, LadyzhenskayaForm form,
                                        const LadyzhenskayaOptions& opt = {});

struct SupStudy {
  int samples = 1000;
  unsigned long seed = 7;
  int max_mode = 8;
  double decay = 2.0;
};

/// Ratios over a family of random band-limited triples (plus a potential for
/// the gradient form).  One seed names one family of functions independently
/// of the grid, so refining the grid reevaluates the same family.
std::vector<double> ladyzhenskaya_ratios(const Grid& g, const SupStudy& study,
                                         LadyzhenskayaForm form);

// ---------------------------------------------------------------------------
// Logarithmic Sobolev embedding (N = 3)
// ---------------------------------------------------------------------------

/// Samples of a function on a periodic box of arbitrary edge lengths,
/// x-fastest.
struct BoxField {
  int nx = 0, ny = 0, nz = 0;
  double lx = 1.0, ly = 1.0, lz = 1.0;
  std::vector<double> values;

  std::size_t size() const { return static_cast<std::size_t>(nx) * ny * nz; }
  double cell() const { return (lx / nx) * (ly / ny) * (lz / nz); }
};

BoxField box_from_field(const ScalarField& f);

struct LogSobolevQuery {
  BoxField F;
  double p = 6.0;       // must exceed the dimension 3
  double lambda = 0.5;  // > 0
  double R = 1.0;       // > 0
  std::vector<double> r_samples = {2, 4, 8, 16, 32, 64};
};

struct LogSobolevResult {
  double lhs = 0.0;       // ||F||_inf
  double sup_term = 0.0;  // max over r of ||F||_r / (r^lambda R^{3/r})
  double log_arg = 0.0;   // e + ||F||_p R^{-3/p} + ||grad F||_p R^{1-3/p}... see impl
  double rhs = 0.0;       // constant-free right side
  double ratio = 0.0;
};

LogSobolevResult log_sobolev_ratio(const LogSobolevQuery& q);

/// (F, R) -> (F(s .), R/s): same samples on a box shrunk by s.  The bound is
/// invariant under s = R, which maps the query to R' = 1.
LogSobolevQuery rescale(const LogSobolevQuery& q, double s);

struct OscillatoryFamilyResult {
  std::vector<int> k;
  std::vector<double> ratio;
  std::vector<double> lhs;
  std::vector<double> rhs;
};

/// F_k = sin(2 pi k x) times a fixed smooth bump, k = 1..kmax, on an
/// nx x nyz x nyz unit box; reports the ratio curve (log compensation keeps
/// it from growing).
OscillatoryFamilyResult log_sobolev_family_study(int kmax, int nx, int nyz, double p,
                                                 double lambda);

// ---------------------------------------------------------------------------
// System Gronwall lemma
// ---------------------------------------------------------------------------

struct GronwallSpec {
  int n = 1;
  double alpha = 1.0;  // >= 1
  double zeta = 1.0;   // >= 1
  std::vector<double> A0;           // initial values, each >= e
  std::function<double(double)> K;  // nonnegative coefficient
  double t_end = 1.0;
};

struct GronwallBound {
  std::vector<double> cascade;  // script-A_i(0)
  double cascade_A0 = 0.0;      // script-A_n(0)
  double log_cascade_A0 = 0.0;
  double int_K = 0.0;           // int_0^t K
  double q0 = 0.0;              // e^{(alpha+1)^{n-1} int K} log script-A_n(0)
  double q1 = 0.0;              // e^{q0}; valid only when !log_domain
  double Q = 0.0;               // (alpha+1)^{n-1} int K q1 q0; valid only when !log_domain
  bool log_domain = false;      // q1 overflows; use log_q1 / log_Q
  double log_q1 = 0.0;
  double log_Q = 0.0;
  bool degenerate_int_K = false;  // int K == 0 makes the printed bound vacuous
};

/// Evaluates the explicit bound with all intermediates; switches to
/// log-domain once q0 exceeds the representable range.
GronwallBound gronwall_bound(const GronwallSpec& spec, double t);

/// Saturated trajectories: equality in the differential inequalities with
/// m(t) = K(t) log sum A_i and B_i = c_i (A_i - e), integrated adaptively in
/// log variables by an embedded Runge-Kutta method.
struct GronwallTrajectories {
  std::vector<double> times;
  std::vector<std::vector<double>> A;      // [checkpoint][i]
  std::vector<std::vector<double>> int_B;  // cumulative integrals
};

GronwallTrajectories integrate_saturated_system(const GronwallSpec& spec,
                                                const std::vector<double>& dissipation_c,
                                                int checkpoints = 64, double rtol = 1e-10);

struct GronwallVerifyResult {
  bool pass = false;
  /// min over checkpoints of log Q_eff - log(sum A + sum int B); positive
  /// margins mean the bound holds.
  double worst_log_margin = 0.0;
  double t_worst = 0.0;
  /// max over checkpoints of sum A / q1 - 1 (cascade bound tightness).
  double max_cascade_excess = 0.0;
  /// checkpoints where the printed explicit bound alone (without the initial
  /// cascade value) already dominated.
  int printed_bound_held = 0;
  int checkpoints = 0;
};

/// Asserts sum A_i(t) + sum int B_i <= Q_eff(t) (1 + slack) at the trajectory
/// checkpoints, where Q_eff = script-A_n(0) + Q(t) is the bound the cascade
/// argument yields; Q(t) alone is reported for comparison.
GronwallVerifyResult gronwall_verify(const GronwallSpec& spec, const GronwallTrajectories& traj,
                                     double slack = 1e-6);

/// Deterministic random spec for verification batteries; trajectories stay
/// inside the representable range by capping q0.
struct RandomGronwallDraw {
  GronwallSpec spec;
  std::vector<double> dissipation_c;
};
RandomGronwallDraw random_gronwall_spec(unsigned long seed);

}  // namespace hpe::ineq
