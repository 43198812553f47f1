#pragma once

#include "hpe/domain.hpp"
#include "hpe/field.hpp"

namespace hpe {

/// Diagnostic quantities recovered from a state: vertical velocity, surface
/// pressure with its three-part decomposition, and the vertical shear
/// u = dz v.
struct DerivedFields {
  ScalarField w;  // odd, vanishes at z = +-h
  Field2D ps;     // zero horizontal mean
  Field2D ps0;
  Field2D ps1;
  Field2D ps2;
  VectorField u;  // odd pair
};

/// Surface-pressure decomposition ps = ps0 + ps1 + ps2, each part with zero
/// horizontal mean.  ps0 is the temperature part, ps1 inverts
/// -Lap_H ps1 = div_H div_H of the depth-averaged momentum flux, ps2 inverts
/// the depth-averaged Coriolis divergence.
struct SurfacePressure {
  Field2D ps;
  Field2D ps0;
  Field2D ps1;
  Field2D ps2;
};

/// Explicit (non-dissipative) part of the right-hand sides: advection,
/// Coriolis, pressure gradient, and the w/h temperature source, dealiased.
struct Tendency {
  VectorField dv;
  ScalarField dT;
};

/// 2D Leray projection of the depth-averaged velocity; the baroclinic part is
/// untouched.  Output satisfies the barotropic constraint to round-off and
/// the operation is idempotent.
void barotropic_project(VectorField& v);

/// w = -int_{-h}^{z} div_H v dxi, odd in z, vanishing at z = +-h.
/// Propagates NonZeroVerticalMeanError when v violates the constraint.
ScalarField diagnose_w(const VectorField& v);

SurfacePressure solve_ps(const VectorField& v, const ScalarField& T, double f0);

/// grad_H(ps - int_{-h}^{z} T dxi); even in z.  T must be odd so the vertical
/// antiderivative is periodic.
VectorField pressure_gradient(const ScalarField& T, const Field2D& ps);

/// Advection + Coriolis + pressure + w/h source, with transport in
/// skew-symmetric form over the incompressible pair (v, w).
Tendency explicit_tendency(const State& s, const Params& p);

/// Full momentum tendency including Lap_H v + eps dzz v; preserves Even parity.
VectorField momentum_rhs(const State& s, const Params& p);

/// Full temperature tendency including Lap_H T + eps dzz T; preserves Odd parity.
ScalarField temperature_rhs(const State& s, const Params& p);

/// All derived fields of a state in one pass.
DerivedFields compute_derived(const State& s, double f0);

}  // namespace hpe
