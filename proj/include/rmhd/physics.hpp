#pragma once

#include <array>

#include "rmhd/types.hpp"

namespace rmhd {

struct RecoverOptions {
  double tol = 4.0e-16;     // relative step tolerance on theta
  int max_iter = 60;
  double eps_cap = 1e-13;   // Lorentz-factor cap 1/eps_cap defines theta_min
  bool floors = false;
  double rho_floor = 1e-10;
  double p_floor = 1e-12;
};

struct RecoverInfo {
  int iterations = 0;
  double residual = 0.0;
  double theta = 0.0;
  bool floored = false;
};

ConservedState prim_to_cons(const PrimitiveState& V, const Eos& eos);

// Newton-Raphson on the theta equation with bisection safeguards. theta_hint,
// when positive, seeds the iteration (used by finite-difference Jacobians).
PrimitiveState cons_to_prim(const ConservedState& U, const Eos& eos,
                            const RecoverOptions& opts = {},
                            RecoverInfo* info = nullptr, double theta_hint = 0.0);

Vec8 flux(const PrimitiveState& V, const Eos& eos, Axis axis);

WaveSpeeds wave_speeds(const PrimitiveState& V, const Eos& eos, Axis axis);

double max_signal_speed(const PrimitiveState& V, const Eos& eos, Axis axis);

// Left/right eigenvector matrices of dF_axis/dU (row-major 8x8), eigenvalues
// ascending. Built from a finite-difference Jacobian and a dense nonsymmetric
// eigensolve; ok=false signals a degenerate frame (caller falls back to
// component-wise limiting).
struct CharFrames {
  std::array<double, 64> L{};
  std::array<double, 64> R{};
  std::array<double, 8> lambda{};
  bool ok = false;
};

CharFrames characteristic_frames(const PrimitiveState& V, const Eos& eos, Axis axis);

// dF_axis/dU by central differences of U -> F(cons_to_prim(U)); row-major.
std::array<double, 64> flux_jacobian(const ConservedState& U, const Eos& eos, Axis axis);

// Real parts of the Jacobian spectrum, ascending; max_imag reports how far the
// spectrum is from real (large near degeneracies).
std::array<double, 8> jacobian_eigenvalues(const PrimitiveState& V, const Eos& eos,
                                           Axis axis, double* max_imag = nullptr);

}  // namespace rmhd
