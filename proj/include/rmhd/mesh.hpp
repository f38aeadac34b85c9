#pragma once

#include "rmhd/types.hpp"

namespace rmhd {

enum class BoundaryCondition { Periodic, Outflow, Inflow };

struct BoundarySpec {
  BoundaryCondition kind = BoundaryCondition::Periodic;
  PrimitiveState inflow{};  // used when kind == Inflow
};

// Uniform 1D mesh. The dual grid of the central method is staggered by h/2;
// for non-periodic runs it is extended by a half cell past each domain end so
// full-width dual cells cover the domain.
struct Mesh1D {
  int n = 0;
  double x0 = 0.0, x1 = 1.0;
  int ghost = 3;
  BoundarySpec bc_lo, bc_hi;

  double h() const { return (x1 - x0) / n; }
  double center(int i) const { return x0 + (i + 0.5) * h(); }
  bool periodic() const { return bc_lo.kind == BoundaryCondition::Periodic; }

  int dual_n() const { return periodic() ? n : n + 1; }
  double dual_x0() const { return periodic() ? x0 + 0.5 * h() : x0 - 0.5 * h(); }
  double dual_center(int i) const { return dual_x0() + (i + 0.5) * h(); }
};

struct Mesh2D {
  int nx = 0, ny = 0;
  double x0 = 0.0, y0 = 0.0, x1 = 1.0, y1 = 1.0;
  int ghost = 3;
  BoundarySpec bc_xlo, bc_xhi, bc_ylo, bc_yhi;

  double hx() const { return (x1 - x0) / nx; }
  double hy() const { return (y1 - y0) / ny; }
  double xc(int j) const { return x0 + (j + 0.5) * hx(); }
  double yc(int k) const { return y0 + (k + 0.5) * hy(); }
  bool periodic_x() const { return bc_xlo.kind == BoundaryCondition::Periodic; }
  bool periodic_y() const { return bc_ylo.kind == BoundaryCondition::Periodic; }

  int dual_nx() const { return periodic_x() ? nx : nx + 1; }
  int dual_ny() const { return periodic_y() ? ny : ny + 1; }
  double dual_x0() const { return periodic_x() ? x0 + 0.5 * hx() : x0 - 0.5 * hx(); }
  double dual_y0() const { return periodic_y() ? y0 + 0.5 * hy() : y0 - 0.5 * hy(); }
  double dual_xc(int j) const { return dual_x0() + (j + 0.5) * hx(); }
  double dual_yc(int k) const { return dual_y0() + (k + 0.5) * hy(); }
};

}  // namespace rmhd
