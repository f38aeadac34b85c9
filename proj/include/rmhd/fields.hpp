#pragma once

#include <cassert>
#include <vector>

#include "rmhd/mesh.hpp"

namespace rmhd {

// Modal coefficient storage with ghost layers. Cell block layout is
// component-major: block[c * nmode + m].

struct CellField1D {
  int n = 0, gw = 0, ncomp = 0, nmode = 0;
  std::vector<double> data;

  void resize(int n_, int gw_, int ncomp_, int nmode_) {
    n = n_; gw = gw_; ncomp = ncomp_; nmode = nmode_;
    data.assign(static_cast<size_t>(n + 2 * gw) * ncomp * nmode, 0.0);
  }
  int block() const { return ncomp * nmode; }
  double* cell(int i) {
    assert(i >= -gw && i < n + gw);
    return data.data() + static_cast<size_t>(i + gw) * block();
  }
  const double* cell(int i) const {
    assert(i >= -gw && i < n + gw);
    return data.data() + static_cast<size_t>(i + gw) * block();
  }
};

struct CellField2D {
  int nx = 0, ny = 0, gw = 0, ncomp = 0, nmode = 0;
  std::vector<double> data;

  void resize(int nx_, int ny_, int gw_, int ncomp_, int nmode_) {
    nx = nx_; ny = ny_; gw = gw_; ncomp = ncomp_; nmode = nmode_;
    data.assign(static_cast<size_t>(nx + 2 * gw) * (ny + 2 * gw) * ncomp * nmode, 0.0);
  }
  int block() const { return ncomp * nmode; }
  int stride_x() const { return nx + 2 * gw; }
  double* cell(int j, int k) {
    assert(j >= -gw && j < nx + gw && k >= -gw && k < ny + gw);
    return data.data() +
           (static_cast<size_t>(k + gw) * stride_x() + (j + gw)) * block();
  }
  const double* cell(int j, int k) const {
    return const_cast<CellField2D*>(this)->cell(j, k);
  }
};

// One orientation of edge-normal field coefficients (nmode = K+1 per edge).
struct EdgeField2D {
  int nex = 0, ney = 0, gw = 0, nmode = 0;
  std::vector<double> data;

  void resize(int nex_, int ney_, int gw_, int nmode_) {
    nex = nex_; ney = ney_; gw = gw_; nmode = nmode_;
    data.assign(static_cast<size_t>(nex + 2 * gw) * (ney + 2 * gw) * nmode, 0.0);
  }
  int stride_x() const { return nex + 2 * gw; }
  double* edge(int j, int k) {
    assert(j >= -gw && j < nex + gw && k >= -gw && k < ney + gw);
    return data.data() +
           (static_cast<size_t>(k + gw) * stride_x() + (j + gw)) * nmode;
  }
  const double* edge(int j, int k) const {
    return const_cast<EdgeField2D*>(this)->edge(j, k);
  }
};

// --- ghost filling -----------------------------------------------------------

// Per-side rule: periodic wrap, outflow copy of the nearest interior block, or
// a fixed inflow coefficient block (projection of the inflow state).
struct GhostRule {
  BoundaryCondition kind = BoundaryCondition::Periodic;
  std::vector<double> inflow_block;  // size = block() of the target field
};

GhostRule make_ghost_rule(const BoundarySpec& bc, std::vector<double> inflow_block);

void fill_ghosts(CellField1D& f, const GhostRule& lo, const GhostRule& hi);
void fill_ghosts(CellField2D& f, const GhostRule& xlo, const GhostRule& xhi,
                 const GhostRule& ylo, const GhostRule& yhi);
// Edge arrays wrap with period nex (periodic meshes store nex == nx distinct
// vertical edge columns); otherwise clamp / inflow like cells.
void fill_ghosts(EdgeField2D& f, const GhostRule& xlo, const GhostRule& xhi,
                 const GhostRule& ylo, const GhostRule& yhi);

// linear-combination helpers used by the RK drivers
inline void lincomb(std::vector<double>& out, double a, const std::vector<double>& x) {
  const size_t n = out.size();
  for (size_t i = 0; i < n; ++i) out[i] = a * x[i];
}
inline void lincomb(std::vector<double>& out, double a, const std::vector<double>& x,
                    double b, const std::vector<double>& y) {
  const size_t n = out.size();
  for (size_t i = 0; i < n; ++i) out[i] = a * x[i] + b * y[i];
}
inline void lincomb(std::vector<double>& out, double a, const std::vector<double>& x,
                    double b, const std::vector<double>& y, double c,
                    const std::vector<double>& z) {
  const size_t n = out.size();
  for (size_t i = 0; i < n; ++i) out[i] = a * x[i] + b * y[i] + c * z[i];
}

}  // namespace rmhd
