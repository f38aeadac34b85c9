#pragma once

#include <vector>

#include "rmhd/fields.hpp"
#include "rmhd/physics.hpp"
#include "rmhd/weno.hpp"

namespace rmhd {

// modified TVB minmod: pass-through inside the M h^2 band, else minmod
double tvb_minmod(double a1, double a2, double a3, double M, double h);

struct LimiterStats {
  long flagged = 0;
  long checked = 0;
  long p0_fallback = 0;
  long degenerate_frames = 0;
  void operator+=(const LimiterStats& o) {
    flagged += o.flagged;
    checked += o.checked;
    p0_fallback += o.p0_fallback;
    degenerate_frames += o.degenerate_frames;
  }
  double fraction() const { return checked ? double(flagged) / checked : 0.0; }
};

// TVB trouble check of one cell in one direction on characteristic variables.
// L is the row-major 8x8 left-eigenvector matrix (nullptr = component-wise).
bool tvb_flags_cell(const double* L, const Vec8& du_minus_bar,
                    const Vec8& bar_minus_du, const Vec8& dplus,
                    const Vec8& dminus, double M, double h);

// Dimension-by-dimension characteristic WENO reconstruction of conserved
// point values at the (K+1)^2 tensor Gauss points of a troubled cell from the
// (2K+1)^2 neighborhood cell averages.
class CharWeno2D {
 public:
  explicit CharWeno2D(int K);
  int K() const { return k_; }
  int points_1d() const { return k_ + 1; }

  // averages: row-major [dy][dx][comp] over the (2K+1)^2 stencil;
  // fx/fy: frames for the x/y passes (ok=false -> component-wise);
  // outU: [comp][pt] with pt = gy*(K+1)+gx and given stride.
  void reconstruct(const double* averages, const CharFrames& fx,
                   const CharFrames& fy, double* outU, int ustride) const;

 private:
  int k_;
  WenoReconstructor w_;
};

// One-dimensional adaptive WENO limiter on an 8-component modal solution.
class Limiter1D {
 public:
  Limiter1D(int K, double h, Eos eos);

  // Detect on characteristic variables and rebuild flagged cells in place.
  // global=true rebuilds every cell (detector bypassed).
  LimiterStats apply(CellField1D& u, double M, bool global,
                     const RecoverOptions& ropts) const;

 private:
  int k_;
  double h_;
  Eos eos_;
  WenoReconstructor w_;
  std::vector<double> trace_hi_;   // L_m(+1)
  std::vector<double> trace_lo_;   // L_m(-1)
  std::vector<double> gauss_x_, gauss_w_;
  std::vector<double> mode_at_gauss_;  // [m][g]
};

}  // namespace rmhd
