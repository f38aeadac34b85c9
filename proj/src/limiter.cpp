#include "rmhd/limiter.hpp"

#include <algorithm>
#include <cmath>

#include "rmhd/basis.hpp"
#include "rmhd/quadrature.hpp"

namespace rmhd {

double tvb_minmod(double a1, double a2, double a3, double M, double h) {
  if (std::abs(a1) <= M * h * h) return a1;
  if (a1 > 0.0 && a2 > 0.0 && a3 > 0.0) return std::min({a1, a2, a3});
  if (a1 < 0.0 && a2 < 0.0 && a3 < 0.0) return std::max({a1, a2, a3});
  return 0.0;
}

namespace {

inline void transform8(const double* L, const Vec8& u, Vec8& w) {
  if (!L) {
    w = u;
    return;
  }
  for (int r = 0; r < 8; ++r) {
    double s = 0.0;
    for (int c = 0; c < 8; ++c) s += L[r * 8 + c] * u[c];
    w[r] = s;
  }
}

}  // namespace

bool tvb_flags_cell(const double* L, const Vec8& du_minus_bar,
                    const Vec8& bar_minus_du, const Vec8& dplus,
                    const Vec8& dminus, double M, double h) {
  Vec8 wt, wtt, wp, wm;
  transform8(L, du_minus_bar, wt);
  transform8(L, bar_minus_du, wtt);
  transform8(L, dplus, wp);
  transform8(L, dminus, wm);
  for (int c = 0; c < 8; ++c) {
    if (tvb_minmod(wt[c], wp[c], wm[c], M, h) != wt[c]) return true;
    if (tvb_minmod(wtt[c], wp[c], wm[c], M, h) != wtt[c]) return true;
  }
  return false;
}

CharWeno2D::CharWeno2D(int K)
    : k_(K), w_(K, gauss_legendre(K + 1).nodes) {}

void CharWeno2D::reconstruct(const double* averages, const CharFrames& fx,
                             const CharFrames& fy, double* outU,
                             int ustride) const {
  const int w = 2 * k_ + 1;
  const int np = k_ + 1;
  const double* Lx = fx.ok ? fx.L.data() : nullptr;
  const double* Rx = fx.ok ? fx.R.data() : nullptr;
  const double* Ly = fy.ok ? fy.L.data() : nullptr;
  const double* Ry = fy.ok ? fy.R.data() : nullptr;

  // pass 1: x-direction per stencil row -> y-line values at x Gauss points
  std::vector<double> stage(static_cast<size_t>(w) * np * 8);
  std::vector<double> wrow(static_cast<size_t>(w));
  std::vector<double> vals(np);
  std::vector<double> wchar(static_cast<size_t>(w) * 8);
  for (int dy = 0; dy < w; ++dy) {
    const double* row = averages + static_cast<size_t>(dy) * w * 8;
    for (int j = 0; j < w; ++j) {
      Vec8 u, ww;
      for (int c = 0; c < 8; ++c) u[c] = row[j * 8 + c];
      transform8(Lx, u, ww);
      for (int c = 0; c < 8; ++c) wchar[j * 8 + c] = ww[c];
    }
    for (int c = 0; c < 8; ++c) {
      for (int j = 0; j < w; ++j) wrow[j] = wchar[j * 8 + c];
      w_.reconstruct(wrow.data(), vals.data());
      for (int m = 0; m < np; ++m) stage[(dy * np + m) * 8 + c] = vals[m];
    }
    // back to conserved
    for (int m = 0; m < np; ++m) {
      Vec8 ww, u;
      for (int c = 0; c < 8; ++c) ww[c] = stage[(dy * np + m) * 8 + c];
      transform8(Rx, ww, u);
      for (int c = 0; c < 8; ++c) stage[(dy * np + m) * 8 + c] = u[c];
    }
  }

  // pass 2: y-direction per x Gauss point
  for (int m = 0; m < np; ++m) {
    for (int dy = 0; dy < w; ++dy) {
      Vec8 u, ww;
      for (int c = 0; c < 8; ++c) u[c] = stage[(dy * np + m) * 8 + c];
      transform8(Ly, u, ww);
      for (int c = 0; c < 8; ++c) wchar[dy * 8 + c] = ww[c];
    }
    for (int c = 0; c < 8; ++c) {
      for (int dy = 0; dy < w; ++dy) wrow[dy] = wchar[dy * 8 + c];
      w_.reconstruct(wrow.data(), vals.data());
      for (int p = 0; p < np; ++p) stage[(p * np + m) * 8 + c] = vals[p];
      // stage rows 0..np-1 now repurposed as point values [gy][gx]
    }
    for (int p = 0; p < np; ++p) {
      Vec8 ww, u;
      for (int c = 0; c < 8; ++c) ww[c] = stage[(p * np + m) * 8 + c];
      transform8(Ry, ww, u);
      for (int c = 0; c < 8; ++c) outU[c * ustride + p * np + m] = u[c];
    }
  }
}

Limiter1D::Limiter1D(int K, double h, Eos eos)
    : k_(K), h_(h), eos_(eos), w_(K, gauss_legendre(K + 1).nodes) {
  trace_hi_.resize(K + 1);
  trace_lo_.resize(K + 1);
  for (int m = 0; m <= K; ++m) {
    trace_hi_[m] = legendre(m, 1.0);
    trace_lo_[m] = legendre(m, -1.0);
  }
  const auto& r = gauss_legendre(K + 1);
  gauss_x_ = r.nodes;
  gauss_w_ = r.weights;
  mode_at_gauss_.resize((K + 1) * r.q());
  for (int m = 0; m <= K; ++m)
    for (int g = 0; g < r.q(); ++g)
      mode_at_gauss_[m * r.q() + g] = legendre(m, r.nodes[g]);
}

LimiterStats Limiter1D::apply(CellField1D& u, double M, bool global,
                              const RecoverOptions& ropts) const {
  LimiterStats st;
  const int nm = k_ + 1;
  const int w = 2 * k_ + 1;
  const int np = k_ + 1;

  std::vector<int> flagged;
  flagged.reserve(u.n / 4);

  for (int i = 0; i < u.n; ++i) {
    ++st.checked;
    if (global) {
      flagged.push_back(i);
      ++st.flagged;
      continue;
    }
    const double* ci = u.cell(i);
    Vec8 ubar, up1, um1, tr_hi, tr_lo;
    for (int c = 0; c < 8; ++c) {
      ubar[c] = ci[c * nm];
      up1[c] = u.cell(i + 1)[c * nm];
      um1[c] = u.cell(i - 1)[c * nm];
      double th = 0.0, tl = 0.0;
      for (int m = 0; m < nm; ++m) {
        th += ci[c * nm + m] * trace_hi_[m];
        tl += ci[c * nm + m] * trace_lo_[m];
      }
      tr_hi[c] = th;
      tr_lo[c] = tl;
    }
    Vec8 ut, utt, dp, dm;
    for (int c = 0; c < 8; ++c) {
      ut[c] = tr_hi[c] - ubar[c];
      utt[c] = ubar[c] - tr_lo[c];
      dp[c] = up1[c] - ubar[c];
      dm[c] = ubar[c] - um1[c];
    }
    CharFrames fr;
    try {
      fr = characteristic_frames(
          cons_to_prim(ConservedState::from_array(ubar), eos_, ropts), eos_,
          Axis::X);
    } catch (const std::runtime_error&) {
      fr.ok = false;
    }
    if (!fr.ok) ++st.degenerate_frames;
    if (tvb_flags_cell(fr.ok ? fr.L.data() : nullptr, ut, utt, dp, dm, M, h_)) {
      flagged.push_back(i);
      ++st.flagged;
    }
  }

  // rebuild flagged cells from pre-limit averages (averages are unchanged by
  // the rebuild, so in-place processing is order-independent)
  std::vector<double> wchar(w);
  std::vector<double> vals(np);
  std::vector<double> Ug(8 * np);
  for (int i : flagged) {
    CharFrames fr;
    try {
      Vec8 ubar;
      for (int c = 0; c < 8; ++c) ubar[c] = u.cell(i)[c * nm];
      fr = characteristic_frames(
          cons_to_prim(ConservedState::from_array(ubar), eos_, ropts), eos_,
          Axis::X);
    } catch (const std::runtime_error&) {
      fr.ok = false;
    }
    const double* L = fr.ok ? fr.L.data() : nullptr;
    const double* R = fr.ok ? fr.R.data() : nullptr;

    // characteristic averages over the stencil
    std::vector<double> wst(static_cast<size_t>(w) * 8);
    for (int j = 0; j < w; ++j) {
      Vec8 ub, wb;
      for (int c = 0; c < 8; ++c) ub[c] = u.cell(i - k_ + j)[c * nm];
      transform8(L, ub, wb);
      for (int c = 0; c < 8; ++c) wst[j * 8 + c] = wb[c];
    }
    for (int c = 0; c < 8; ++c) {
      for (int j = 0; j < w; ++j) wchar[j] = wst[j * 8 + c];
      w_.reconstruct(wchar.data(), vals.data());
      for (int g = 0; g < np; ++g) Ug[c * np + g] = vals[g];
    }
    for (int g = 0; g < np; ++g) {
      Vec8 wv, uv;
      for (int c = 0; c < 8; ++c) wv[c] = Ug[c * np + g];
      transform8(R, wv, uv);
      for (int c = 0; c < 8; ++c) Ug[c * np + g] = uv[c];
    }

    // admissibility at the Gauss points; fall back to P0 on failure
    bool ok = true;
    for (int g = 0; g < np && ok; ++g) {
      Vec8 uv;
      for (int c = 0; c < 8; ++c) uv[c] = Ug[c * np + g];
      try {
        (void)cons_to_prim(ConservedState::from_array(uv), eos_, ropts);
      } catch (const std::runtime_error&) {
        ok = false;
      }
    }
    double* ci = u.cell(i);
    if (!ok) {
      ++st.p0_fallback;
      for (int c = 0; c < 8; ++c)
        for (int m = 1; m < nm; ++m) ci[c * nm + m] = 0.0;
      continue;
    }
    for (int c = 0; c < 8; ++c)
      for (int m = 1; m < nm; ++m) {
        double mom = 0.0;
        for (int g = 0; g < np; ++g)
          mom += gauss_w_[g] * Ug[c * np + g] * mode_at_gauss_[m * np + g];
        ci[c * nm + m] = mom / legendre_norm(m);
      }
  }
  return st;
}

}  // namespace rmhd
