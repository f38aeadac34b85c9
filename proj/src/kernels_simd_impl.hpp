// Vectorized batch kernels over std::experimental::simd. Included by one
// translation unit per arch variant; RMHD_SIMD_VARIANT names the namespace.
// The wide path runs plain Newton from the bracket midpoint; lanes that do
// not converge cleanly are redone by the robust scalar solver.

#include <experimental/simd>

#include "rmhd/kernels.hpp"
#include "rmhd/recovery_math.hpp"

namespace stdx = std::experimental;

namespace rmhd::kernels {
namespace RMHD_SIMD_VARIANT {

using VD = stdx::native_simd<double>;
using VM = VD::mask_type;

inline VM finite_mask(VD v) { return (v == v) && (stdx::fabs(v) < 1e300); }

inline void con2prim_simd(const double* U, std::size_t us, std::size_t n,
                          const Eos& eos, const RecoverOptions& opts,
                          double* prim, std::size_t ps, unsigned char* status) {
  const std::size_t W = VD::size();
  const double cg = (eos.gamma - 1.0) / eos.gamma;
  std::size_t i = 0;
  for (; i + W <= n; i += W) {
    VD D, mx, my, mz, Bx, By, Bz, E;
    D.copy_from(U + ID * us + i, stdx::element_aligned);
    mx.copy_from(U + IMX * us + i, stdx::element_aligned);
    my.copy_from(U + IMY * us + i, stdx::element_aligned);
    mz.copy_from(U + IMZ * us + i, stdx::element_aligned);
    Bx.copy_from(U + IBX * us + i, stdx::element_aligned);
    By.copy_from(U + IBY * us + i, stdx::element_aligned);
    Bz.copy_from(U + IBZ * us + i, stdx::element_aligned);
    E.copy_from(U + IEN * us + i, stdx::element_aligned);

    const VD mu = mx * mx + my * my + mz * mz;
    const VD s = mx * Bx + my * By + mz * Bz;
    const VD beta = Bx * Bx + By * By + Bz * Bz;

    const VD hi = VD(eos.gamma) * E;
    VD lo = stdx::max(D, E - beta);
    lo = stdx::min(lo, hi * VD(1.0 - 1e-14));
    VD x = VD(0.5) * (lo + hi);

    VM conv(false);
    for (int it = 0; it < 18; ++it) {
      const auto ev = recovery_eval<VD>(x, D, E, mu, s, beta, cg);
      const VD fscale = x + beta + E + VD(0.5) * s * s / (x * x);
      const VM fdone = stdx::fabs(ev.f) <= VD(8.0 * 2.220446049250313e-16) * fscale;
      const VD xn = x - ev.f / ev.fprime;
      const VM step_ok = finite_mask(xn) && (xn > VD(0.0));
      VD xnext = x;
      stdx::where(!conv && step_ok && !fdone, xnext) = xn;
      const VM newconv =
          fdone ||
          (step_ok && (stdx::fabs(xnext - x) <= VD(opts.tol) * stdx::fabs(xnext)));
      x = xnext;
      conv = conv || newconv;
      if (stdx::all_of(conv)) break;
    }

    // compensated-residual polish, mirroring the scalar solver
    {
      const auto ev = recovery_eval<VD>(x, D, E, mu, s, beta, cg);
      const VD fa = recovery_residual_accurate<VD>(x, D, E, mu, s, beta, cg);
      const VD xn = x - fa / ev.fprime;
      const VM ok = finite_mask(xn) && (xn > VD(0.0)) &&
                    (stdx::fabs(xn - x) < VD(1e-6) * x);
      stdx::where(ok, x) = xn;
    }

    const auto ev = recovery_eval<VD>(x, D, E, mu, s, beta, cg);
    const VD g = ev.g;
    const VD vB = s / x;
    const VD denom = x + beta;
    const VD vx = (mx + vB * Bx) / denom;
    const VD vy = (my + vB * By) / denom;
    const VD vz = (mz + vB * Bz) / denom;
    const VD rho = D * ev.sqrt_g;
    const VD p = VD(cg) * (x * g - D * ev.sqrt_g);
    const VD gamma = VD(1.0) / ev.sqrt_g;
    const VD ptot = p + VD(0.5) * (beta * g + vB * vB);

    VM ok = conv && (g > VD(0.0)) && (rho > VD(0.0)) && (p > VD(0.0)) &&
            (x > lo * VD(1.0 - 1e-12)) && (x < hi * VD(1.0 + 1e-12)) &&
            finite_mask(p) && finite_mask(gamma);
    if (opts.floors)
      ok = ok && (rho >= VD(opts.rho_floor)) && (p >= VD(opts.p_floor));

    rho.copy_to(prim + IP_RHO * ps + i, stdx::element_aligned);
    vx.copy_to(prim + IP_VX * ps + i, stdx::element_aligned);
    vy.copy_to(prim + IP_VY * ps + i, stdx::element_aligned);
    vz.copy_to(prim + IP_VZ * ps + i, stdx::element_aligned);
    Bx.copy_to(prim + IP_BX * ps + i, stdx::element_aligned);
    By.copy_to(prim + IP_BY * ps + i, stdx::element_aligned);
    Bz.copy_to(prim + IP_BZ * ps + i, stdx::element_aligned);
    p.copy_to(prim + IP_P * ps + i, stdx::element_aligned);
    gamma.copy_to(prim + IP_GAMMA * ps + i, stdx::element_aligned);
    vB.copy_to(prim + IP_VDOTB * ps + i, stdx::element_aligned);
    x.copy_to(prim + IP_WTOT * ps + i, stdx::element_aligned);
    ptot.copy_to(prim + IP_PTOT * ps + i, stdx::element_aligned);

    for (std::size_t k = 0; k < W; ++k) {
      if (ok[k])
        status[i + k] = kLaneOk;
      else
        con2prim_lane(U, us, i + k, eos, opts, prim, ps, status);
    }
  }
  for (; i < n; ++i) con2prim_lane(U, us, i, eos, opts, prim, ps, status);
}

inline void flux_simd(const double* prim, std::size_t s, std::size_t n, Axis axis,
                      double* F, std::size_t fs) {
  const std::size_t W = VD::size();
  const int na = static_cast<int>(axis);
  std::size_t i = 0;
  for (; i + W <= n; i += W) {
    VD rho, v[3], B[3], p, gamma, vB, Wt, ptot;
    rho.copy_from(prim + IP_RHO * s + i, stdx::element_aligned);
    v[0].copy_from(prim + IP_VX * s + i, stdx::element_aligned);
    v[1].copy_from(prim + IP_VY * s + i, stdx::element_aligned);
    v[2].copy_from(prim + IP_VZ * s + i, stdx::element_aligned);
    B[0].copy_from(prim + IP_BX * s + i, stdx::element_aligned);
    B[1].copy_from(prim + IP_BY * s + i, stdx::element_aligned);
    B[2].copy_from(prim + IP_BZ * s + i, stdx::element_aligned);
    p.copy_from(prim + IP_P * s + i, stdx::element_aligned);
    gamma.copy_from(prim + IP_GAMMA * s + i, stdx::element_aligned);
    vB.copy_from(prim + IP_VDOTB * s + i, stdx::element_aligned);
    Wt.copy_from(prim + IP_WTOT * s + i, stdx::element_aligned);
    ptot.copy_from(prim + IP_PTOT * s + i, stdx::element_aligned);

    const VD Bsq = B[0] * B[0] + B[1] * B[1] + B[2] * B[2];
    const VD g2inv = VD(1.0) / (gamma * gamma);
    const VD vn = v[na];
    const VD Bn = B[na];

    VD m[3], bg[3];
    for (int k = 0; k < 3; ++k) {
      m[k] = (Wt + Bsq) * v[k] - vB * B[k];
      bg[k] = B[k] * g2inv + v[k] * vB;
    }
    VD out[8];
    out[ID] = rho * gamma * vn;
    for (int k = 0; k < 3; ++k) out[IMX + k] = m[k] * vn - Bn * bg[k];
    out[IMX + na] = out[IMX + na] + ptot;
    for (int k = 0; k < 3; ++k) out[IBX + k] = B[k] * vn - Bn * v[k];
    out[IBX + na] = VD(0.0);
    out[IEN] = m[na];
    for (int c = 0; c < 8; ++c)
      out[c].copy_to(F + c * fs + i, stdx::element_aligned);
  }
  if (i < n) scalar_table().flux(prim + i, s, n - i, axis, F + i, fs);
}

inline const KernelTable& table(const char* name) {
  static const KernelTable t{name, con2prim_simd, flux_simd};
  return t;
}

}  // namespace RMHD_SIMD_VARIANT
}  // namespace rmhd::kernels
