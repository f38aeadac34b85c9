#include <cmath>

#include "rmhd/kernels.hpp"

namespace rmhd::kernels {

void con2prim_lane(const double* U, std::size_t ustride, std::size_t i,
                   const Eos& eos, const RecoverOptions& opts, double* prim,
                   std::size_t pstride, unsigned char* status) {
  ConservedState u;
  u.D = U[ID * ustride + i];
  u.m = {U[IMX * ustride + i], U[IMY * ustride + i], U[IMZ * ustride + i]};
  u.B = {U[IBX * ustride + i], U[IBY * ustride + i], U[IBZ * ustride + i]};
  u.E = U[IEN * ustride + i];
  RecoverInfo info;
  try {
    const PrimitiveState V = cons_to_prim(u, eos, opts, &info);
    const double gamma = V.lorentz();
    const double vB = dot(V.v, V.B);
    const double bsq = norm2(V.B) / (gamma * gamma) + vB * vB;
    prim[IP_RHO * pstride + i] = V.rho;
    prim[IP_VX * pstride + i] = V.v[0];
    prim[IP_VY * pstride + i] = V.v[1];
    prim[IP_VZ * pstride + i] = V.v[2];
    prim[IP_BX * pstride + i] = V.B[0];
    prim[IP_BY * pstride + i] = V.B[1];
    prim[IP_BZ * pstride + i] = V.B[2];
    prim[IP_P * pstride + i] = V.p;
    prim[IP_GAMMA * pstride + i] = gamma;
    prim[IP_VDOTB * pstride + i] = vB;
    prim[IP_WTOT * pstride + i] = V.rho * eos.enthalpy(V.rho, V.p) * gamma * gamma;
    prim[IP_PTOT * pstride + i] = V.p + 0.5 * bsq;
    status[i] = info.floored ? kLaneFloored : kLaneOk;
  } catch (const std::runtime_error&) {
    for (int c = 0; c < NPRIM; ++c) prim[c * pstride + i] = 0.0;
    status[i] = kLaneFailed;
  }
}

namespace {

void con2prim_scalar(const double* U, std::size_t ustride, std::size_t n,
                     const Eos& eos, const RecoverOptions& opts, double* prim,
                     std::size_t pstride, unsigned char* status) {
  for (std::size_t i = 0; i < n; ++i)
    con2prim_lane(U, ustride, i, eos, opts, prim, pstride, status);
}

void flux_scalar(const double* prim, std::size_t s, std::size_t n, Axis axis,
                 double* F, std::size_t fs) {
  const int na = static_cast<int>(axis);
  for (std::size_t i = 0; i < n; ++i) {
    const double rho = prim[IP_RHO * s + i];
    const double v[3] = {prim[IP_VX * s + i], prim[IP_VY * s + i],
                         prim[IP_VZ * s + i]};
    const double B[3] = {prim[IP_BX * s + i], prim[IP_BY * s + i],
                         prim[IP_BZ * s + i]};
    const double gamma = prim[IP_GAMMA * s + i];
    const double vB = prim[IP_VDOTB * s + i];
    const double W = prim[IP_WTOT * s + i];
    const double ptot = prim[IP_PTOT * s + i];
    const double Bsq = B[0] * B[0] + B[1] * B[1] + B[2] * B[2];
    const double g2inv = 1.0 / (gamma * gamma);
    const double vn = v[na];
    const double Bn = B[na];
    const double D = rho * gamma;
    double m[3], bg[3];
    for (int k = 0; k < 3; ++k) {
      m[k] = (W + Bsq) * v[k] - vB * B[k];
      bg[k] = B[k] * g2inv + v[k] * vB;
    }
    F[ID * fs + i] = D * vn;
    for (int k = 0; k < 3; ++k) F[(IMX + k) * fs + i] = m[k] * vn - Bn * bg[k];
    F[(IMX + na) * fs + i] += ptot;
    for (int k = 0; k < 3; ++k) F[(IBX + k) * fs + i] = B[k] * vn - Bn * v[k];
    F[(IBX + na) * fs + i] = 0.0;
    F[IEN * fs + i] = m[na];
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable t{"scalar", con2prim_scalar, flux_scalar};
  return t;
}

}  // namespace rmhd::kernels
