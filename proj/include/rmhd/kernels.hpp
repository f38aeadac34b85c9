#pragma once

#include <cstddef>
#include <vector>

#include "rmhd/physics.hpp"

namespace rmhd::kernels {

// Batched pointwise physics on SoA buffers: component c of lane i lives at
// data[c * stride + i]. Conserved batches use the ConsIndex layout (8 rows).
// Primitive batches carry the recovered state plus the derived quantities the
// flux kernels need (12 rows).
enum PrimIndex : int {
  IP_RHO = 0, IP_VX, IP_VY, IP_VZ, IP_BX, IP_BY, IP_BZ, IP_P,
  IP_GAMMA, IP_VDOTB, IP_WTOT,  // wtot = rho h gamma^2
  IP_PTOT,
  NPRIM = 12
};

// per-lane status: 0 ok, 1 floored, 2 failed
inline constexpr unsigned char kLaneOk = 0;
inline constexpr unsigned char kLaneFloored = 1;
inline constexpr unsigned char kLaneFailed = 2;

using Con2PrimFn = void (*)(const double* U, std::size_t ustride, std::size_t n,
                            const Eos& eos, const RecoverOptions& opts,
                            double* prim, std::size_t pstride,
                            unsigned char* status);
using FluxFn = void (*)(const double* prim, std::size_t pstride, std::size_t n,
                        Axis axis, double* F, std::size_t fstride);

struct KernelTable {
  const char* name;
  Con2PrimFn con2prim;
  FluxFn flux;
};

// Runtime-selected table. RMHD_KERNELS=scalar|native|avx2 forces a variant.
const KernelTable& active();
const KernelTable& scalar_table();
std::vector<const KernelTable*> all_tables();

// Robust single-lane recovery shared by every variant's fallback path.
void con2prim_lane(const double* U, std::size_t ustride, std::size_t i,
                   const Eos& eos, const RecoverOptions& opts, double* prim,
                   std::size_t pstride, unsigned char* status);

}  // namespace rmhd::kernels
