#define RMHD_SIMD_VARIANT simd_avx2
#include "kernels_simd_impl.hpp"

namespace rmhd::kernels {
const KernelTable& avx2_simd_table() { return simd_avx2::table("simd-avx2"); }
}  // namespace rmhd::kernels
