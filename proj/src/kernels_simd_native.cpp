#define RMHD_SIMD_VARIANT simd_native
#include "kernels_simd_impl.hpp"

namespace rmhd::kernels {
const KernelTable& native_simd_table() { return simd_native::table("simd-native"); }
}  // namespace rmhd::kernels
