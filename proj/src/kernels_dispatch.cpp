#include <cstdlib>
#include <cstring>

#include "rmhd/kernels.hpp"

namespace rmhd::kernels {

const KernelTable& native_simd_table();
#if defined(RMHD_HAVE_AVX2_VARIANT)
const KernelTable& avx2_simd_table();
#endif

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* select() {
  if (const char* env = std::getenv("RMHD_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return &scalar_table();
    if (std::strcmp(env, "native") == 0) return &native_simd_table();
#if defined(RMHD_HAVE_AVX2_VARIANT)
    if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return &avx2_simd_table();
#endif
  }
#if defined(RMHD_HAVE_AVX2_VARIANT)
  if (cpu_has_avx2()) return &avx2_simd_table();
#endif
  return &native_simd_table();
}

}  // namespace

const KernelTable& active() {
  static const KernelTable* t = select();
  return *t;
}

std::vector<const KernelTable*> all_tables() {
  std::vector<const KernelTable*> out{&scalar_table(), &native_simd_table()};
#if defined(RMHD_HAVE_AVX2_VARIANT)
  if (cpu_has_avx2()) out.push_back(&avx2_simd_table());
#endif
  return out;
}

}  // namespace rmhd::kernels
