#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "rmhd/kernels.hpp"

using namespace rmhd;
using namespace rmhd::kernels;

namespace {

struct Batch {
  std::size_t n;
  std::vector<double> U;     // 8 x n
  std::vector<double> prim;  // NPRIM x n
  std::vector<double> F;     // 8 x n
  std::vector<unsigned char> status;
  explicit Batch(std::size_t n_)
      : n(n_), U(8 * n_), prim(NPRIM * n_), F(8 * n_), status(n_, 0) {}
};

Batch random_batch(std::size_t n, unsigned seed, const Eos& eos) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::uniform_real_distribution<double> sym(-1.0, 1.0);
  Batch b(n);
  for (std::size_t i = 0; i < n; ++i) {
    PrimitiveState V;
    V.rho = std::pow(10.0, -2.0 + 4.0 * u01(rng));
    V.p = std::pow(10.0, -2.0 + 4.0 * u01(rng));
    const double vm = 0.95 * u01(rng);
    Vec3 d{sym(rng), sym(rng), sym(rng)};
    const double dn = std::sqrt(norm2(d)) + 1e-300;
    for (int k = 0; k < 3; ++k) V.v[k] = vm * d[k] / dn;
    for (int k = 0; k < 3; ++k) V.B[k] = 5.0 * sym(rng);
    const auto Uc = prim_to_cons(V, eos);
    const auto ua = Uc.to_array();
    for (int c = 0; c < 8; ++c) b.U[c * n + i] = ua[c];
  }
  return b;
}

}  // namespace

TEST_CASE("kernel variants agree with the scalar reference") {
  const Eos eos{5.0 / 3.0};
  const RecoverOptions opts;
  const std::size_t n = 4097;  // deliberately not a multiple of the lane width

  Batch ref = random_batch(n, 99, eos);
  scalar_table().con2prim(ref.U.data(), n, n, eos, opts, ref.prim.data(), n,
                          ref.status.data());
  scalar_table().flux(ref.prim.data(), n, n, Axis::X, ref.F.data(), n);
  for (std::size_t i = 0; i < n; ++i) REQUIRE(ref.status[i] == kLaneOk);

  for (const KernelTable* t : all_tables()) {
    CAPTURE(t->name);
    Batch b = random_batch(n, 99, eos);
    t->con2prim(b.U.data(), n, n, eos, opts, b.prim.data(), n, b.status.data());
    t->flux(b.prim.data(), n, n, Axis::X, b.F.data(), n);
    double perr = 0.0, ferr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(b.status[i] == kLaneOk);
      for (int c = 0; c < NPRIM; ++c) {
        const double a = ref.prim[c * n + i], bb = b.prim[c * n + i];
        perr = std::max(perr, std::abs(a - bb) / (1.0 + std::abs(a)));
      }
      for (int c = 0; c < 8; ++c) {
        const double a = ref.F[c * n + i], bb = b.F[c * n + i];
        ferr = std::max(ferr, std::abs(a - bb) / (1.0 + std::abs(a)));
      }
    }
    CHECK(perr < 1e-11);
    CHECK(ferr < 1e-10);
  }
}

TEST_CASE("kernel variants flag inadmissible lanes identically") {
  const Eos eos{5.0 / 3.0};
  const RecoverOptions opts;
  const std::size_t n = 16;
  for (const KernelTable* t : all_tables()) {
    CAPTURE(t->name);
    Batch b = random_batch(n, 5, eos);
    // poison one lane: huge momentum with tiny energy has no subluminal root
    b.U[ID * n + 3] = 1.0;
    b.U[IMX * n + 3] = 50.0;
    b.U[IEN * n + 3] = 1.0;
    t->con2prim(b.U.data(), n, n, eos, opts, b.prim.data(), n, b.status.data());
    CHECK(b.status[3] == kLaneFailed);
    for (std::size_t i = 0; i < n; ++i)
      if (i != 3) CHECK(b.status[i] == kLaneOk);
  }
}

TEST_CASE("active kernel table is one of the registered variants") {
  const auto& a = active();
  bool found = false;
  for (const KernelTable* t : all_tables())
    if (t == &a) found = true;
  CHECK(found);
}
