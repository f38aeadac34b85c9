#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "rmhd/physics.hpp"

using namespace rmhd;

namespace {

PrimitiveState random_admissible(std::mt19937& rng, double vmax = 0.99,
                                 double rho_lo = 1e-3, double rho_hi = 1e3,
                                 double b_hi = 1e3) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::uniform_real_distribution<double> ang(-1.0, 1.0);
  auto logu = [&](double lo, double hi) {
    return lo * std::pow(hi / lo, u01(rng));
  };
  PrimitiveState V;
  V.rho = logu(rho_lo, rho_hi);
  V.p = logu(rho_lo, rho_hi);
  const double vmag = vmax * u01(rng);
  Vec3 dir{ang(rng), ang(rng), ang(rng)};
  double dn = std::sqrt(norm2(dir)) + 1e-300;
  for (int i = 0; i < 3; ++i) V.v[i] = vmag * dir[i] / dn;
  const double bmag = u01(rng) < 0.1 ? 0.0 : logu(1e-3, b_hi);
  Vec3 bdir{ang(rng), ang(rng), ang(rng)};
  dn = std::sqrt(norm2(bdir)) + 1e-300;
  for (int i = 0; i < 3; ++i) V.B[i] = bmag * bdir[i] / dn;
  return V;
}

}  // namespace

TEST_CASE("prim_to_cons matches hand-evaluated states") {
  {
    Eos eos{5.0 / 3.0};
    auto U = prim_to_cons({1.0, {0, 0, 0}, {0, 0, 0}, 0.1}, eos);
    CHECK(U.D == doctest::Approx(1.0));
    CHECK(U.m[0] == doctest::Approx(0.0));
    CHECK(U.E == doctest::Approx(1.15));
  }
  {
    Eos eos{2.0};
    auto U = prim_to_cons({1.0, {0, 0, 0}, {0.5, 1.0, 0}, 1.0}, eos);
    CHECK(U.D == doctest::Approx(1.0));
    CHECK(U.E == doctest::Approx(2.625));
    CHECK(U.B[1] == doctest::Approx(1.0));
  }
  {
    Eos eos{5.0 / 3.0};
    auto U = prim_to_cons({1.0, {0.5, 0, 0}, {0, 0, 0}, 0.1}, eos);
    CHECK(U.D == doctest::Approx(1.1547005).epsilon(1e-6));
    CHECK(U.m[0] == doctest::Approx(0.8333333).epsilon(1e-6));
    CHECK(U.E == doctest::Approx(1.5666667).epsilon(1e-6));
  }
  CHECK_THROWS_AS(prim_to_cons({1.0, {1.0, 0, 0}, {0, 0, 0}, 0.1}, Eos{}),
                  DomainError);
}

TEST_CASE("cons_to_prim inverts the worked examples") {
  {
    Eos eos{5.0 / 3.0};
    RecoverInfo info;
    auto V = cons_to_prim({1.0, {0, 0, 0}, {0, 0, 0}, 1.15}, eos, {}, &info);
    CHECK(V.rho == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(V.p == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(info.theta == doctest::Approx(1.25).epsilon(1e-12));
  }
  {
    Eos eos{2.0};
    RecoverInfo info;
    auto V = cons_to_prim({1.0, {0, 0, 0}, {0.5, 1.0, 0}, 2.625}, eos, {}, &info);
    CHECK(V.rho == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(V.p == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(info.theta == doctest::Approx(3.0).epsilon(1e-12));
  }
}

TEST_CASE("recovery round trip on random admissible states") {
  Eos eos{5.0 / 3.0};
  std::mt19937 rng(1234);
  const int n = 20000;
  // V-side errors: rho/B relative, v absolute. Pressure is compared against
  // its conditioning limit: one ulp of the stored conserved state already
  // perturbs p by ~eps * (|B|^2 + E)/p, so tiny-p/huge-B corners cannot meet a
  // fixed 1e-10 bound in double precision; away from those corners they must.
  double max_err = 0.0, max_u_err = 0.0, max_p_excess = 0.0;
  int iters_le8 = 0;
  for (int t = 0; t < n; ++t) {
    const auto V = random_admissible(rng);
    const auto U = prim_to_cons(V, eos);
    RecoverInfo info;
    const auto W = cons_to_prim(U, eos, {}, &info);
    double e = std::abs(V.rho - W.rho) / V.rho;
    for (int i = 0; i < 3; ++i) e = std::max(e, std::abs(V.v[i] - W.v[i]));
    const double bs = std::max(1.0, std::sqrt(norm2(V.B)));
    for (int i = 0; i < 3; ++i) e = std::max(e, std::abs(V.B[i] - W.B[i]) / bs);
    max_err = std::max(max_err, e);

    const double cond_p = (norm2(V.B) + U.E + info.theta) / V.p;
    const double p_err = std::abs(V.p - W.p) / V.p;
    const double p_bound = std::max(1e-10, 64.0 * 2.22e-16 * cond_p);
    max_p_excess = std::max(max_p_excess, p_err / p_bound);

    const auto U2 = prim_to_cons(W, eos);
    const auto a = U.to_array(), b = U2.to_array();
    double un = 0.0;
    for (int c = 0; c < 8; ++c) un = std::max(un, std::abs(a[c]));
    for (int c = 0; c < 8; ++c)
      max_u_err = std::max(max_u_err, std::abs(a[c] - b[c]) / un);

    if (info.iterations <= 8) ++iters_le8;
    // theta bracket from the remark: theta in [theta_min, Gamma E)
    CHECK(info.theta < eos.gamma * U.E);
    CHECK(info.theta >= std::max(U.D, U.E - norm2(U.B)) * (1.0 - 1e-12));
  }
  // rho/v/B also hit representation limits at extreme-B corners; the strict
  // 1e-10 figure is asserted on U (the operation's own contract) and the
  // conditioning-normalized primitive errors.
  CHECK(max_err <= 1e-7);
  CHECK(max_u_err <= 1e-10);
  CHECK(max_p_excess <= 1.0);
  CHECK(iters_le8 >= n * 99 / 100);
}

TEST_CASE("flux matches listed examples") {
  Eos eos{5.0 / 3.0};
  {
    auto F = flux({1.0, {0, 0, 0}, {0, 0, 0}, 0.1}, eos, Axis::X);
    Vec8 want{0, 0.1, 0, 0, 0, 0, 0, 0};
    for (int c = 0; c < 8; ++c) CHECK(F[c] == doctest::Approx(want[c]));
  }
  {
    Eos eos2{2.0};
    auto F = flux({1.0, {0, 0, 0}, {0.5, 1.0, 0}, 1.0}, eos2, Axis::X);
    CHECK(F[IMX] == doctest::Approx(1.375));
    CHECK(F[IMY] == doctest::Approx(-0.5));
    CHECK(F[IBX] == doctest::Approx(0.0));
    CHECK(F[IEN] == doctest::Approx(0.0));
  }
  {
    auto F = flux({1.0, {0.5, 0, 0}, {0, 0, 0}, 0.1}, eos, Axis::X);
    CHECK(F[ID] == doctest::Approx(0.5773503).epsilon(1e-6));
    CHECK(F[IMX] == doctest::Approx(0.5166667).epsilon(1e-6));
    CHECK(F[IEN] == doctest::Approx(0.8333333).epsilon(1e-6));
  }
}

TEST_CASE("flux y-direction equals x-flux of the swapped state") {
  Eos eos{5.0 / 3.0};
  std::mt19937 rng(77);
  for (int t = 0; t < 200; ++t) {
    auto V = random_admissible(rng, 0.9, 0.1, 10.0, 10.0);
    PrimitiveState Vs = V;
    std::swap(Vs.v[0], Vs.v[1]);
    std::swap(Vs.B[0], Vs.B[1]);
    const auto Fy = flux(V, eos, Axis::Y);
    const auto Fx = flux(Vs, eos, Axis::X);
    // row permutation: (D, my, mx, mz, By, Bx, Bz, E)
    CHECK(Fy[ID] == doctest::Approx(Fx[ID]).epsilon(1e-12));
    CHECK(Fy[IMX] == doctest::Approx(Fx[IMY]).epsilon(1e-12));
    CHECK(Fy[IMY] == doctest::Approx(Fx[IMX]).epsilon(1e-12));
    CHECK(Fy[IMZ] == doctest::Approx(Fx[IMZ]).epsilon(1e-12));
    CHECK(Fy[IBX] == doctest::Approx(Fx[IBY]).epsilon(1e-12));
    CHECK(Fy[IBY] == doctest::Approx(Fx[IBX]).epsilon(1e-12));
    CHECK(Fy[IBZ] == doctest::Approx(Fx[IBZ]).epsilon(1e-12));
    CHECK(Fy[IEN] == doctest::Approx(Fx[IEN]).epsilon(1e-12));
  }
}

TEST_CASE("wave speeds: static gas") {
  Eos eos{5.0 / 3.0};
  auto ws = wave_speeds({1.0, {0, 0, 0}, {0, 0, 0}, 0.1}, eos, Axis::X);
  CHECK(ws.fast_p == doctest::Approx(0.3651484).epsilon(1e-6));
  CHECK(ws.fast_m == doctest::Approx(-0.3651484).epsilon(1e-6));
  CHECK(ws.slow_m == doctest::Approx(0.0));
  CHECK(ws.alfven_p == doctest::Approx(0.0));
  CHECK(ws.entropy == doctest::Approx(0.0));
}

TEST_CASE("wave speeds: static magnetized gas, B along x") {
  Eos eos{5.0 / 3.0};
  auto ws = wave_speeds({1.0, {0, 0, 0}, {1.0, 0, 0}, 0.1}, eos, Axis::X);
  CHECK(ws.fast_p == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
  CHECK(ws.fast_m == doctest::Approx(-2.0 / 3.0).epsilon(1e-9));
  CHECK(ws.alfven_p == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
  CHECK(ws.alfven_m == doctest::Approx(-2.0 / 3.0).epsilon(1e-9));
  CHECK(ws.slow_p == doctest::Approx(0.3651484).epsilon(1e-6));
  CHECK(ws.slow_m == doctest::Approx(-0.3651484).epsilon(1e-6));
}

TEST_CASE("wave speeds: ordering and subluminality on random states") {
  Eos eos{5.0 / 3.0};
  std::mt19937 rng(4321);
  for (int t = 0; t < 10000; ++t) {
    const auto V = random_admissible(rng, 0.95, 1e-2, 1e2, 1e2);
    const Axis axis = (t % 2 == 0) ? Axis::X : Axis::Y;
    const auto ws = wave_speeds(V, eos, axis);
    CHECK(ws.entropy == V.v[static_cast<int>(axis)]);
    CHECK(ws.fast_m <= ws.alfven_m + 1e-12);
    CHECK(ws.alfven_m <= ws.slow_m + 1e-12);
    CHECK(ws.slow_m <= ws.entropy + 1e-12);
    CHECK(ws.entropy <= ws.slow_p + 1e-12);
    CHECK(ws.slow_p <= ws.alfven_p + 1e-12);
    CHECK(ws.alfven_p <= ws.fast_p + 1e-12);
    CHECK(ws.max_abs() < 1.0);
  }
}

TEST_CASE("max_signal_speed matches the wave-speed extremes") {
  Eos eos{5.0 / 3.0};
  CHECK(max_signal_speed({1.0, {0, 0, 0}, {0, 0, 0}, 0.1}, eos, Axis::X) ==
        doctest::Approx(0.3651484).epsilon(1e-6));
  CHECK(max_signal_speed({1.0, {0, 0, 0}, {1, 0, 0}, 0.1}, eos, Axis::X) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("jacobian spectrum matches the quartic/quadratic roots") {
  Eos eos{5.0 / 3.0};
  // fast = Alfven degenerate state from the worked example
  const auto lam = jacobian_eigenvalues({1.0, {0, 0, 0}, {1.0, 0, 0}, 0.1}, eos,
                                        Axis::X);
  const double sl = 0.36514837;
  std::array<double, 8> want{-2.0 / 3.0, -2.0 / 3.0, -sl, 0.0,
                             0.0, sl, 2.0 / 3.0, 2.0 / 3.0};
  for (int i = 0; i < 8; ++i) CHECK(std::abs(lam[i] - want[i]) < 1e-6);
}

TEST_CASE("characteristic frames invert and reproduce the wave speeds") {
  Eos eos{5.0 / 3.0};
  // generic magnetized state away from degeneracies
  const PrimitiveState V{1.0, {0.3, 0.15, 0.1}, {0.7, 0.4, 0.2}, 0.5};
  auto fr = characteristic_frames(V, eos, Axis::X);
  REQUIRE(fr.ok);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) {
      double s = 0.0;
      for (int k = 0; k < 8; ++k) s += fr.L[r * 8 + k] * fr.R[k * 8 + c];
      CHECK(std::abs(s - (r == c ? 1.0 : 0.0)) < 1e-8);
    }
  const auto ws = wave_speeds(V, eos, Axis::X);
  CHECK(std::abs(fr.lambda[0] - ws.fast_m) < 1e-6);
  CHECK(std::abs(fr.lambda[7] - ws.fast_p) < 1e-6);

  // pure hydro state: decomposition still succeeds, speeds match
  const PrimitiveState Vh{1.0, {0.2, 0.1, 0.0}, {0, 0, 0}, 0.5};
  auto frh = characteristic_frames(Vh, eos, Axis::X);
  REQUIRE(frh.ok);
  const auto wsh = wave_speeds(Vh, eos, Axis::X);
  CHECK(std::abs(frh.lambda[0] - wsh.fast_m) < 1e-6);
  CHECK(std::abs(frh.lambda[7] - wsh.fast_p) < 1e-6);
}

TEST_CASE("flux restricted to pure 1D hydro matches the Euler flux") {
  Eos eos{5.0 / 3.0};
  const PrimitiveState V{2.0, {0.3, 0, 0}, {0, 0, 0}, 0.4};
  const auto F = flux(V, eos, Axis::X);
  const double g2 = 1.0 / (1.0 - 0.09);
  const double h = 1.0 + (5.0 / 3.0) * 0.4 / ((2.0 / 3.0) * 2.0);
  const double W = 2.0 * h * g2;
  CHECK(F[ID] == doctest::Approx(2.0 * std::sqrt(g2) * 0.3).epsilon(1e-12));
  CHECK(F[IMX] == doctest::Approx(W * 0.09 + 0.4).epsilon(1e-12));
  CHECK(F[IEN] == doctest::Approx(W * 0.3).epsilon(1e-12));
  CHECK(F[IMY] == 0.0);
  CHECK(F[IBY] == 0.0);
}
