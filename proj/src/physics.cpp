#include "rmhd/physics.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "rmhd/polyroots.hpp"
#include "rmhd/recovery_math.hpp"

namespace rmhd {

namespace {

// axis components: (normal, transverse1, transverse2)
inline int ax(Axis a) { return static_cast<int>(a); }

struct Derived {
  double gamma, gamma2, vB, bsq, h, W, pm, ptot;
  Vec3 b_over_gamma;  // b_i / gamma = B_i/gamma^2 + v_i (v.B)
};

Derived derive(const PrimitiveState& V, const Eos& eos) {
  Derived d;
  const double v2 = norm2(V.v);
  d.gamma2 = 1.0 / (1.0 - v2);
  d.gamma = std::sqrt(d.gamma2);
  d.vB = dot(V.v, V.B);
  d.bsq = norm2(V.B) / d.gamma2 + d.vB * d.vB;
  d.h = eos.enthalpy(V.rho, V.p);
  d.W = V.rho * d.h * d.gamma2;
  d.pm = 0.5 * d.bsq;
  d.ptot = V.p + d.pm;
  for (int i = 0; i < 3; ++i)
    d.b_over_gamma[i] = V.B[i] / d.gamma2 + V.v[i] * d.vB;
  return d;
}

}  // namespace

ConservedState prim_to_cons(const PrimitiveState& V, const Eos& eos) {
  if (norm2(V.v) >= 1.0)
    throw DomainError("prim_to_cons: |v| >= 1");
  if (!(V.rho > 0.0) || !(V.p > 0.0))
    throw DomainError("prim_to_cons: rho and p must be positive");
  const Derived d = derive(V, eos);
  const double Bsq = norm2(V.B);
  ConservedState U;
  U.D = V.rho * d.gamma;
  for (int i = 0; i < 3; ++i)
    U.m[i] = (d.W + Bsq) * V.v[i] - d.vB * V.B[i];
  U.B = V.B;
  U.E = d.W - d.ptot + Bsq;
  return U;
}

PrimitiveState cons_to_prim(const ConservedState& U, const Eos& eos,
                            const RecoverOptions& opts, RecoverInfo* info,
                            double theta_hint) {
  const double D = U.D, E = U.E;
  const double mu = norm2(U.m);
  const double s = dot(U.m, U.B);
  const double beta = norm2(U.B);
  const double cg = (eos.gamma - 1.0) / eos.gamma;

  if (!(D > 0.0) || !(E > 0.0))
    throw InadmissibleStateError("cons_to_prim: D or E not positive");

  // E >= theta/Gamma + |B|^2/2 for admissible states, which sharpens the
  // remark's theta < Gamma E bound and keeps the midpoint start close.
  const double hi = eos.gamma * (E - 0.5 * beta);
  if (!(hi > 0.0))
    throw InadmissibleStateError("cons_to_prim: energy below magnetic floor");
  // theta >= E + p + p_m - |B|^2 >= E - |B|^2 and theta = D*h*gamma >= D.
  double lo = std::max(D, E - beta);
  lo = std::min(lo, hi * (1.0 - 1e-14));
  const double g_min = opts.eps_cap * opts.eps_cap;
  if (recovery_g(lo, mu, s, beta) < g_min) {
    // pull the lower bracket end up to the Lorentz-factor cap (g increasing)
    if (recovery_g(hi, mu, s, beta) < g_min)
      throw InadmissibleStateError("cons_to_prim: no subluminal theta in bracket");
    double a = lo, b = hi;
    for (int it = 0; it < 80 && (b - a) > 1e-15 * b; ++it) {
      const double mid = 0.5 * (a + b);
      if (recovery_g(mid, mu, s, beta) < g_min) a = mid; else b = mid;
    }
    lo = b;
  }

  double x = (theta_hint > lo && theta_hint < hi) ? theta_hint : 0.5 * (lo + hi);
  double bl = lo, bh = hi;  // running bracket, f assumed negative left of the root
  int iter = 0;
  double fx = 0.0;
  bool converged = false;
  for (; iter < opts.max_iter; ++iter) {
    const auto ev = recovery_eval(x, D, E, mu, s, beta, cg);
    fx = ev.f;
    if (!std::isfinite(fx)) {
      x = 0.5 * (bl + bh);
      continue;
    }
    // |f| below the fp noise floor of its term sum means "done"
    const double fscale = x + beta + E + 0.5 * s * s / (x * x);
    if (std::abs(fx) <= 8.0 * 2.220446049250313e-16 * fscale) {
      converged = true;
      ++iter;
      break;
    }
    if (fx < 0.0) bl = std::max(bl, x); else bh = std::min(bh, x);
    double xn = x - fx / ev.fprime;
    if (!std::isfinite(xn)) {
      xn = 0.5 * (bl + bh);
    } else if (xn <= bl) {
      // rejected step: keep the Newton direction, land just inside the bracket
      xn = x - 0.99 * (x - bl);
    } else if (xn >= bh) {
      xn = x + 0.99 * (bh - x);
    }
    const double dx = std::abs(xn - x);
    x = xn;
    if (dx <= opts.tol * x) { converged = true; ++iter; break; }
  }
  if (!converged)
    throw RecoveryError("cons_to_prim: Newton did not converge", std::abs(fx));

  // one compensated-residual polish step to reach the conditioning limit
  {
    const auto ev = recovery_eval(x, D, E, mu, s, beta, cg);
    const double fa = recovery_residual_accurate(x, D, E, mu, s, beta, cg);
    const double xn = x - fa / ev.fprime;
    if (std::isfinite(xn) && xn > 0.0 && std::abs(xn - x) < 1e-6 * x) x = xn;
  }

  const auto ev = recovery_eval(x, D, E, mu, s, beta, cg);
  const double g = ev.g;
  if (!(g > 0.0))
    throw InadmissibleStateError("cons_to_prim: recovered superluminal state");

  PrimitiveState V;
  const double vB = s / x;
  for (int i = 0; i < 3; ++i) V.v[i] = (U.m[i] + vB * U.B[i]) / (x + beta);
  V.B = U.B;
  V.rho = D * ev.sqrt_g;
  V.p = cg * (x * g - D * ev.sqrt_g);

  bool floored = false;
  if (!(V.rho > 0.0) || !(V.p > 0.0)) {
    if (opts.floors) {
      if (!(V.rho > 0.0)) { V.rho = opts.rho_floor; floored = true; }
      if (!(V.p > 0.0)) { V.p = opts.p_floor; floored = true; }
    } else {
      throw InadmissibleStateError("cons_to_prim: nonpositive rho or p recovered");
    }
  }
  if (opts.floors) {
    if (V.rho < opts.rho_floor) { V.rho = opts.rho_floor; floored = true; }
    if (V.p < opts.p_floor) { V.p = opts.p_floor; floored = true; }
  }

  if (info) {
    info->iterations = iter;
    info->residual = std::abs(fx);
    info->theta = x;
    info->floored = floored;
  }
  return V;
}

Vec8 flux(const PrimitiveState& V, const Eos& eos, Axis axis) {
  const Derived d = derive(V, eos);
  const ConservedState U = prim_to_cons(V, eos);
  const int n = ax(axis);
  const double vn = V.v[n];
  const double Bn = V.B[n];
  Vec8 F{};
  F[ID] = U.D * vn;
  for (int i = 0; i < 3; ++i)
    F[IMX + i] = U.m[i] * vn - Bn * d.b_over_gamma[i];
  F[IMX + n] += d.ptot;
  for (int i = 0; i < 3; ++i)
    F[IBX + i] = V.B[i] * vn - Bn * V.v[i];
  F[IBX + n] = 0.0;
  F[IEN] = U.m[n];
  return F;
}

namespace {

// polynomial helpers on fixed arrays (index = power)
std::array<double, 3> square_linear(double c0, double c1) {
  return {c0 * c0, 2.0 * c0 * c1, c1 * c1};
}
std::array<double, 5> square_quadratic(const std::array<double, 3>& a) {
  std::array<double, 5> r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i + j] += a[i] * a[j];
  return r;
}

}  // namespace

WaveSpeeds wave_speeds(const PrimitiveState& V, const Eos& eos, Axis axis) {
  const int n = ax(axis);
  const Derived d = derive(V, eos);
  const double v1 = V.v[n];
  const double B1 = V.B[n];
  const double w = V.rho * d.h;
  const double cs2 = eos.sound_speed2(V.rho, V.p);
  const double b0 = d.gamma * d.vB;
  const double b1 = d.gamma * d.b_over_gamma[n];
  const double bsq = d.bsq;
  const double v2 = norm2(V.v);

  WaveSpeeds ws{};
  ws.entropy = v1;

  // Alfven pair from (rho h + |b|^2) gamma^2 (v1-l)^2 = (b1 - b0 l)^2
  {
    const double sA = std::sqrt((w + bsq) * d.gamma2);
    const double lp = (sA * v1 - b1) / (sA - b0);
    const double lm = (sA * v1 + b1) / (sA + b0);
    ws.alfven_m = std::min(lp, lm);
    ws.alfven_p = std::max(lp, lm);
  }

  const double Bscale = std::sqrt(norm2(V.B));
  if (v2 <= 1e-28) {
    // static fluid: biquadratic (w+|b|^2) l^4 - (|b|^2 + w cs2 + B1^2 cs2) l^2 + cs2 B1^2 = 0
    const double qa = w + bsq;
    const double qb = -(bsq + w * cs2 + B1 * B1 * cs2);
    const double qc = cs2 * B1 * B1;
    const double disc = std::max(qb * qb - 4.0 * qa * qc, 0.0);
    const double sq = std::sqrt(disc);
    const double z1 = (-qb + sq) / (2.0 * qa);
    const double z2 = qc / (qa * z1);
    const double lf = std::sqrt(std::max(z1, z2));
    const double ls = std::sqrt(std::max(std::min(z1, z2), 0.0));
    ws.fast_m = -lf; ws.slow_m = -ls; ws.slow_p = ls; ws.fast_p = lf;
  } else if (std::abs(B1) <= 1e-13 * std::max(1.0, Bscale)) {
    // zero normal field: fast pair from the quadratic, slow pair collapses to v1
    const double a2 = w * (cs2 + d.gamma2 * (1.0 - cs2)) + bsq - cs2 * d.vB * d.vB;
    const double a1 = -2.0 * w * d.gamma2 * v1 * (1.0 - cs2);
    const double a0 = w * (-cs2 + d.gamma2 * v1 * v1 * (1.0 - cs2)) - bsq +
                      cs2 * d.vB * d.vB;
    const double disc = std::max(a1 * a1 - 4.0 * a2 * a0, 0.0);
    const double sq = std::sqrt(disc);
    const double r1 = (-a1 - sq) / (2.0 * a2);
    const double r2 = (-a1 + sq) / (2.0 * a2);
    ws.fast_m = std::min(r1, r2);
    ws.fast_p = std::max(r1, r2);
    ws.slow_m = ws.slow_p = v1;
    ws.alfven_m = ws.alfven_p = v1;
  } else {
    // general quartic: rho h (1-cs2) a^4 = (1-l^2)[(|b|^2 + rho h cs2) a^2 - cs2 (b1 - l b0)^2]
    const auto a2poly = square_linear(-v1, 1.0);           // (l - v1)^2
    const auto a4poly = square_quadratic(a2poly);          // (l - v1)^4
    const auto bb = square_linear(b1, -b0);                // (b1 - l b0)^2
    const double A = bsq + w * cs2;
    std::array<double, 5> rhs{};                           // A g2 (l-v1)^2 - cs2 (b1-l b0)^2
    for (int i = 0; i < 3; ++i)
      rhs[i] = A * d.gamma2 * a2poly[i] - cs2 * bb[i];
    std::array<double, 5> P{};
    const double lead = w * (1.0 - cs2) * d.gamma2 * d.gamma2;
    for (int i = 0; i < 5; ++i) P[i] = lead * a4poly[i];
    // subtract (1 - l^2) * rhs
    for (int i = 0; i < 5; ++i) P[i] -= rhs[i];
    for (int i = 0; i + 2 < 5; ++i) P[i + 2] += rhs[i];
    double res = 0.0;
    const auto roots = quartic_real_roots(P, &res);
    if (res > 1e-7)
      throw EigenvalueError("wave_speeds: quartic residual too large after polish");
    ws.fast_m = roots[0]; ws.slow_m = roots[1];
    ws.slow_p = roots[2]; ws.fast_p = roots[3];
  }

  // Ordering and subluminality. Near fast/Alfven or slow/entropy degeneracies
  // the polished quartic roots carry O(1e-8) pairing fuzz, so the clamp
  // tolerance is loose; genuine violations still raise.
  const double tol = 1e-6;
  auto clamp_ord = [tol](double val, double lo, double hi, const char* what) {
    if (val < lo - tol || val > hi + tol)
      throw EigenvalueError(std::string("wave_speeds: ordering violated at ") + what);
    return std::clamp(val, lo, hi);
  };
  ws.alfven_m = clamp_ord(ws.alfven_m, ws.fast_m, ws.entropy, "alfven-");
  ws.slow_m = clamp_ord(ws.slow_m, ws.alfven_m, ws.entropy, "slow-");
  ws.alfven_p = clamp_ord(ws.alfven_p, ws.entropy, ws.fast_p, "alfven+");
  ws.slow_p = clamp_ord(ws.slow_p, ws.entropy, ws.alfven_p, "slow+");
  if (ws.max_abs() >= 1.0) {
    if (ws.max_abs() > 1.0 + 1e-10)
      throw EigenvalueError("wave_speeds: superluminal root");
    ws.fast_m = std::max(ws.fast_m, -(1.0 - 1e-16));
    ws.fast_p = std::min(ws.fast_p, 1.0 - 1e-16);
  }
  return ws;
}

double max_signal_speed(const PrimitiveState& V, const Eos& eos, Axis axis) {
  return wave_speeds(V, eos, axis).max_abs();
}

std::array<double, 64> flux_jacobian(const ConservedState& U, const Eos& eos,
                                     Axis axis) {
  RecoverOptions opts;
  RecoverInfo base_info;
  (void)cons_to_prim(U, eos, opts, &base_info);
  const double hint = base_info.theta;
  Vec8 u = U.to_array();
  double umax = 0.0;
  for (double c : u) umax = std::max(umax, std::abs(c));

  std::array<double, 64> J{};
  for (int col = 0; col < 8; ++col) {
    const double delta = 1e-6 * std::max({std::abs(u[col]), 1e-3 * umax, 1e-12});
    Vec8 up = u, um = u;
    up[col] += delta;
    um[col] -= delta;
    const Vec8 Fp = flux(cons_to_prim(ConservedState::from_array(up), eos, opts,
                                      nullptr, hint), eos, axis);
    const Vec8 Fm = flux(cons_to_prim(ConservedState::from_array(um), eos, opts,
                                      nullptr, hint), eos, axis);
    for (int row = 0; row < 8; ++row)
      J[row * 8 + col] = (Fp[row] - Fm[row]) / (2.0 * delta);
  }
  return J;
}

std::array<double, 8> jacobian_eigenvalues(const PrimitiveState& V, const Eos& eos,
                                           Axis axis, double* max_imag) {
  const auto J = flux_jacobian(prim_to_cons(V, eos), eos, axis);
  using Mat8 = Eigen::Matrix<double, 8, 8>;
  Mat8 A = Eigen::Map<const Eigen::Matrix<double, 8, 8, Eigen::RowMajor>>(J.data());
  Eigen::EigenSolver<Mat8> es(A, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw EigenvalueError("jacobian_eigenvalues: eigensolver failed");
  std::array<double, 8> out;
  double mi = 0.0;
  for (int i = 0; i < 8; ++i) {
    out[i] = es.eigenvalues()[i].real();
    mi = std::max(mi, std::abs(es.eigenvalues()[i].imag()));
  }
  std::sort(out.begin(), out.end());
  if (max_imag) *max_imag = mi;
  return out;
}

CharFrames characteristic_frames(const PrimitiveState& V, const Eos& eos, Axis axis) {
  CharFrames fr;
  std::array<double, 64> J;
  try {
    J = flux_jacobian(prim_to_cons(V, eos), eos, axis);
  } catch (const std::runtime_error&) {
    return fr;  // ok = false
  }

  using Mat8 = Eigen::Matrix<double, 8, 8>;
  Mat8 A = Eigen::Map<const Eigen::Matrix<double, 8, 8, Eigen::RowMajor>>(J.data());
  Eigen::EigenSolver<Mat8> es(A, /*computeEigenvectors=*/true);
  if (es.info() != Eigen::Success) return fr;

  const auto lam = es.eigenvalues();
  const auto vecs = es.eigenvectors();
  double lmax = 0.0;
  for (int i = 0; i < 8; ++i) lmax = std::max(lmax, std::abs(lam[i]));
  for (int i = 0; i < 8; ++i)
    if (std::abs(lam[i].imag()) > 1e-8 * (1.0 + lmax)) return fr;

  // Realify: conjugate eigenvector pairs of (numerically split) repeated real
  // eigenvalues span a real 2D eigenspace; take (Re v, Im v) for the pair.
  Mat8 Rraw;
  std::array<double, 8> lraw;
  for (int i = 0; i < 8; ++i) {
    lraw[i] = lam[i].real();
    double im_norm = 0.0, re_norm = 0.0;
    for (int r = 0; r < 8; ++r) {
      im_norm = std::max(im_norm, std::abs(vecs(r, i).imag()));
      re_norm = std::max(re_norm, std::abs(vecs(r, i).real()));
    }
    if (im_norm <= 1e-8 * (re_norm + 1e-300)) {
      for (int r = 0; r < 8; ++r) Rraw(r, i) = vecs(r, i).real();
    } else if (i + 1 < 8 && std::abs(lam[i + 1].real() - lam[i].real()) <=
                                1e-7 * (1.0 + lmax)) {
      for (int r = 0; r < 8; ++r) {
        Rraw(r, i) = vecs(r, i).real();
        Rraw(r, i + 1) = vecs(r, i).imag();
      }
      lraw[i + 1] = lam[i + 1].real();
      ++i;
    } else {
      return fr;
    }
  }

  std::array<int, 8> order{0, 1, 2, 3, 4, 5, 6, 7};
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return lraw[a] < lraw[b]; });

  Mat8 R;
  for (int k = 0; k < 8; ++k) {
    const int i = order[k];
    fr.lambda[k] = lraw[i];
    // deterministic normalization: largest-magnitude entry set to +1
    int imax = 0;
    double amax = 0.0;
    for (int r = 0; r < 8; ++r) {
      const double a = std::abs(Rraw(r, i));
      if (a > amax) { amax = a; imax = r; }
    }
    if (amax == 0.0) return fr;
    const double piv = Rraw(imax, i);
    for (int r = 0; r < 8; ++r) R(r, k) = Rraw(r, i) / piv;
  }

  Eigen::PartialPivLU<Mat8> lu(R);
  Mat8 L = lu.solve(Mat8::Identity());
  const double err = (L * R - Mat8::Identity()).cwiseAbs().maxCoeff();
  if (!std::isfinite(err) || err > 1e-8) return fr;

  for (int r = 0; r < 8; ++r)
    for (int cc = 0; cc < 8; ++cc) {
      fr.L[r * 8 + cc] = L(r, cc);
      fr.R[r * 8 + cc] = R(r, cc);
    }
  fr.ok = true;
  return fr;
}

}  // namespace rmhd
