#pragma once

#include <cmath>

namespace rmhd {

// Shared algebra for the conservative-to-primitive scalar equation in the
// auxiliary variable theta = rho*h*gamma^2. Templated on the value type so the
// scalar solver and the SIMD batch kernels run identical formulas.
//
// Inputs besides theta: D, E, mu = |m|^2, s = m.B, beta = |B|^2, and
// cg = (Gamma-1)/Gamma.

template <class T>
struct RecoveryEval {
  T g;       // 1/gamma^2
  T sqrt_g;  // 1/gamma
  T f;       // residual of the theta equation
  T fprime;
};

template <class T>
inline RecoveryEval<T> recovery_eval(T theta, T D, T E, T mu, T s, T beta, double cg) {
  using std::sqrt;  // ADL picks the simd overload for vector types
  const T s2 = s * s;
  const T th2 = theta * theta;
  const T tb = theta + beta;
  const T N = th2 * mu + T(2.0) * theta * s2 + s2 * beta;
  const T Dn = th2 * (tb * tb);
  const T g = T(1.0) - N / Dn;
  const T Np = T(2.0) * theta * mu + T(2.0) * s2;
  const T Dnp = T(2.0) * theta * tb * (T(2.0) * theta + beta);
  const T gp = (N * Dnp - Np * Dn) / (Dn * Dn);
  const T sg = sqrt(g);
  const T cgT = T(cg);
  RecoveryEval<T> out;
  out.g = g;
  out.sqrt_g = sg;
  out.f = theta - cgT * (theta * g - D * sg) - T(0.5) * (beta * g + s2 / th2) +
          beta - E;
  out.fprime = T(1.0) - cgT * (g + theta * gp - D * gp / (T(2.0) * sg)) -
               T(0.5) * (beta * gp - T(2.0) * s2 / (th2 * theta));
  return out;
}

// 1/gamma^2 as a function of theta alone (used for bracketing).
template <class T>
inline T recovery_g(T theta, T mu, T s, T beta) {
  const T s2 = s * s;
  const T th2 = theta * theta;
  const T tb = theta + beta;
  return T(1.0) - (th2 * mu + T(2.0) * theta * s2 + s2 * beta) / (th2 * (tb * tb));
}

// minimal scalar counterpart of simd where(mask, v) = x
namespace detail {
struct ScalarWhere {
  bool mask;
  double& ref;
  void operator=(double v) const {
    if (mask) ref = v;
  }
};
}  // namespace detail
inline detail::ScalarWhere where(bool m, double& r) { return {m, r}; }

// Residual evaluated with a compensated (Neumaier) term sum. The plain sum
// carries a noise floor of eps * |B|^2, which limits the recovered pressure in
// strongly magnetized states; one polish step with this version reaches the
// conditioning limit of the stored conserved state.
template <class T>
inline T recovery_residual_accurate(T theta, T D, T E, T mu, T s, T beta,
                                    double cg) {
  using std::sqrt;
  using std::fabs;
  const T s2 = s * s;
  const T th2 = theta * theta;
  const T tb = theta + beta;
  const T N = th2 * mu + T(2.0) * theta * s2 + s2 * beta;
  const T Dn = th2 * (tb * tb);
  const T g = T(1.0) - N / Dn;
  const T sg = sqrt(g);
  const T terms[6] = {theta,              -T(cg) * theta * g, T(cg) * D * sg,
                      -T(0.5) * beta * g, -T(0.5) * s2 / th2, beta - E};
  T sum = T(0.0), comp = T(0.0);
  for (const T& t : terms) {
    const T tmp = sum + t;
    // branch-free Neumaier update, valid lanewise for simd types
    T corr = (sum - tmp) + t;
    where(fabs(t) > fabs(sum), corr) = (t - tmp) + sum;
    comp = comp + corr;
    sum = tmp;
  }
  return sum + comp;
}

}  // namespace rmhd
