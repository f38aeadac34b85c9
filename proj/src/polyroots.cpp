#include "rmhd/polyroots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace rmhd {

namespace {

double eval_poly(const std::array<double, 5>& c, double x) {
  return (((c[4] * x + c[3]) * x + c[2]) * x + c[1]) * x + c[0];
}

double eval_dpoly(const std::array<double, 5>& c, double x) {
  return ((4.0 * c[4] * x + 3.0 * c[3]) * x + 2.0 * c[2]) * x + c[1];
}

}  // namespace

std::vector<double> cubic_real_roots(const std::array<double, 4>& c) {
  const double a = c[2] / c[3];
  const double b = c[1] / c[3];
  const double d = c[0] / c[3];
  // depressed form t^3 + p t + q with x = t - a/3
  const double p = b - a * a / 3.0;
  const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + d;
  const double shift = -a / 3.0;
  const double disc = 0.25 * q * q + p * p * p / 27.0;

  std::vector<double> roots;
  if (disc > 0.0) {
    const double s = std::sqrt(disc);
    const double u = std::cbrt(-0.5 * q + s);
    const double w = std::cbrt(-0.5 * q - s);
    roots.push_back(u + w + shift);
  } else {
    // three real roots, trigonometric form
    const double r = std::sqrt(std::max(-p / 3.0, 0.0));
    if (r == 0.0) {
      roots.assign(3, shift);
    } else {
      double arg = -0.5 * q / (r * r * r);
      arg = std::clamp(arg, -1.0, 1.0);
      const double phi = std::acos(arg) / 3.0;
      for (int k = 0; k < 3; ++k)
        roots.push_back(2.0 * r * std::cos(phi - 2.0 * M_PI * k / 3.0) + shift);
    }
  }
  return roots;
}

std::array<double, 4> quartic_real_roots(const std::array<double, 5>& c,
                                         double* max_residual) {
  const double a3 = c[3] / c[4];
  const double a2 = c[2] / c[4];
  const double a1 = c[1] / c[4];
  const double a0 = c[0] / c[4];

  // depressed quartic y^4 + p y^2 + q y + r, x = y - a3/4
  const double sh = -a3 / 4.0;
  const double p = a2 - 3.0 * a3 * a3 / 8.0;
  const double q = a1 - a3 * a2 / 2.0 + a3 * a3 * a3 / 8.0;
  const double r = a0 - a3 * a1 / 4.0 + a3 * a3 * a2 / 16.0 - 3.0 * a3 * a3 * a3 * a3 / 256.0;

  const double scale = std::max({1.0, std::abs(p), std::abs(q), std::abs(r)});

  std::array<double, 4> y{};
  if (std::abs(q) <= 1e-14 * scale) {
    // biquadratic
    const double disc = std::max(p * p / 4.0 - r, 0.0);
    const double s = std::sqrt(disc);
    const double z1 = std::max(-p / 2.0 + s, 0.0);
    const double z2 = std::max(-p / 2.0 - s, 0.0);
    const double r1 = std::sqrt(z1), r2 = std::sqrt(z2);
    y = {-r1, -r2, r2, r1};
  } else {
    // resolvent cubic in S = s^2: S^3 + 2p S^2 + (p^2 - 4r) S - q^2 = 0
    auto sroots = cubic_real_roots({-q * q, p * p - 4.0 * r, 2.0 * p, 1.0});
    double S = 0.0;
    for (double s : sroots) S = std::max(S, s);
    S = std::max(S, 0.0);
    const double s = std::sqrt(S);
    const double u = 0.5 * (p + S - q / s);
    const double w = 0.5 * (p + S + q / s);
    // (y^2 + s y + u)(y^2 - s y + w); keep real parts of complex pairs,
    // the Newton polish below pulls genuinely real roots back on axis.
    const double d1 = S - 4.0 * u;
    const double d2 = S - 4.0 * w;
    const double sq1 = d1 >= 0.0 ? std::sqrt(d1) : 0.0;
    const double sq2 = d2 >= 0.0 ? std::sqrt(d2) : 0.0;
    y = {(-s - sq1) / 2.0, (-s + sq1) / 2.0, (s - sq2) / 2.0, (s + sq2) / 2.0};
  }

  std::array<double, 4> x{};
  for (int i = 0; i < 4; ++i) x[i] = y[i] + sh;

  // Newton polish on the original quartic: two steps minimum, a few more while
  // the residual keeps dropping (near-degenerate pairs converge only linearly)
  for (double& xi : x) {
    double best = xi;
    double fbest = std::abs(eval_poly(c, xi));
    for (int it = 0; it < 6; ++it) {
      const double f = eval_poly(c, xi);
      const double df = eval_dpoly(c, xi);
      if (df == 0.0) break;
      const double step = f / df;
      if (!std::isfinite(step)) break;
      xi -= step;
      const double fn = std::abs(eval_poly(c, xi));
      if (fn < fbest) { fbest = fn; best = xi; }
      if (it >= 1 && fn >= fbest) break;
    }
    xi = best;
  }
  std::sort(x.begin(), x.end());

  if (max_residual) {
    double cs = 0.0;
    for (double ci : c) cs = std::max(cs, std::abs(ci));
    double res = 0.0;
    for (double xi : x) res = std::max(res, std::abs(eval_poly(c, xi)));
    *max_residual = res / cs;
  }
  return x;
}

}  // namespace rmhd
