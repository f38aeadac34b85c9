#include "rmhd/weno.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace rmhd {

namespace {

// integral of x^p over one unit-width cell centered at offset o
double cell_moment(double o, int p) {
  const double a = o - 0.5, b = o + 0.5;
  return (std::pow(b, p + 1) - std::pow(a, p + 1)) / (p + 1);
}

// averages -> monomial coefficients for a stencil of cells at integer offsets
Eigen::MatrixXd avg_to_coef(int first_offset, int n) {
  Eigen::MatrixXd B(n, n);
  for (int j = 0; j < n; ++j)
    for (int p = 0; p < n; ++p) B(j, p) = cell_moment(first_offset + j, p);
  return B.inverse();
}

}  // namespace

WenoReconstructor::WenoReconstructor(int K, std::vector<double> ref_points)
    : k_(K), points_(std::move(ref_points)) {
  if (K < 1 || K > 3) throw std::invalid_argument("WenoReconstructor: K");
  const int r = K + 1;        // candidates / candidate width
  const int w = 2 * K + 1;    // full stencil width
  const int np = num_points();

  std::vector<Eigen::MatrixXd> M(r);  // candidate avg->coef maps
  for (int m = 0; m < r; ++m) M[m] = avg_to_coef(m - K, r);
  const Eigen::MatrixXd Mbig = avg_to_coef(-K, w);

  // smoothness quadratic forms: S[p][q] = sum_l int (x^p)^(l) (x^q)^(l) dx
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(r, r);
  auto dfac = [](int p, int l) {
    double f = 1.0;
    for (int i = 0; i < l; ++i) f *= (p - i);
    return f;
  };
  for (int l = 1; l <= K; ++l)
    for (int p = l; p <= K; ++p)
      for (int q = l; q <= K; ++q) {
        const int a = p + q - 2 * l;
        const double integral = (a % 2 == 0) ? std::pow(0.5, a) / (a + 1) : 0.0;
        S(p, q) += dfac(p, l) * dfac(q, l) * integral;
      }
  beta_q_.assign(r * r * r, 0.0);
  for (int m = 0; m < r; ++m) {
    const Eigen::MatrixXd Q = M[m].transpose() * S * M[m];
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) beta_q_[(m * r + a) * r + b] = Q(a, b);
  }

  eval_coef_.assign(np * r * r, 0.0);
  gpos_.assign(np * r, 0.0);
  gneg_.assign(np * r, 0.0);
  spos_.assign(np, 0.0);
  sneg_.assign(np, 0.0);

  for (int ip = 0; ip < np; ++ip) {
    const double x = 0.5 * points_[ip];  // unit-width cell coordinate
    Eigen::VectorXd powv(w);
    for (int p = 0; p < w; ++p) powv(p) = std::pow(x, p);

    const Eigen::VectorXd cbig = Mbig.transpose() * powv;
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(w, r);
    for (int m = 0; m < r; ++m) {
      const Eigen::VectorXd cm = M[m].transpose() * powv.head(r);
      for (int j = 0; j < r; ++j) {
        eval_coef_[(ip * r + m) * r + j] = cm(j);
        A(m + j, m) = cm(j);  // candidate m starts at global offset m
      }
    }
    // linear weights: A d = cbig (overdetermined but consistent)
    const Eigen::VectorXd d = A.colPivHouseholderQr().solve(cbig);
    if ((A * d - cbig).cwiseAbs().maxCoeff() > 1e-10)
      throw std::runtime_error("WenoReconstructor: no valid linear weights");
    // splitting technique for negative weights
    double sp = 0.0, sn = 0.0;
    for (int m = 0; m < r; ++m) {
      const double gp = 0.5 * (d(m) + 3.0 * std::abs(d(m)));
      const double gn = gp - d(m);
      gpos_[ip * r + m] = gp;
      gneg_[ip * r + m] = gn;
      sp += gp;
      sn += gn;
    }
    spos_[ip] = sp;
    sneg_[ip] = sn;
    for (int m = 0; m < r; ++m) {
      gpos_[ip * r + m] /= sp;
      if (sn > 0.0) gneg_[ip * r + m] /= sn;
    }
  }
}

void WenoReconstructor::reconstruct(const double* averages, double* out) const {
  const int r = k_ + 1;
  double beta[4];
  for (int m = 0; m < r; ++m) {
    double b = 0.0;
    for (int a = 0; a < r; ++a) {
      double row = 0.0;
      for (int c = 0; c < r; ++c)
        row += beta_q_[(m * r + a) * r + c] * averages[m + c];
      b += averages[m + a] * row;
    }
    beta[m] = b;
  }
  const int np = num_points();
  for (int ip = 0; ip < np; ++ip) {
    double vals[4];
    for (int m = 0; m < r; ++m) {
      double v = 0.0;
      for (int j = 0; j < r; ++j)
        v += eval_coef_[(ip * r + m) * r + j] * averages[m + j];
      vals[m] = v;
    }
    double wp[4], wn[4], swp = 0.0, swn = 0.0;
    for (int m = 0; m < r; ++m) {
      const double q = (eps + beta[m]) * (eps + beta[m]);
      wp[m] = gpos_[ip * r + m] / q;
      wn[m] = gneg_[ip * r + m] / q;
      swp += wp[m];
      swn += wn[m];
    }
    double vpos = 0.0, vneg = 0.0;
    for (int m = 0; m < r; ++m) {
      vpos += wp[m] / swp * vals[m];
      if (sneg_[ip] > 0.0) vneg += wn[m] / swn * vals[m];
    }
    out[ip] = (sneg_[ip] > 0.0) ? spos_[ip] * vpos - sneg_[ip] * vneg : vpos;
  }
}

}  // namespace rmhd
