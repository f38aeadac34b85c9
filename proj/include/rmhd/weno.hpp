#pragma once

#include <vector>

namespace rmhd {

// (2K+1)-order WENO reconstruction of point values from 2K+1 uniform cell
// averages: K+1 candidate stencils of degree K, position-dependent linear
// weights (split per Shi-Hu-Shu where negative), smoothness indicators with
// exponent 2 and regularization 1e-6.
//
// Evaluation points are given in the central cell's [-1,1] reference
// coordinate; the averages array passed to reconstruct() covers cells
// i-K .. i+K of the troubled cell i.
class WenoReconstructor {
 public:
  WenoReconstructor(int K, std::vector<double> ref_points);

  int K() const { return k_; }
  int stencil_width() const { return 2 * k_ + 1; }
  int num_points() const { return static_cast<int>(points_.size()); }

  void reconstruct(const double* averages, double* out) const;

  double eps = 1e-6;

 private:
  int k_;
  std::vector<double> points_;
  // per candidate m: evaluation coefficients per point [pt][m][j] and
  // smoothness quadratic forms beta_m = u^T Q_m u
  std::vector<double> eval_coef_;   // num_points * (K+1) * (K+1)
  std::vector<double> beta_q_;      // (K+1) * (K+1) * (K+1)
  // split linear weights per point: gamma+ (normalized), gamma- (normalized),
  // sigma+ and sigma-
  std::vector<double> gpos_, gneg_;  // num_points * (K+1)
  std::vector<double> spos_, sneg_;  // num_points
};

}  // namespace rmhd
