#pragma once

#include <array>
#include <vector>

#include "rmhd/quadrature.hpp"

namespace rmhd {

// Monic Legendre polynomials on [-1,1]: 1, x, x^2-1/3, x^3-(3/5)x,
// x^4-(6/7)x^2+3/35, ... These are the modal building blocks everywhere.
double legendre(int n, double x);
double dlegendre(int n, double x);
double legendre_norm(int n);  // integral of legendre(n)^2 over [-1,1]

inline int scalar_dim_1d(int K) { return K + 1; }
inline int scalar_dim_2d(int K) { return (K + 1) * (K + 2) / 2; }
inline int divfree_dim(int K) { return (K + 1) * (K + 4) / 2; }

// Tensor Legendre-product modes on the reference square, ordered by total
// degree then by descending x-degree: 1; xi, eta; xi^2-1/3, xi*eta, ... .
struct ScalarBasis2D {
  explicit ScalarBasis2D(int K);
  int K;
  int dim;
  std::vector<std::array<int, 2>> deg;  // (px, py) per mode

  double value(int l, double xi, double eta) const;
  // gradient in reference coordinates (d/dxi, d/deta)
  std::array<double, 2> grad_ref(int l, double xi, double eta) const;
  double norm_ref(int l) const;  // over [-1,1]^2
};

// Divergence-free vector modes on a cell of physical size hx x hy; the first
// 5 / 9 / 14 members form the bases for K = 1 / 2 / 3.
struct DivFreeBasis {
  DivFreeBasis(int K, double hx, double hy);
  int K;
  int dim;
  double hx, hy;

  std::array<double, 2> value(int l, double xi, double eta) const;
  // d(v1)/dxi, d(v1)/deta, d(v2)/dxi, d(v2)/deta
  std::array<double, 4> grad_ref(int l, double xi, double eta) const;
  // physical divergence (2/hx) d(v1)/dxi + (2/hy) d(v2)/deta
  double divergence(int l, double xi, double eta) const;
};

// Mode tables of the central-method in-cell magnetic field: per K, the
// Legendre-product exponents of the coefficient listings for Bx and By.
struct CentralFieldModes {
  explicit CentralFieldModes(int K);
  int K;
  int dim;                                 // coefficients per component
  std::vector<std::array<int, 2>> bx_deg;  // (px, py) of mode a_l
  std::vector<std::array<int, 2>> by_deg;  // (px, py) of mode b_l

  double bx_value(int l, double xi, double eta) const;
  double by_value(int l, double xi, double eta) const;
  std::array<double, 2> bx_grad_ref(int l, double xi, double eta) const;
  std::array<double, 2> by_grad_ref(int l, double xi, double eta) const;
  double bx_norm_ref(int l) const;
  double by_norm_ref(int l) const;
};

// L2 projection onto the scalar modal bases (reference-cell measure, so the
// cell Jacobians cancel between numerator and normalizer).
template <class F>
void project_scalar_1d(F&& f, int K, const QuadratureRule& rule, double* coeff) {
  for (int l = 0; l <= K; ++l) coeff[l] = 0.0;
  for (int g = 0; g < rule.q(); ++g) {
    const double x = rule.nodes[g];
    const double fw = f(x) * rule.weights[g];
    for (int l = 0; l <= K; ++l) coeff[l] += fw * legendre(l, x);
  }
  for (int l = 0; l <= K; ++l) coeff[l] /= legendre_norm(l);
}

template <class F>
void project_scalar_2d(F&& f, const ScalarBasis2D& basis, const QuadratureRule& rule,
                       double* coeff) {
  for (int l = 0; l < basis.dim; ++l) coeff[l] = 0.0;
  for (int gy = 0; gy < rule.q(); ++gy)
    for (int gx = 0; gx < rule.q(); ++gx) {
      const double xi = rule.nodes[gx], eta = rule.nodes[gy];
      const double fw = f(xi, eta) * rule.weights[gx] * rule.weights[gy];
      for (int l = 0; l < basis.dim; ++l) coeff[l] += fw * basis.value(l, xi, eta);
    }
  for (int l = 0; l < basis.dim; ++l) coeff[l] /= basis.norm_ref(l);
}

}  // namespace rmhd
