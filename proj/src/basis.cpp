#include "rmhd/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace rmhd {

double legendre(int n, double x) {
  // monic recurrence: L_{n+1} = x L_n - n^2/(4n^2-1) L_{n-1}
  double lm = 1.0, l = x;
  if (n == 0) return 1.0;
  for (int k = 1; k < n; ++k) {
    const double ln = x * l - (k * k / (4.0 * k * k - 1.0)) * lm;
    lm = l;
    l = ln;
  }
  return l;
}

double dlegendre(int n, double x) {
  // derivative of the monic recurrence
  if (n == 0) return 0.0;
  double lm = 1.0, l = x, dm = 0.0, d = 1.0;
  for (int k = 1; k < n; ++k) {
    const double c = k * k / (4.0 * k * k - 1.0);
    const double ln = x * l - c * lm;
    const double dn = l + x * d - c * dm;
    lm = l; l = ln;
    dm = d; d = dn;
  }
  return d;
}

double legendre_norm(int n) {
  // 2/(2n+1) * (2^n (n!)^2 / (2n)!)^2
  double f = 1.0;
  for (int k = 1; k <= n; ++k) f *= 2.0 * k * k / ((2.0 * k) * (2.0 * k - 1.0));
  return 2.0 / (2.0 * n + 1.0) * f * f;
}

ScalarBasis2D::ScalarBasis2D(int K_) : K(K_), dim(scalar_dim_2d(K_)) {
  if (K < 0 || K > 4) throw std::invalid_argument("ScalarBasis2D: K out of range");
  for (int d = 0; d <= K; ++d)
    for (int px = d; px >= 0; --px) deg.push_back({px, d - px});
}

double ScalarBasis2D::value(int l, double xi, double eta) const {
  return legendre(deg[l][0], xi) * legendre(deg[l][1], eta);
}

std::array<double, 2> ScalarBasis2D::grad_ref(int l, double xi, double eta) const {
  return {dlegendre(deg[l][0], xi) * legendre(deg[l][1], eta),
          legendre(deg[l][0], xi) * dlegendre(deg[l][1], eta)};
}

double ScalarBasis2D::norm_ref(int l) const {
  return legendre_norm(deg[l][0]) * legendre_norm(deg[l][1]);
}

DivFreeBasis::DivFreeBasis(int K_, double hx_, double hy_)
    : K(K_), dim(divfree_dim(K_)), hx(hx_), hy(hy_) {
  if (K < 1 || K > 3) throw std::invalid_argument("DivFreeBasis: K out of range");
}

std::array<double, 2> DivFreeBasis::value(int l, double xi, double eta) const {
  switch (l) {
    case 0: return {0.0, 1.0};
    case 1: return {1.0, 0.0};
    case 2: return {0.0, xi};
    case 3: return {eta, 0.0};
    case 4: return {hx * xi, -hy * eta};
    case 5: return {eta * eta - 1.0 / 3.0, 0.0};
    case 6: return {0.0, xi * xi - 1.0 / 3.0};
    case 7: return {hx * (xi * xi - 1.0 / 3.0), -2.0 * hy * xi * eta};
    case 8: return {-2.0 * hx * xi * eta, hy * (eta * eta - 1.0 / 3.0)};
    case 9: return {eta * eta * eta - 0.6 * eta, 0.0};
    case 10: return {0.0, xi * xi * xi - 0.6 * xi};
    case 11: return {hx * (xi * xi - 1.0 / 3.0) * eta, -hy * xi * (eta * eta - 1.0 / 3.0)};
    case 12: return {hx * xi * (eta * eta - 1.0 / 3.0), -hy * (eta * eta * eta - eta) / 3.0};
    case 13: return {hx * (xi * xi * xi - xi) / 3.0, -hy * (xi * xi - 1.0 / 3.0) * eta};
    default: throw std::out_of_range("DivFreeBasis::value: index");
  }
}

std::array<double, 4> DivFreeBasis::grad_ref(int l, double xi, double eta) const {
  switch (l) {
    case 0: return {0.0, 0.0, 0.0, 0.0};
    case 1: return {0.0, 0.0, 0.0, 0.0};
    case 2: return {0.0, 0.0, 1.0, 0.0};
    case 3: return {0.0, 1.0, 0.0, 0.0};
    case 4: return {hx, 0.0, 0.0, -hy};
    case 5: return {0.0, 2.0 * eta, 0.0, 0.0};
    case 6: return {0.0, 0.0, 2.0 * xi, 0.0};
    case 7: return {hx * 2.0 * xi, 0.0, -2.0 * hy * eta, -2.0 * hy * xi};
    case 8: return {-2.0 * hx * eta, -2.0 * hx * xi, 0.0, hy * 2.0 * eta};
    case 9: return {0.0, 3.0 * eta * eta - 0.6, 0.0, 0.0};
    case 10: return {0.0, 0.0, 3.0 * xi * xi - 0.6, 0.0};
    case 11:
      return {hx * 2.0 * xi * eta, hx * (xi * xi - 1.0 / 3.0),
              -hy * (eta * eta - 1.0 / 3.0), -hy * xi * 2.0 * eta};
    case 12:
      return {hx * (eta * eta - 1.0 / 3.0), hx * xi * 2.0 * eta, 0.0,
              -hy * (3.0 * eta * eta - 1.0) / 3.0};
    case 13:
      return {hx * (3.0 * xi * xi - 1.0) / 3.0, 0.0, -hy * 2.0 * xi * eta,
              -hy * (xi * xi - 1.0 / 3.0)};
    default: throw std::out_of_range("DivFreeBasis::grad_ref: index");
  }
}

double DivFreeBasis::divergence(int l, double xi, double eta) const {
  const auto g = grad_ref(l, xi, eta);
  return 2.0 / hx * g[0] + 2.0 / hy * g[3];
}

CentralFieldModes::CentralFieldModes(int K_) : K(K_) {
  switch (K) {
    case 1:
      bx_deg = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}};
      by_deg = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}};
      break;
    case 2:
      bx_deg = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {3, 0}, {1, 2}};
      by_deg = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {2, 1}, {0, 3}};
      break;
    case 3:
      bx_deg = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2},
                {3, 0}, {2, 1}, {1, 2}, {0, 3}, {4, 0}, {1, 3}};
      by_deg = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2},
                {3, 0}, {2, 1}, {1, 2}, {0, 3}, {3, 1}, {0, 4}};
      break;
    default:
      throw std::invalid_argument("CentralFieldModes: K out of range");
  }
  dim = static_cast<int>(bx_deg.size());
}

double CentralFieldModes::bx_value(int l, double xi, double eta) const {
  return legendre(bx_deg[l][0], xi) * legendre(bx_deg[l][1], eta);
}
double CentralFieldModes::by_value(int l, double xi, double eta) const {
  return legendre(by_deg[l][0], xi) * legendre(by_deg[l][1], eta);
}
std::array<double, 2> CentralFieldModes::bx_grad_ref(int l, double xi, double eta) const {
  return {dlegendre(bx_deg[l][0], xi) * legendre(bx_deg[l][1], eta),
          legendre(bx_deg[l][0], xi) * dlegendre(bx_deg[l][1], eta)};
}
std::array<double, 2> CentralFieldModes::by_grad_ref(int l, double xi, double eta) const {
  return {dlegendre(by_deg[l][0], xi) * legendre(by_deg[l][1], eta),
          legendre(by_deg[l][0], xi) * dlegendre(by_deg[l][1], eta)};
}
double CentralFieldModes::bx_norm_ref(int l) const {
  return legendre_norm(bx_deg[l][0]) * legendre_norm(bx_deg[l][1]);
}
double CentralFieldModes::by_norm_ref(int l) const {
  return legendre_norm(by_deg[l][0]) * legendre_norm(by_deg[l][1]);
}

}  // namespace rmhd
