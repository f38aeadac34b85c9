#pragma once

#include <vector>

namespace rmhd {

// Gauss-Legendre rule on [-1, 1]: exact for polynomials of degree <= 2q-1.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int q() const { return static_cast<int>(nodes.size()); }
};

const QuadratureRule& gauss_legendre(int q);

}  // namespace rmhd
