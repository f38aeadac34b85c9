#include "rmhd/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace rmhd {

namespace {

QuadratureRule build(int q) {
  if (q < 1 || q > 64) throw std::invalid_argument("gauss_legendre: bad order");
  QuadratureRule r;
  r.nodes.resize(q);
  r.weights.resize(q);
  // Newton on P_q with Chebyshev initial guesses
  for (int i = 0; i < q; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (q + 0.5));
    double pq = 0.0, dpq = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      if (q == 1) { p1 = x; }
      for (int n = 1; n < q; ++n) {
        const double p2 = ((2.0 * n + 1.0) * x * p1 - n * p0) / (n + 1.0);
        p0 = p1;
        p1 = p2;
      }
      pq = (q == 1) ? x : p1;
      dpq = q * (x * pq - p0) / (x * x - 1.0);
      const double dx = pq / dpq;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    r.nodes[q - 1 - i] = x;
    r.weights[q - 1 - i] = 2.0 / ((1.0 - x * x) * dpq * dpq);
  }
  return r;
}

}  // namespace

const QuadratureRule& gauss_legendre(int q) {
  static std::map<int, QuadratureRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, build(q)).first;
  return it->second;
}

}  // namespace rmhd
