#pragma once

#include <array>
#include <vector>

namespace rmhd {

// Real roots of c[0] + c[1] x + c[2] x^2 + c[3] x^3, c[3] != 0. Returns 1 or 3 roots.
std::vector<double> cubic_real_roots(const std::array<double, 4>& c);

// All four roots of c[0] + ... + c[4] x^4 (c[4] != 0), assumed real for admissible
// inputs: closed-form factorization into two quadratics via the resolvent cubic,
// then a fixed number of Newton polish steps per root on the original quartic.
// Roots are returned sorted ascending; `max_residual` receives the largest
// |P(root)| / scale after polishing so callers can validate.
std::array<double, 4> quartic_real_roots(const std::array<double, 5>& c,
                                         double* max_residual = nullptr);

}  // namespace rmhd
