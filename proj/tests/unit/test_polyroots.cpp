#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "doctest.h"
#include "rmhd/polyroots.hpp"

using namespace rmhd;

TEST_CASE("cubic real roots recover known factorizations") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    double r0 = d(rng), r1 = d(rng), r2 = d(rng);
    std::array<double, 3> r{r0, r1, r2};
    std::sort(r.begin(), r.end());
    // (x-r0)(x-r1)(x-r2)
    std::array<double, 4> c{-r[0] * r[1] * r[2],
                            r[0] * r[1] + r[0] * r[2] + r[1] * r[2],
                            -(r[0] + r[1] + r[2]), 1.0};
    auto roots = cubic_real_roots(c);
    REQUIRE(roots.size() == 3);
    std::sort(roots.begin(), roots.end());
    for (int i = 0; i < 3; ++i) CHECK(roots[i] == doctest::Approx(r[i]).epsilon(1e-7));
  }
}

TEST_CASE("quartic real roots recover known factorizations") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> d(-0.95, 0.95);
  for (int trial = 0; trial < 500; ++trial) {
    std::array<double, 4> r{d(rng), d(rng), d(rng), d(rng)};
    std::sort(r.begin(), r.end());
    // expand prod (x - r[i])
    std::array<double, 5> c{1.0, 0.0, 0.0, 0.0, 0.0};
    std::array<double, 5> tmp{};
    int deg = 0;
    for (double root : r) {
      tmp.fill(0.0);
      for (int i = 0; i <= deg; ++i) {
        tmp[i + 1] += c[i];
        tmp[i] -= root * c[i];
      }
      ++deg;
      c = tmp;
    }
    double res = 0.0;
    auto roots = quartic_real_roots(c, &res);
    CHECK(res < 1e-8);
    for (int i = 0; i < 4; ++i)
      CHECK(std::abs(roots[i] - r[i]) < 2e-5);  // clustered roots limit accuracy
  }
}

TEST_CASE("quartic handles biquadratic case") {
  // (x^2 - 1/4)(x^2 - 1/9)
  std::array<double, 5> c{1.0 / 36.0, 0.0, -(0.25 + 1.0 / 9.0), 0.0, 1.0};
  auto roots = quartic_real_roots(c);
  CHECK(roots[0] == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(roots[1] == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
  CHECK(roots[2] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(roots[3] == doctest::Approx(0.5).epsilon(1e-12));
}
