#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "ufmt/series.hpp"

namespace ufmt::testutil {

inline double rel_err(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

inline double cdist(Complex a, Complex b) { return std::abs(a - b); }

/// phi with c0 = 1 and geometrically decaying random complex coefficients;
/// decay 0.7 keeps |phi| bounded away from 0 on |z| <= 0.5.
inline CoefficientSeries random_phi(std::mt19937_64& rng, int order,
                                    double decay = 0.7) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> c(order + 1);
  c[0] = 1.0;
  double scale = 1.0;
  for (int n = 1; n <= order; ++n) {
    scale *= decay;
    c[n] = Complex{u(rng), u(rng)} * scale;
  }
  return CoefficientSeries(std::move(c));
}

/// Nonnegative real coefficients for n >= 2 scaled so that
/// sum (n-1) b_n equals `target`; b1 = b1_value.
inline CoefficientSeries random_nonneg_phi(std::mt19937_64& rng, int order,
                                           double target, double b1_value) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> raw(order + 1, 0.0);
  double weight = 0.0;
  for (int n = 2; n <= order; ++n) {
    raw[n] = u(rng) * std::pow(0.8, n);
    weight += (n - 1) * raw[n];
  }
  std::vector<Complex> c(order + 1);
  c[0] = 1.0;
  c[1] = b1_value;
  for (int n = 2; n <= order; ++n) {
    c[n] = raw[n] * (target / weight);
  }
  return CoefficientSeries(std::move(c));
}

inline Complex random_in_disk(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const Complex z{u(rng) * radius, u(rng) * radius};
    if (std::abs(z) <= radius) return z;
  }
}

}  // namespace ufmt::testutil
