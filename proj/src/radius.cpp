#include "ufmt/radius.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace ufmt {

namespace {

constexpr double kBisectTol = 1e-9;
constexpr int kBisectMaxIter = 200;

double t1_formula(double lambda) { return std::sqrt(lambda / (1.0 + lambda)); }

}  // namespace

RadiusResult radius_t1(LambdaParam lambda) {
  return RadiusResult{t1_formula(lambda.value()), RadiusTheorem::T1_U,
                      lambda.value(), true};
}

RadiusResult radius_t1_starlike(Complex b1_plus_c1) {
  const double s = std::abs(b1_plus_c1);
  if (s >= 2.0) {
    throw std::invalid_argument(
        "radius_t1_starlike: |b1+c1| >= 2 is degenerate (no positive radius)");
  }
  // lambda = 1 - |b1+c1|/2; the closed form sqrt(1 - 2/(4-|b1+c1|)) is the
  // same number after simplification.
  const double lambda = 1.0 - s / 2.0;
  return RadiusResult{t1_formula(lambda), RadiusTheorem::T1_Starlike, lambda,
                      true};
}

RadiusResult radius_t2a(LambdaParam lambda) {
  return RadiusResult{t1_formula(lambda.value()), RadiusTheorem::T2a,
                      lambda.value(), true};
}

RadiusResult radius_t2b(std::span<const Complex> second_derivs) {
  if (second_derivs.size() < 2) {
    throw std::invalid_argument("radius_t2b: needs m >= 2 functions");
  }
  Complex sum{0.0, 0.0};
  for (const Complex& d : second_derivs) sum += d / 2.0;
  const double lambda =
      1.0 - std::abs(sum) / static_cast<double>(second_derivs.size());
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("radius_t2b: lambda <= 0 is degenerate");
  }
  return RadiusResult{t1_formula(lambda), RadiusTheorem::T2b, lambda, true};
}

RadiusResult radius_t3_t4(std::span<const LambdaParam> lambdas,
                          LambdaParam target) {
  if (lambdas.size() < 2) {
    throw std::invalid_argument("radius_t3_t4: needs m >= 2 lambdas");
  }
  double sum = 0.0;
  for (const LambdaParam& l : lambdas) sum += l.value();
  const double m = static_cast<double>(lambdas.size());
  const double k2 = m * target.value() * target.value() / sum;
  const double k = std::sqrt(k2);
  const double radius = std::sqrt((-k2 + k * std::sqrt(k2 + 4.0)) / 2.0);
  return RadiusResult{radius,
                      lambdas.size() == 2 ? RadiusTheorem::T3 : RadiusTheorem::T4,
                      target.value(), true};
}

RadiusResult radius_bisect(const DiskFunction& f, LambdaParam target) {
  std::vector<double> weights;  // (n-1)|b_n| for n >= 2
  weights.reserve(f.order() + 1);
  bool all_zero = true;
  for (int n = 0; n <= f.order(); ++n) {
    const double w = n >= 2 ? (n - 1) * std::abs(f.b(n)) : 0.0;
    weights.push_back(w);
    if (w != 0.0) all_zero = false;
  }
  const auto sum_at = [&weights](double r) {
    double p = 1.0;
    double s = 0.0;
    for (std::size_t n = 1; n < weights.size(); ++n) {
      p *= r;
      s += weights[n] * p;
    }
    return s;
  };

  const double lambda = target.value();
  double radius = 1.0;
  if (!all_zero && sum_at(1.0) > lambda) {
    double lo = 0.0;  // sum(0) = 0 <= lambda
    double hi = 1.0;
    for (int it = 0; it < kBisectMaxIter && hi - lo > kBisectTol; ++it) {
      const double mid = 0.5 * (lo + hi);
      (sum_at(mid) <= lambda ? lo : hi) = mid;
    }
    radius = lo;
  }
  return RadiusResult{radius, RadiusTheorem::Bisection, lambda, true};
}

}  // namespace ufmt
