#include "ufmt/family.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace ufmt {

namespace {

void check_alpha(double a) {
  if (!(a >= -1.0 && a <= 1.0) || a == 0.0) {
    throw std::invalid_argument("family: parameter must lie in [-1,1] \\ {0}");
  }
}

void check_interior(Complex z) {
  if (!(std::abs(z) < 1.0)) {
    throw std::domain_error("family: |z| must be < 1");
  }
}

std::string member_label(double a) { return "f_alpha(" + std::to_string(a) + ")"; }

}  // namespace

FamilyParams::FamilyParams(double a, double b) : alpha(a), beta(b) {
  check_alpha(a);
  check_alpha(b);
}

DiskFunction family_member(double alpha, int order) {
  check_alpha(alpha);
  if (order < 2) throw std::invalid_argument("family: order must be >= 2");
  std::vector<Complex> c(order + 1, Complex{0.0, 0.0});
  c[0] = 1.0;
  c[1] = alpha;
  const double head = 1.0 - alpha * alpha;
  double p = 1.0;  // alpha^(n-2)
  for (int n = 2; n <= order; ++n) {
    c[n] = -p * head;
    p *= alpha;
  }
  return DiskFunction(CoefficientSeries(std::move(c)), member_label(alpha));
}

DiskFunction family_combination(const FamilyParams& prm, int order) {
  if (order < 2) throw std::invalid_argument("family: order must be >= 2");
  const double a = prm.alpha;
  const double b = prm.beta;
  std::vector<Complex> c(order + 1, Complex{0.0, 0.0});
  c[0] = 1.0;
  c[1] = (a + b) / 2.0;
  const double ha = 1.0 - a * a;
  const double hb = 1.0 - b * b;
  double pa = 1.0, pb = 1.0;  // a^(n-2), b^(n-2)
  for (int n = 2; n <= order; ++n) {
    c[n] = -0.5 * (pa * ha + pb * hb);
    pa *= a;
    pb *= b;
  }
  return DiskFunction(CoefficientSeries(std::move(c)),
                      "F(" + std::to_string(a) + "," + std::to_string(b) + ")");
}

double family_area_sum(const FamilyParams& prm) {
  // Equivalent to (2 + 2(1-a^2)(1-b^2)/(1-ab)^2)/4 but manifestly <= 1:
  // the difference from 1 is half a square. a = b (including +-1, where the
  // displayed fraction is 0/0) gives exactly 1.
  if (prm.alpha == prm.beta) return 1.0;
  const double q = (prm.alpha - prm.beta) / (1.0 - prm.alpha * prm.beta);
  return 1.0 - 0.5 * q * q;
}

double family_u_radius(double alpha) {
  check_alpha(alpha);
  const double a2 = alpha * alpha;
  return std::sqrt(2.0 /
                   (1.0 + a2 + std::sqrt((1.0 - a2) * (7.0 * a2 + 1.0))));
}

Complex family_u_functional_closed(double alpha, Complex z) {
  check_alpha(alpha);
  check_interior(z);
  // (1-ab)(1-az)(1-bz) - (1-z^2)(a-b)^2/2 over (1-az)^2(1-bz)^2 at b = -a
  // simplifies to +(1-a^2)(1+a^2 z^2)/(1-a^2 z^2)^2 times z^2.
  const double a2 = alpha * alpha;
  const Complex z2 = z * z;
  const Complex den = 1.0 - a2 * z2;
  return (1.0 - a2) * z2 * (1.0 + a2 * z2) / (den * den);
}

FamilyDiagnostics family_m_roots(const FamilyParams& prm) {
  if (prm.beta != -prm.alpha) {
    throw std::invalid_argument("family_m_roots: requires beta = -alpha");
  }
  const double a2 = prm.alpha * prm.alpha;
  // F'(z) = a^2 (z^2 + w+)(z^2 + w-) / ((1-z^2)^2); the pair w+- is complex
  // conjugate when the discriminant (9a^2-1)(1-a^2) is nonnegative and real
  // otherwise. Either way |w+ w-| = 1/a^2, so the root moduli straddle 1/|a|.
  const double disc = (9.0 * a2 - 1.0) * (1.0 - a2);
  FamilyDiagnostics d{};
  d.area_sum = family_area_sum(prm);
  d.r_u = family_u_radius(prm.alpha);
  if (disc >= 0.0) {
    const Complex a_const{(1.0 - 3.0 * a2) / (2.0 * a2),
                          std::sqrt(disc) / (2.0 * a2)};
    d.constant_a = a_const;
    d.min_abs_root = std::sqrt(std::abs(a_const));
  } else {
    const double s = std::sqrt(-disc);
    const double b_minus = (1.0 - 3.0 * a2 - s) / (2.0 * a2);
    const double b_plus = (1.0 - 3.0 * a2 + s) / (2.0 * a2);
    d.constants_b = std::pair{b_minus, b_plus};
    d.min_abs_root = std::sqrt(b_minus);
  }
  return d;
}

double family_boundary_starlike(double alpha, double theta) {
  check_alpha(alpha);
  if (std::abs(alpha) >= 1.0) {
    throw std::invalid_argument("family_boundary_starlike: needs |alpha| < 1");
  }
  if (!(theta > 0.0 && theta < std::numbers::pi)) {
    throw std::invalid_argument("family_boundary_starlike: theta in (0, pi)");
  }
  const double a2 = alpha * alpha;
  const double c = std::cos(2.0 * theta);
  return 4.0 * a2 * (a2 - c) * (1.0 - c);
}

Complex family_value(double alpha, Complex z) {
  check_alpha(alpha);
  check_interior(z);
  const Complex z2 = z * z;
  return z * (1.0 - alpha * alpha * z2) / (1.0 - z2);
}

Complex family_derivative(double alpha, Complex z) {
  check_alpha(alpha);
  check_interior(z);
  const double a2 = alpha * alpha;
  const Complex z2 = z * z;
  const Complex den = 1.0 - z2;
  return (1.0 + (1.0 - 3.0 * a2) * z2 + a2 * z2 * z2) / (den * den);
}

Complex family_starlike_quotient(double alpha, Complex z) {
  check_alpha(alpha);
  check_interior(z);
  const double a2 = alpha * alpha;
  const Complex z2 = z * z;
  return (1.0 + (1.0 - 3.0 * a2) * z2 + a2 * z2 * z2) /
         ((1.0 - a2 * z2) * (1.0 - z2));
}

Complex family_phi(double alpha, Complex z) {
  return (1.0 - z * z) / (1.0 - alpha * z);
}

Complex family_phi_prime(double alpha, Complex z) {
  const Complex den = 1.0 - alpha * z;
  return (alpha - 2.0 * z + alpha * z * z) / (den * den);
}

double family_tail_bound_u(const FamilyParams& prm, int order) {
  if (order < 2) throw std::invalid_argument("family: order must be >= 2");
  // sum_{n>N} (n-1) t^(n-2) = t^(N-1) (N(1-t) + t) / (1-t)^2 for t in [0,1);
  // each member contributes (1-t^2)/2 times that with t = |alpha| or |beta|.
  const auto member_tail = [order](double t) {
    const double h = 1.0 - t * t;
    if (h == 0.0) return 0.0;
    const double n = static_cast<double>(order);
    const double geom =
        std::pow(t, n - 1.0) * (n * (1.0 - t) + t) / ((1.0 - t) * (1.0 - t));
    return 0.5 * h * geom;
  };
  return member_tail(std::abs(prm.alpha)) + member_tail(std::abs(prm.beta));
}

}  // namespace ufmt
