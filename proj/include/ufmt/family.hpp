#pragma once

#include <optional>
#include <utility>

#include "ufmt/series.hpp"

namespace ufmt {

// The two-parameter family f_a(z) = z(1 - a z)/(1 - z^2) and the harmonic
// means F_{a,b} built from it. Everything here is a closed form; the series
// modules are the independent route tested against these values, not the
// other way around. Boundary evaluations (|z| -> 1) are only meaningful
// through the rational forms below, never through truncated series.

/// Parameters a, b in [-1,1] \ {0}.
struct FamilyParams {
  double alpha;
  double beta;
  FamilyParams(double a, double b);
};

/// Diagnostics of the antisymmetric member F_a = F_{a,-a}.
///
/// The quartic 1 - 2 b1 z + ... appearing in F'(z) factors as
/// a^2 (z^2 + w+)(z^2 + w-); the pair w+/- is a complex-conjugate pair
/// (constant_a holds one of them) when (9a^2-1)(1-a^2) >= 0 and a real pair
/// B-/B+ otherwise. min_abs_root is the smallest |z| over the quartic's
/// roots; >= 1 means F' has no zero in the disk.
struct FamilyDiagnostics {
  double area_sum;
  double r_u;
  std::optional<Complex> constant_a;
  std::optional<std::pair<double, double>> constants_b;  // (B-, B+)
  double min_abs_root;
};

/// phi of f_a: (1 - z^2)/(1 - a z), expanded to the given order.
DiskFunction family_member(double alpha, int order);

/// phi of F_{a,b} straight from the closed-form coefficients
/// b1 = (a+b)/2, b_n = -((a^{n-2}(1-a^2) + b^{n-2}(1-b^2))/2 for n >= 2
/// (not via series division); must agree with harmonic_mean of two members.
DiskFunction family_combination(const FamilyParams& p, int order);

/// S = sum (n-1)|b_n|^2 for F_{a,b}, evaluated through the equivalent
/// stable form 1 - ((a-b)/(1-ab))^2 / 2; always <= 1, equal iff a = b.
double family_area_sum(const FamilyParams& p);

/// Sharp U-radius of F_a: sqrt(2/(1 + a^2 + sqrt((1-a^2)(7a^2+1)))).
double family_u_radius(double alpha);

/// The functional (z/F_a)^2 F_a' - 1 = (1-a^2) z^2 (1+a^2 z^2)/(1-a^2 z^2)^2.
Complex family_u_functional_closed(double alpha, Complex z);

/// Factorization constants of the derivative numerator of F_a and the
/// minimum root modulus (see FamilyDiagnostics). Requires beta = -alpha.
FamilyDiagnostics family_m_roots(const FamilyParams& p);

/// A(theta) = 4 a^2 (a^2 - cos 2theta)(1 - cos 2theta): the sign of
/// Re(z F_a'/F_a) on the boundary z = e^{i theta}, theta in (0, pi).
/// Negative exactly when a^2 < cos 2theta, i.e. theta < arccos(a^2)/2.
double family_boundary_starlike(double alpha, double theta);

// Rational pointwise forms of F_a, usable arbitrarily close to |z| = 1.
Complex family_value(double alpha, Complex z);       // F_a(z)
Complex family_derivative(double alpha, Complex z);  // F_a'(z)
Complex family_starlike_quotient(double alpha, Complex z);  // z F_a'/F_a

// Pointwise phi of the member f_a and its derivative (scan backends).
Complex family_phi(double alpha, Complex z);
Complex family_phi_prime(double alpha, Complex z);

/// Analytic bound on the tail sum_{n > order} (n-1)|b_n| of F_{a,b};
/// feeds the tail_bound argument of the membership tests.
double family_tail_bound_u(const FamilyParams& p, int order);

}  // namespace ufmt
