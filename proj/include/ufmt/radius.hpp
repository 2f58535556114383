#pragma once

#include <span>

#include "ufmt/classes.hpp"
#include "ufmt/series.hpp"

namespace ufmt {

enum class RadiusTheorem { T1_U, T1_Starlike, T2a, T2b, T3, T4, Bisection };

/// A sufficient radius: the rescaled function is certified in the target
/// class for every r up to `radius`. None of these radii is claimed sharp
/// (determining the exact radii is open); sufficient_only is always true.
struct RadiusResult {
  double radius;
  RadiusTheorem theorem;
  double lambda_out;
  bool sufficient_only;
};

/// Harmonic mean of two univalent functions lies in U(lambda) for
/// r <= sqrt(lambda/(1+lambda)).
RadiusResult radius_t1(LambdaParam lambda);

/// Starlike radius sqrt(1 - 2/(4 - |b1+c1|)) of the two-function mean,
/// where b1 + c1 = -F''(0). Degenerate at |b1+c1| >= 2 (rejected).
RadiusResult radius_t1_starlike(Complex b1_plus_c1);

/// m-function version of the T1 radius (same formula).
RadiusResult radius_t2a(LambdaParam lambda);

/// Starlike radius of an m-function mean from the second derivatives
/// f_k''(0): lambda = 1 - |sum f_k''(0)/2| / m, radius sqrt(lambda/(1+lambda)).
/// Certifies starlikeness (not just U-membership) up to the radius.
RadiusResult radius_t2b(std::span<const Complex> second_derivs);

/// Mean of functions in U(lambda_k): G in U(lambda) for
/// r <= sqrt((-K^2 + K sqrt(K^2+4))/2), K = sqrt(m lambda^2 / sum lambda_k).
/// m = 2 is the two-function case; the formula is the same.
RadiusResult radius_t3_t4(std::span<const LambdaParam> lambdas,
                          LambdaParam target);

/// Largest r in (0,1] with sum (n-1)|b_n| r^n <= lambda, by bisection to
/// 1e-9 on the truncated data. The sum is strictly increasing in r unless
/// every b_n (n >= 2) vanishes, in which case the radius is 1.
RadiusResult radius_bisect(const DiskFunction& f, LambdaParam target);

}  // namespace ufmt
