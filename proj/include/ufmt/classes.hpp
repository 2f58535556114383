#pragma once

#include <optional>
#include <string>

#include "ufmt/scan.hpp"
#include "ufmt/series.hpp"

namespace ufmt {

/// The parameter of the class U(lambda); valid range (0, 1].
class LambdaParam {
 public:
  explicit LambdaParam(double value);
  double value() const { return value_; }

 private:
  double value_;
};

enum class VerdictStatus { Certified, Refuted, Indeterminate };

/// Outcome of a coefficient-inequality test.
///
/// Sufficient conditions certify or stay silent; necessary conditions refute
/// or stay silent; only an equivalence does both. Certified always means
/// sum_value + tail_bound <= threshold with a known tail bound (0 for a
/// finitely represented function, which is the truncated object itself).
struct MembershipVerdict {
  VerdictStatus status;
  std::string test_name;
  double sum_value;
  std::optional<double> tail_bound;
  double threshold;
};

/// Lemma: sum (n-1)|b_n| <= lambda puts f in U(lambda). Sufficient only,
/// so the negative outcome is Indeterminate, never Refuted.
MembershipVerdict test_u_sufficient(const DiskFunction& f, LambdaParam lambda,
                                    double tail_bound = 0.0);

/// Lemma: sum (n-1)|b_n| <= 1 - |b1| puts f in S*. Sufficient only.
MembershipVerdict test_starlike_sufficient(const DiskFunction& f,
                                           double tail_bound = 0.0);

/// Necessary condition for U(lambda): sum (n-1)^2 |b_n|^2 <= lambda^2.
/// The partial sum is a lower bound, so exceeding lambda^2 refutes soundly.
MembershipVerdict test_u_necessary(const DiskFunction& f, LambdaParam lambda);

/// Area-theorem necessary condition for univalence: sum (n-1)|b_n|^2 <= 1.
MembershipVerdict test_area_necessary(const DiskFunction& f);

/// For b_n >= 0 (n >= 2) the condition sum (n-1) b_n <= 1 is equivalent to
/// univalence (and to membership in U), so this test can both certify and
/// refute. Coefficients with index >= 2 must be real and nonnegative.
MembershipVerdict test_lemma2_nonneg(const DiskFunction& f,
                                     double tail_bound = 0.0);

/// Numerical spot-check of Re(f(z)/z) = Re(1/phi(z)) over a polar grid on
/// |z| <= 0.95; reports the minimum per ring. Requires b1 = 0. The caller
/// compares against 1/(1+lambda); sampling proves nothing.
ScanReport halfplane_bound(const DiskFunction& f, LambdaParam lambda,
                           int samples);

}  // namespace ufmt
