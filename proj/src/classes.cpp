#include "ufmt/classes.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace ufmt {

namespace {

double weighted_abs_sum(const DiskFunction& f) {
  double s = 0.0;
  for (int n = 2; n <= f.order(); ++n) {
    s += (n - 1) * std::abs(f.b(n));
  }
  return s;
}

MembershipVerdict sufficiency(std::string name, double sum, double tail,
                              double threshold) {
  if (tail < 0.0) throw std::invalid_argument("tail_bound must be >= 0");
  const bool ok = sum + tail <= threshold;
  return MembershipVerdict{
      ok ? VerdictStatus::Certified : VerdictStatus::Indeterminate,
      std::move(name), sum, tail, threshold};
}

}  // namespace

LambdaParam::LambdaParam(double value) : value_(value) {
  if (!(value > 0.0 && value <= 1.0)) {
    throw std::invalid_argument("lambda must lie in (0, 1]");
  }
}

MembershipVerdict test_u_sufficient(const DiskFunction& f, LambdaParam lambda,
                                    double tail_bound) {
  return sufficiency("u-sufficient", weighted_abs_sum(f), tail_bound,
                     lambda.value());
}

MembershipVerdict test_starlike_sufficient(const DiskFunction& f,
                                           double tail_bound) {
  const double threshold = 1.0 - std::abs(f.b(1));
  return sufficiency("starlike-sufficient", weighted_abs_sum(f), tail_bound,
                     threshold);
}

MembershipVerdict test_u_necessary(const DiskFunction& f, LambdaParam lambda) {
  double sum = 0.0;
  for (int n = 2; n <= f.order(); ++n) {
    const double w = (n - 1) * std::abs(f.b(n));
    sum += w * w;
  }
  const double threshold = lambda.value() * lambda.value();
  // The partial sum is a lower bound for the full one, so only the
  // Refuted direction is sound.
  return MembershipVerdict{sum > threshold ? VerdictStatus::Refuted
                                           : VerdictStatus::Indeterminate,
                           "u-necessary", sum, 0.0, threshold};
}

MembershipVerdict test_area_necessary(const DiskFunction& f) {
  double sum = 0.0;
  for (int n = 2; n <= f.order(); ++n) {
    const double a = std::abs(f.b(n));
    sum += (n - 1) * a * a;
  }
  return MembershipVerdict{sum > 1.0 ? VerdictStatus::Refuted
                                     : VerdictStatus::Indeterminate,
                           "area-necessary", sum, 0.0, 1.0};
}

MembershipVerdict test_lemma2_nonneg(const DiskFunction& f,
                                     double tail_bound) {
  if (tail_bound < 0.0) throw std::invalid_argument("tail_bound must be >= 0");
  double sum = 0.0;
  for (int n = 2; n <= f.order(); ++n) {
    const Complex c = f.b(n);
    if (c.imag() != 0.0 || c.real() < 0.0) {
      throw std::invalid_argument(
          "lemma2: coefficients with index >= 2 must be real and >= 0");
    }
    sum += (n - 1) * c.real();
  }
  // An equivalence: both directions are sound.
  VerdictStatus status;
  if (sum > 1.0) {
    status = VerdictStatus::Refuted;
  } else if (sum + tail_bound <= 1.0) {
    status = VerdictStatus::Certified;
  } else {
    status = VerdictStatus::Indeterminate;
  }
  return MembershipVerdict{status, "lemma2-nonneg", sum, tail_bound, 1.0};
}

ScanReport halfplane_bound(const DiskFunction& f, LambdaParam /*lambda*/,
                           int samples) {
  if (f.b(1) != Complex{0.0, 0.0}) {
    throw std::invalid_argument("halfplane_bound: requires b1 = 0");
  }
  if (samples < 8) throw std::invalid_argument("samples must be >= 8");

  const int rings = std::max(8, samples / 16);
  ScanReport report;
  report.quantity = ScanQuantity::MinReHalfplane;

  std::vector<Complex> pts(samples);
  std::vector<Complex> vals(samples);
  for (int i = 0; i < rings; ++i) {
    const double r = kSeriesTrustRadius * (i + 1) / rings;
    for (int j = 0; j < samples; ++j) {
      const double t = 2.0 * std::numbers::pi * j / samples;
      pts[j] = Complex{r * std::cos(t), r * std::sin(t)};
    }
    evaluate_many(f.phi(), pts, vals);
    double best = std::numeric_limits<double>::infinity();
    Complex witness{0.0, 0.0};
    for (int j = 0; j < samples; ++j) {
      const double re = (1.0 / vals[j]).real();
      if (re < best) {
        best = re;
        witness = pts[j];
      }
    }
    report.radius_grid.push_back(r);
    report.values.push_back(best);
    report.witnesses.push_back(witness);
  }
  return report;
}

}  // namespace ufmt
