#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "ufmt/series.hpp"

namespace ufmt {

enum class ScanQuantity {
  UFunctionalMax,
  MinReStarlike,
  MinAbsDerivative,
  InjectivityViolations,
  MinReHalfplane,
};

/// Result of a numerical sweep over circles (or a polar grid) in the disk.
/// values holds one extremum per entry of radius_grid; witnesses the points
/// achieving them. Scans report evidence, never certificates.
struct ScanReport {
  ScanQuantity quantity;
  std::vector<double> radius_grid;
  std::vector<double> values;
  std::vector<Complex> witnesses;
  // Injectivity only: pre-image pairs whose image segments cross.
  std::vector<std::pair<Complex, Complex>> violations;
  // Samples where a denominator fell below 1e-14 (flagged, not skipped).
  std::vector<Complex> flagged;
  // Injectivity only: winding of the image curve about interior image
  // points; every entry should be 1 for an injective map.
  std::vector<int> curve_windings;
};

/// Pointwise evaluator for closed-form scan backends.
using PointFn = std::function<Complex(Complex)>;

inline constexpr double kSeriesTrustRadius = 0.95;
inline constexpr double kClosedFormTrustRadius = 0.9999;
inline constexpr int kDefaultAngularSamples = 2048;

/// Max of |f'(z)(z/f)^2 - 1| per circle, from the truncated series.
ScanReport scan_u_functional(const DiskFunction& f,
                             const std::vector<double>& radii,
                             int angular_samples);
/// Same sweep with a caller-supplied closed form for the functional.
ScanReport scan_u_functional_fn(const PointFn& u_functional,
                                double trust_radius,
                                const std::vector<double>& radii,
                                int angular_samples);

/// Min of Re(z f'/f) per circle (series route: 1 - z phi'/phi).
ScanReport scan_starlike(const DiskFunction& f, const std::vector<double>& radii,
                         int angular_samples);
ScanReport scan_starlike_fn(const PointFn& starlike_quotient, double trust_radius,
                            const std::vector<double>& radii,
                            int angular_samples);

/// Min of |f'(z)| per circle; positive minima are local-univalence evidence.
ScanReport scan_local_univalence(const DiskFunction& f,
                                 const std::vector<double>& radii,
                                 int angular_samples);
ScanReport scan_local_univalence_fn(const PointFn& f_prime, double trust_radius,
                                    const std::vector<double>& radii,
                                    int angular_samples);

/// Self-intersection test of the image of the circle |z| = radius, plus a
/// winding check of the image curve about interior image points. A crossing
/// is a genuine injectivity counterexample on that circle (up to tolerance);
/// a clean curve with winding 1 is evidence, not proof, of univalence.
ScanReport scan_injectivity(const DiskFunction& f, double radius, int samples);
ScanReport scan_injectivity_fn(const PointFn& value, double trust_radius,
                               double radius, int samples);

}  // namespace ufmt
