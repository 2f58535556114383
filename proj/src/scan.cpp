#include "ufmt/scan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ufmt/kernels.hpp"

namespace ufmt {

namespace {

constexpr double kVanishEps = 1e-14;
constexpr double kCollinearTol = 1e-13;

void check_grid(const std::vector<double>& radii, int angular_samples,
                double trust) {
  if (radii.empty()) throw std::invalid_argument("scan: empty radius grid");
  if (angular_samples < 8) {
    throw std::invalid_argument("scan: angular samples must be >= 8");
  }
  for (double r : radii) {
    if (!(r > 0.0) || r > trust) {
      throw std::domain_error("scan: radius beyond the trust region");
    }
  }
}

std::vector<Complex> circle_points(double r, int n) {
  std::vector<Complex> pts(n);
  for (int j = 0; j < n; ++j) {
    const double t = 2.0 * std::numbers::pi * j / n;
    pts[j] = Complex{r * std::cos(t), r * std::sin(t)};
  }
  return pts;
}

// Split-complex batch evaluation of a series on prepared points.
void eval_batch(const CoefficientSeries& s, const std::vector<Complex>& pts,
                std::vector<Complex>& out) {
  out.resize(pts.size());
  evaluate_many(s, pts, out);
}

// ---- image-curve machinery for the injectivity scan ----

// Sign of the turn a->b->c; 0 when within the collinearity tolerance
// (relative to the segment scale).
int orient(const Complex& a, const Complex& b, const Complex& c) {
  const double d = (b.real() - a.real()) * (c.imag() - a.imag()) -
                   (b.imag() - a.imag()) * (c.real() - a.real());
  const double scale =
      std::abs(b - a) * std::max(std::abs(c - a), std::abs(c - b));
  if (std::abs(d) <= kCollinearTol * scale) return 0;
  return d > 0.0 ? 1 : -1;
}

bool within_box(const Complex& a, const Complex& b, const Complex& c) {
  const double pad = kCollinearTol * (std::abs(a) + std::abs(b) + 1.0);
  return std::min(a.real(), b.real()) - pad <= c.real() &&
         c.real() <= std::max(a.real(), b.real()) + pad &&
         std::min(a.imag(), b.imag()) - pad <= c.imag() &&
         c.imag() <= std::max(a.imag(), b.imag()) + pad;
}

bool segments_cross(const Complex& p1, const Complex& p2, const Complex& q1,
                    const Complex& q2) {
  const int d1 = orient(q1, q2, p1);
  const int d2 = orient(q1, q2, p2);
  const int d3 = orient(p1, p2, q1);
  const int d4 = orient(p1, p2, q2);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    return true;
  }
  // Touching or overlapping segments count: a self-touch of the image
  // curve is an injectivity violation as well.
  if (d1 == 0 && within_box(q1, q2, p1)) return true;
  if (d2 == 0 && within_box(q1, q2, p2)) return true;
  if (d3 == 0 && within_box(p1, p2, q1)) return true;
  if (d4 == 0 && within_box(p1, p2, q2)) return true;
  return false;
}

int polygon_winding(const std::vector<Complex>& curve, const Complex& w) {
  double phase = 0.0;
  const std::size_t n = curve.size();
  for (std::size_t j = 0; j < n; ++j) {
    const Complex a = curve[j] - w;
    const Complex b = curve[(j + 1) % n] - w;
    if (std::abs(a) == 0.0 || std::abs(b) == 0.0) return 0;
    phase += std::arg(b / a);
  }
  return static_cast<int>(std::lround(phase / (2.0 * std::numbers::pi)));
}

ScanReport injectivity_from_images(const std::vector<Complex>& pts,
                                   const std::vector<Complex>& images,
                                   const std::vector<Complex>& interior_images,
                                   double radius) {
  ScanReport report;
  report.quantity = ScanQuantity::InjectivityViolations;
  report.radius_grid = {radius};

  const std::size_t n = pts.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (images[j] == images[(j + 1) % n]) {
      report.flagged.push_back(pts[j]);  // degenerate curve sample
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Complex& p1 = images[i];
    const Complex& p2 = images[(i + 1) % n];
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // wrap-adjacent segments
      const Complex& q1 = images[j];
      const Complex& q2 = images[(j + 1) % n];
      if (segments_cross(p1, p2, q1, q2)) {
        report.violations.emplace_back(pts[i], pts[j]);
      }
    }
  }
  for (const Complex& w : interior_images) {
    report.curve_windings.push_back(polygon_winding(images, w));
  }
  report.values = {static_cast<double>(report.violations.size())};
  return report;
}

std::vector<Complex> interior_probe_points(double radius) {
  std::vector<Complex> probes{Complex{0.0, 0.0}};
  const double rho = radius / 2.0;
  for (int k = 0; k < 4; ++k) {
    const double t = std::numbers::pi * (2 * k + 1) / 4.0;
    probes.emplace_back(rho * std::cos(t), rho * std::sin(t));
  }
  return probes;
}

}  // namespace

ScanReport scan_u_functional_fn(const PointFn& u_functional,
                                double trust_radius,
                                const std::vector<double>& radii,
                                int angular_samples) {
  check_grid(radii, angular_samples, trust_radius);
  ScanReport report;
  report.quantity = ScanQuantity::UFunctionalMax;
  report.radius_grid = radii;
  for (double r : radii) {
    const auto pts = circle_points(r, angular_samples);
    double best = -std::numeric_limits<double>::infinity();
    Complex witness{0.0, 0.0};
    for (const Complex& z : pts) {
      const double v = std::abs(u_functional(z));
      if (v > best) {
        best = v;
        witness = z;
      }
    }
    report.values.push_back(best);
    report.witnesses.push_back(witness);
  }
  return report;
}

ScanReport scan_u_functional(const DiskFunction& f,
                             const std::vector<double>& radii,
                             int angular_samples) {
  check_grid(radii, angular_samples, kSeriesTrustRadius);
  const CoefficientSeries u = u_functional_series(f);
  ScanReport report;
  report.quantity = ScanQuantity::UFunctionalMax;
  report.radius_grid = radii;
  std::vector<Complex> vals;
  std::vector<double> mods;
  for (double r : radii) {
    const auto pts = circle_points(r, angular_samples);
    eval_batch(u, pts, vals);
    mods.resize(vals.size());
    {
      std::vector<double> re(vals.size()), im(vals.size());
      for (std::size_t i = 0; i < vals.size(); ++i) {
        re[i] = vals[i].real();
        im[i] = vals[i].imag();
      }
      kern::abs_many(re.data(), im.data(), re.size(), mods.data());
    }
    std::size_t arg = 0;
    for (std::size_t i = 1; i < mods.size(); ++i) {
      if (mods[i] > mods[arg]) arg = i;
    }
    report.values.push_back(mods[arg]);
    report.witnesses.push_back(pts[arg]);
  }
  return report;
}

ScanReport scan_starlike_fn(const PointFn& starlike_quotient,
                            double trust_radius,
                            const std::vector<double>& radii,
                            int angular_samples) {
  check_grid(radii, angular_samples, trust_radius);
  ScanReport report;
  report.quantity = ScanQuantity::MinReStarlike;
  report.radius_grid = radii;
  for (double r : radii) {
    const auto pts = circle_points(r, angular_samples);
    double best = std::numeric_limits<double>::infinity();
    Complex witness{0.0, 0.0};
    for (const Complex& z : pts) {
      const double v = starlike_quotient(z).real();
      if (v < best) {
        best = v;
        witness = z;
      }
    }
    report.values.push_back(best);
    report.witnesses.push_back(witness);
  }
  return report;
}

ScanReport scan_starlike(const DiskFunction& f, const std::vector<double>& radii,
                         int angular_samples) {
  check_grid(radii, angular_samples, kSeriesTrustRadius);
  const CoefficientSeries& phi = f.phi();
  const CoefficientSeries dphi = derivative(phi);
  ScanReport report;
  report.quantity = ScanQuantity::MinReStarlike;
  report.radius_grid = radii;
  std::vector<Complex> pv, dv;
  for (double r : radii) {
    const auto pts = circle_points(r, angular_samples);
    eval_batch(phi, pts, pv);
    eval_batch(dphi, pts, dv);
    double best = std::numeric_limits<double>::infinity();
    Complex witness{0.0, 0.0};
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (std::abs(pv[i]) < kVanishEps) {
        report.flagged.push_back(pts[i]);  // f blows up here; not skipped silently
        continue;
      }
      // z f'/f = 1 - z phi'/phi
      const double v = (1.0 - pts[i] * dv[i] / pv[i]).real();
      if (v < best) {
        best = v;
        witness = pts[i];
      }
    }
    report.values.push_back(best);
    report.witnesses.push_back(witness);
  }
  return report;
}

ScanReport scan_local_univalence_fn(const PointFn& f_prime, double trust_radius,
                                    const std::vector<double>& radii,
                                    int angular_samples) {
  check_grid(radii, angular_samples, trust_radius);
  ScanReport report;
  report.quantity = ScanQuantity::MinAbsDerivative;
  report.radius_grid = radii;
  for (double r : radii) {
    const auto pts = circle_points(r, angular_samples);
    double best = std::numeric_limits<double>::infinity();
    Complex witness{0.0, 0.0};
    for (const Complex& z : pts) {
      const double v = std::abs(f_prime(z));
      if (v < best) {
        best = v;
        witness = z;
      }
    }
    report.values.push_back(best);
    report.witnesses.push_back(witness);
  }
  return report;
}

ScanReport scan_local_univalence(const DiskFunction& f,
                                 const std::vector<double>& radii,
                                 int angular_samples) {
  check_grid(radii, angular_samples, kSeriesTrustRadius);
  const CoefficientSeries& phi = f.phi();
  const CoefficientSeries dphi = derivative(phi);
  ScanReport report;
  report.quantity = ScanQuantity::MinAbsDerivative;
  report.radius_grid = radii;
  std::vector<Complex> pv, dv;
  for (double r : radii) {
    const auto pts = circle_points(r, angular_samples);
    eval_batch(phi, pts, pv);
    eval_batch(dphi, pts, dv);
    double best = std::numeric_limits<double>::infinity();
    Complex witness{0.0, 0.0};
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (std::abs(pv[i]) < kVanishEps) {
        report.flagged.push_back(pts[i]);
        continue;
      }
      // f' = (phi - z phi') / phi^2 for f = z/phi
      const double v = std::abs((pv[i] - pts[i] * dv[i]) / (pv[i] * pv[i]));
      if (v < best) {
        best = v;
        witness = pts[i];
      }
    }
    report.values.push_back(best);
    report.witnesses.push_back(witness);
  }
  return report;
}

ScanReport scan_injectivity_fn(const PointFn& value, double trust_radius,
                               double radius, int samples) {
  check_grid({radius}, samples, trust_radius);
  const auto pts = circle_points(radius, samples);
  std::vector<Complex> images(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) images[i] = value(pts[i]);
  std::vector<Complex> probes;
  for (const Complex& z : interior_probe_points(radius)) {
    probes.push_back(value(z));
  }
  return injectivity_from_images(pts, images, probes, radius);
}

ScanReport scan_injectivity(const DiskFunction& f, double radius, int samples) {
  check_grid({radius}, samples, kSeriesTrustRadius);
  const CoefficientSeries& phi = f.phi();
  const auto pts = circle_points(radius, samples);
  std::vector<Complex> pv;
  eval_batch(phi, pts, pv);
  std::vector<Complex> images(pts.size());
  std::vector<Complex> vanish;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (std::abs(pv[i]) < kVanishEps) vanish.push_back(pts[i]);
    images[i] = pts[i] / pv[i];
  }
  std::vector<Complex> probes;
  for (const Complex& z : interior_probe_points(radius)) {
    probes.push_back(z / evaluate(phi, z));
  }
  ScanReport report = injectivity_from_images(pts, images, probes, radius);
  report.flagged.insert(report.flagged.end(), vanish.begin(), vanish.end());
  return report;
}

}  // namespace ufmt
