#include "ufmt/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ufmt/combine.hpp"
#include "ufmt/family.hpp"

namespace ufmt {

namespace {

DiskFunction poly_series(std::vector<Complex> coeffs, int order,
                         std::string label) {
  if (static_cast<std::size_t>(order) + 1 < coeffs.size()) {
    throw std::invalid_argument("catalog: order too small for this entry");
  }
  coeffs.resize(order + 1, Complex{0.0, 0.0});
  return DiskFunction(CoefficientSeries(std::move(coeffs)), std::move(label));
}

CatalogEntry family_entry(std::string name, double alpha) {
  return CatalogEntry{
      std::move(name),
      DeclaredClass::C,
      [alpha](Complex z) { return family_phi(alpha, z); },
      [alpha](Complex z) { return family_phi_prime(alpha, z); },
      [alpha](int order) { return family_member(alpha, order); },
      kClosedFormTrustRadius,
  };
}

CatalogEntry poly_entry(std::string name, DeclaredClass cls,
                        std::vector<Complex> coeffs) {
  auto phi = [coeffs](Complex z) {
    Complex acc = coeffs.back();
    for (std::size_t k = coeffs.size() - 1; k-- > 0;) acc = acc * z + coeffs[k];
    return acc;
  };
  auto phip = [coeffs](Complex z) {
    Complex acc = static_cast<double>(coeffs.size() - 1) * coeffs.back();
    for (std::size_t k = coeffs.size() - 1; k-- > 1;) {
      acc = acc * z + static_cast<double>(k) * coeffs[k];
    }
    return coeffs.size() > 1 ? acc : Complex{0.0, 0.0};
  };
  auto series = [coeffs, name](int order) {
    return poly_series(coeffs, order, name);
  };
  return CatalogEntry{std::move(name), cls,        std::move(phi),
                      std::move(phip), std::move(series),
                      kClosedFormTrustRadius};
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> cat;
  const Complex i{0.0, 1.0};
  // Koebe z/(1-z)^2 and two rotations: phi = (1 - e^{it} z)^2.
  cat.push_back(poly_entry("koebe", DeclaredClass::Sstar, {1.0, -2.0, 1.0}));
  cat.push_back(poly_entry("koebe-rot", DeclaredClass::Sstar, {1.0, 2.0, 1.0}));
  cat.push_back(
      poly_entry("koebe-rot-i", DeclaredClass::Sstar, {1.0, -2.0 * i, -1.0}));
  // Half-plane map z/(1-z).
  cat.push_back(poly_entry("halfplane", DeclaredClass::K, {1.0, -1.0}));
  // z/(1+z^2): the mean of koebe and koebe-rot, starlike.
  cat.push_back(poly_entry("twoslit", DeclaredClass::Sstar, {1.0, 0.0, 1.0}));
  // Close-to-convex family members.
  cat.push_back(family_entry("falpha-05", 0.5));
  cat.push_back(family_entry("falpha-m05", -0.5));
  cat.push_back(family_entry("falpha-03", 0.3));
  // Nonnegative-coefficient constructions (univalent via the n>=2
  // coefficient equivalence; inputs for the mean-preserves-univalence slot).
  cat.push_back(poly_entry("nonneg-1", DeclaredClass::U,
                           {1.0, -0.5, 0.6, 0.2}));
  cat.push_back(poly_entry("nonneg-2", DeclaredClass::U, {1.0, 0.0, 0.4, 0.3}));
  return cat;
}

bool close_to_convex(DeclaredClass c) {
  return c == DeclaredClass::Sstar || c == DeclaredClass::K ||
         c == DeclaredClass::C;
}

}  // namespace

std::string_view declared_class_name(DeclaredClass c) {
  switch (c) {
    case DeclaredClass::S: return "S";
    case DeclaredClass::Sstar: return "S*";
    case DeclaredClass::K: return "K";
    case DeclaredClass::C: return "C";
    case DeclaredClass::U: return "U";
  }
  return "?";
}

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> cat = make_catalog();
  return cat;
}

const CatalogEntry* find_entry(std::string_view name) {
  for (const CatalogEntry& e : builtin_catalog()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::vector<PairEvidence> conjecture_harness(std::span<const CatalogEntry> catalog,
                                             PairPolicy policy,
                                             std::span<const double> radii,
                                             int angular_samples) {
  if (catalog.empty()) throw std::invalid_argument("harness: empty catalog");
  if (radii.empty()) throw std::invalid_argument("harness: empty schedule");

  std::vector<const CatalogEntry*> selected;
  for (const CatalogEntry& e : catalog) {
    if (policy == PairPolicy::CloseToConvex && !close_to_convex(e.declared_class)) {
      continue;
    }
    selected.push_back(&e);  // every declared class is univalent
  }

  std::vector<double> schedule(radii.begin(), radii.end());
  std::sort(schedule.begin(), schedule.end());
  const double max_radius = schedule.back();

  std::vector<PairEvidence> rows;
  for (std::size_t a = 0; a < selected.size(); ++a) {
    for (std::size_t b = a; b < selected.size(); ++b) {
      const CatalogEntry& left = *selected[a];
      const CatalogEntry& right = *selected[b];
      const double trust = std::min(left.trust_radius, right.trust_radius);

      const PointFn mean_phi = [&left, &right](Complex z) {
        return 0.5 * (left.phi(z) + right.phi(z));
      };
      const PointFn mean_phi_prime = [&left, &right](Complex z) {
        return 0.5 * (left.phi_prime(z) + right.phi_prime(z));
      };
      const PointFn combined_deriv = [&mean_phi, &mean_phi_prime](Complex z) {
        const Complex p = mean_phi(z);
        return (p - z * mean_phi_prime(z)) / (p * p);
      };
      const PointFn combined_value = [&mean_phi](Complex z) {
        return z / mean_phi(z);
      };

      const double screen_radius = std::min(max_radius, trust);
      const ZeroScreenReport screen =
          screen_denominator_fn(mean_phi, screen_radius, angular_samples);
      const bool violated = screen.winding_number > 0;

      for (double r : schedule) {
        PairEvidence row{};
        row.pair_id = left.name + "|" + right.name;
        row.left = left.name;
        row.right = right.name;
        row.radius = r;
        row.hypothesis_violated = violated;
        row.screen_min_modulus = screen.min_modulus;
        row.screen_winding = screen.winding_number;
        row.trust_exceeded = r > trust;
        row.min_abs_derivative = 0.0;
        row.injectivity_violations = 0;
        row.curve_winding_ok = false;
        if (!violated && !row.trust_exceeded) {
          const ScanReport lu =
              scan_local_univalence_fn(combined_deriv, trust, {r},
                                       angular_samples);
          const ScanReport inj =
              scan_injectivity_fn(combined_value, trust, r, angular_samples);
          row.min_abs_derivative = lu.values.at(0);
          row.injectivity_violations =
              static_cast<int>(inj.violations.size());
          row.curve_winding_ok =
              std::all_of(inj.curve_windings.begin(), inj.curve_windings.end(),
                          [](int w) { return w == 1; });
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

}  // namespace ufmt
