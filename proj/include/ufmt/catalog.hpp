#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ufmt/scan.hpp"
#include "ufmt/series.hpp"

namespace ufmt {

/// Strongest class the entry is known to inhabit. Documentation only:
/// no computable membership test exists for K or C.
enum class DeclaredClass { S, Sstar, K, C, U };

std::string_view declared_class_name(DeclaredClass c);

/// A named normalized function with both a closed-form phi (valid to
/// trust_radius, 0.9999 for the built-ins) and a truncated-series maker.
struct CatalogEntry {
  std::string name;
  DeclaredClass declared_class;
  PointFn phi;
  PointFn phi_prime;
  std::function<DiskFunction(int order)> make_series;
  double trust_radius;
};

/// Koebe and rotations, the half-plane map, close-to-convex family members,
/// and nonnegative-coefficient constructions: the stock of pair inputs for
/// the conjecture evidence harness.
const std::vector<CatalogEntry>& builtin_catalog();

/// nullptr when no entry has that name.
const CatalogEntry* find_entry(std::string_view name);

/// Which unordered pairs (including (f,f)) the harness combines:
/// every pair, pairs of close-to-convex entries (declared Sstar/K/C), or
/// pairs of univalent entries (every declared class).
enum class PairPolicy { All, CloseToConvex, Univalent };

/// One evidence row: a pair, a radius, and what the sweeps saw. The harness
/// never concludes anything about the conjectures; it only emits rows.
struct PairEvidence {
  std::string pair_id;
  std::string left;
  std::string right;
  double radius;
  bool hypothesis_violated;   // denominator screen found zeros
  double screen_min_modulus;
  int screen_winding;
  bool trust_exceeded;        // radius beyond the pair's trust region
  double min_abs_derivative;  // min |F'| on the circle
  int injectivity_violations;
  bool curve_winding_ok;
};

/// For each selected pair: screen the combined denominator, then sweep
/// |F'| and the image-curve self-intersection test over the radius schedule.
/// Pairs whose screen reports zeros are marked hypothesis_violated and not
/// swept. Fully deterministic: identical calls give identical rows.
std::vector<PairEvidence> conjecture_harness(std::span<const CatalogEntry> catalog,
                                             PairPolicy policy,
                                             std::span<const double> radii,
                                             int angular_samples);

}  // namespace ufmt
