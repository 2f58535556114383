#pragma once

#include <optional>
#include <vector>

#include "ufmt/classes.hpp"
#include "ufmt/scan.hpp"
#include "ufmt/series.hpp"

namespace ufmt {

/// Functions entering a harmonic-mean combination, each optionally tagged
/// with a known U(lambda_k) certificate. A single function is accepted
/// (useful for screening); the combination itself is interesting for m >= 2.
struct CombineInput {
  std::vector<DiskFunction> functions;
  std::vector<std::optional<LambdaParam>> lambdas;

  explicit CombineInput(std::vector<DiskFunction> fns);
  CombineInput(std::vector<DiskFunction> fns,
               std::vector<std::optional<LambdaParam>> ls);
  std::size_t size() const { return functions.size(); }
};

/// Numerical screen of the hypothesis that the averaged phi (equivalently
/// (1/m) sum z/f_k) has no zero in the scanned disk.
struct ZeroScreenReport {
  double min_modulus;
  Complex min_witness;
  double grid_radius;
  int winding_number;  // zeros inside |z| = grid_radius, argument principle
};

/// F with z/F = (1/m) sum z/f_k: an exact termwise coefficient average.
/// Works at the coefficient level regardless of denominator zeros; univalence
/// claims downstream must be gated on screen_denominator.
DiskFunction harmonic_mean(const CombineInput& input);

/// Evaluates the averaged phi over a polar grid of |z| <= grid_radius and
/// counts zeros inside the bounding circle by winding-number accumulation.
/// A vanishing sample is reported (min_modulus ~ 0), not thrown.
ZeroScreenReport screen_denominator(const CombineInput& input,
                                    double grid_radius, int density);

/// Same screen driven by a caller-supplied closed form for the mean phi.
ZeroScreenReport screen_denominator_fn(const PointFn& mean_phi,
                                       double grid_radius, int density);

/// harmonic_mean followed by rescale; averaging and rescaling commute.
DiskFunction rescaled_combination(const CombineInput& input, double r);

}  // namespace ufmt
