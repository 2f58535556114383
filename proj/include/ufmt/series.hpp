#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace ufmt {

using Complex = std::complex<double>;

inline constexpr int kDefaultOrder = 128;

/// Truncated complex power series c0 + c1 z + ... + cN z^N.
///
/// Values are immutable once constructed; every operation below is a pure
/// function returning a fresh series. Binary operations truncate to the
/// smaller operand order and never extrapolate past it.
class CoefficientSeries {
 public:
  explicit CoefficientSeries(std::vector<Complex> coeffs);

  /// Zero series of the given order.
  static CoefficientSeries zero(int order);
  /// The series 1 + 0 z + ... + 0 z^order.
  static CoefficientSeries one(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  Complex at(int n) const;

 private:
  std::vector<Complex> coeffs_;
};

/// A normalized analytic function f on the unit disk, stored through its
/// reciprocal representation phi = z/f = 1 + b1 z + b2 z^2 + ...
/// The constant term must be exactly 1 (f(0) = 0, f'(0) = 1).
class DiskFunction {
 public:
  DiskFunction(CoefficientSeries phi, std::string label);

  const CoefficientSeries& phi() const { return phi_; }
  const std::string& label() const { return label_; }
  /// Coefficient b_n of phi (0 for n past the truncation order).
  Complex b(int n) const;
  int order() const { return phi_.order(); }

 private:
  CoefficientSeries phi_;
  std::string label_;
};

/// Cauchy product truncated at the smaller operand order.
CoefficientSeries multiply(const CoefficientSeries& a,
                           const CoefficientSeries& b);

/// Multiplicative inverse through the truncation order; requires c0 != 0.
CoefficientSeries reciprocal(const CoefficientSeries& s);

/// Coefficient n scaled by r^n, for r in (0, 1]. Realizes z -> r z.
CoefficientSeries rescale(const CoefficientSeries& s, double r);

/// Termwise derivative; order drops by one (a constant stays order 0).
CoefficientSeries derivative(const CoefficientSeries& s);

/// Horner evaluation; rejects |z| >= 1 (truncation is uncontrolled there).
Complex evaluate(const CoefficientSeries& s, Complex z);

/// Batch evaluation over many points, same domain rule as evaluate().
void evaluate_many(const CoefficientSeries& s, std::span<const Complex> pts,
                   std::span<Complex> out);

/// Series of f'(z)(z/f(z))^2 - 1, computed as -z phi' + phi - 1.
/// Coefficient n equals (1-n) b_n exactly; the n=1 term vanishes.
CoefficientSeries u_functional_series(const DiskFunction& f);

}  // namespace ufmt
