#include "ufmt/combine.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace ufmt {

namespace {

constexpr int kWindingStartSamples = 4096;
constexpr int kWindingMaxSamples = 1 << 20;
constexpr double kWindingPhaseSlack = 0.1;  // rad

// Accumulated argument of w(z) along |z| = r, divided by 2*pi. Doubles the
// sample count until the total lands within kWindingPhaseSlack of an integer
// multiple of 2*pi, so the extracted integer is unambiguous.
int winding_on_circle(const PointFn& w, double r) {
  for (int n = kWindingStartSamples; n <= kWindingMaxSamples; n *= 2) {
    double phase = 0.0;
    Complex prev = w(Complex{r, 0.0});
    bool degenerate = std::abs(prev) == 0.0;
    for (int j = 1; j <= n && !degenerate; ++j) {
      const double t = 2.0 * std::numbers::pi * j / n;
      const Complex cur = w(Complex{r * std::cos(t), r * std::sin(t)});
      if (std::abs(cur) == 0.0) {
        degenerate = true;
        break;
      }
      phase += std::arg(cur / prev);
      prev = cur;
    }
    if (degenerate) return 0;  // a zero on the circle itself; min_modulus tells
    const double turns = phase / (2.0 * std::numbers::pi);
    const long rounded = std::lround(turns);
    if (std::abs(phase - 2.0 * std::numbers::pi * rounded) <
        kWindingPhaseSlack) {
      return static_cast<int>(rounded);
    }
  }
  throw std::runtime_error("winding number did not stabilize");
}

}  // namespace

CombineInput::CombineInput(std::vector<DiskFunction> fns)
    : functions(std::move(fns)), lambdas(functions.size()) {
  if (functions.empty()) {
    throw std::invalid_argument("CombineInput: needs at least one function");
  }
}

CombineInput::CombineInput(std::vector<DiskFunction> fns,
                           std::vector<std::optional<LambdaParam>> ls)
    : functions(std::move(fns)), lambdas(std::move(ls)) {
  if (functions.empty()) {
    throw std::invalid_argument("CombineInput: needs at least one function");
  }
  if (lambdas.size() != functions.size()) {
    throw std::invalid_argument("CombineInput: one lambda slot per function");
  }
}

DiskFunction harmonic_mean(const CombineInput& input) {
  int order = std::numeric_limits<int>::max();
  for (const DiskFunction& f : input.functions) {
    order = std::min(order, f.order());
  }
  const double m = static_cast<double>(input.size());
  std::vector<Complex> mean(order + 1, Complex{0.0, 0.0});
  for (int n = 0; n <= order; ++n) {
    Complex acc{0.0, 0.0};
    for (const DiskFunction& f : input.functions) acc += f.b(n);
    mean[n] = acc / m;
  }
  mean[0] = Complex{1.0, 0.0};  // exact: every phi has constant term 1
  std::string label = "mean(";
  for (std::size_t i = 0; i < input.functions.size(); ++i) {
    if (i > 0) label += ",";
    label += input.functions[i].label();
  }
  label += ")";
  return DiskFunction(CoefficientSeries(std::move(mean)), std::move(label));
}

ZeroScreenReport screen_denominator_fn(const PointFn& mean_phi,
                                       double grid_radius, int density) {
  if (!(grid_radius > 0.0 && grid_radius < 1.0)) {
    throw std::invalid_argument("screen: grid_radius must lie in (0, 1)");
  }
  if (density < 8) throw std::invalid_argument("density must be >= 8");

  const int rings = std::max(8, density / 16);
  double min_mod = std::abs(mean_phi(Complex{0.0, 0.0}));
  Complex witness{0.0, 0.0};
  for (int i = 0; i < rings; ++i) {
    const double r = grid_radius * (i + 1) / rings;
    for (int j = 0; j < density; ++j) {
      const double t = 2.0 * std::numbers::pi * j / density;
      const Complex z{r * std::cos(t), r * std::sin(t)};
      const double a = std::abs(mean_phi(z));
      if (a < min_mod) {
        min_mod = a;
        witness = z;
      }
    }
  }
  // A vanishing sample just drives min_modulus toward 0; no exception.
  const int winding = winding_on_circle(mean_phi, grid_radius);
  return ZeroScreenReport{min_mod, witness, grid_radius, winding};
}

ZeroScreenReport screen_denominator(const CombineInput& input,
                                    double grid_radius, int density) {
  const DiskFunction mean = harmonic_mean(input);
  const CoefficientSeries& phi = mean.phi();
  return screen_denominator_fn(
      [&phi](Complex z) { return evaluate(phi, z); }, grid_radius, density);
}

DiskFunction rescaled_combination(const CombineInput& input, double r) {
  const DiskFunction mean = harmonic_mean(input);
  return DiskFunction(rescale(mean.phi(), r),
                      mean.label() + "@" + std::to_string(r));
}

}  // namespace ufmt
