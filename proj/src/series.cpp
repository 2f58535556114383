#include "ufmt/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "ufmt/kernels.hpp"

namespace ufmt {

namespace {

void split(std::span<const Complex> v, std::vector<double>& re,
           std::vector<double>& im) {
  re.resize(v.size());
  im.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    re[i] = v[i].real();
    im[i] = v[i].imag();
  }
}

}  // namespace

CoefficientSeries::CoefficientSeries(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("CoefficientSeries: needs at least c0");
  }
}

CoefficientSeries CoefficientSeries::zero(int order) {
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  return CoefficientSeries(std::vector<Complex>(order + 1, Complex{0.0, 0.0}));
}

CoefficientSeries CoefficientSeries::one(int order) {
  std::vector<Complex> c(order >= 0 ? order + 1 : 0, Complex{0.0, 0.0});
  if (c.empty()) throw std::invalid_argument("order must be >= 0");
  c[0] = Complex{1.0, 0.0};
  return CoefficientSeries(std::move(c));
}

Complex CoefficientSeries::at(int n) const {
  if (n < 0) throw std::out_of_range("coefficient index < 0");
  if (n > order()) return Complex{0.0, 0.0};
  return coeffs_[static_cast<std::size_t>(n)];
}

DiskFunction::DiskFunction(CoefficientSeries phi, std::string label)
    : phi_(std::move(phi)), label_(std::move(label)) {
  if (phi_.at(0) != Complex{1.0, 0.0}) {
    throw std::invalid_argument(
        "DiskFunction: phi(0) must be exactly 1 (normalization)");
  }
}

Complex DiskFunction::b(int n) const { return phi_.at(n); }

CoefficientSeries multiply(const CoefficientSeries& a,
                           const CoefficientSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<double> are, aim, bre, bim;
  split(a.coeffs(), are, aim);
  split(b.coeffs(), bre, bim);
  std::vector<double> cre(n + 1), cim(n + 1);
  kern::conv_trunc(are.data(), aim.data(), are.size(), bre.data(), bim.data(),
                   bre.size(), cre.data(), cim.data(), cre.size());
  std::vector<Complex> out(n + 1);
  for (int k = 0; k <= n; ++k) out[k] = Complex{cre[k], cim[k]};
  return CoefficientSeries(std::move(out));
}

CoefficientSeries reciprocal(const CoefficientSeries& s) {
  const Complex c0 = s.at(0);
  if (c0 == Complex{0.0, 0.0}) {
    throw std::invalid_argument("reciprocal: constant term is zero");
  }
  const int n = s.order();
  std::vector<Complex> t(n + 1);
  t[0] = 1.0 / c0;
  for (int k = 1; k <= n; ++k) {
    Complex acc{0.0, 0.0};
    for (int j = 1; j <= k; ++j) acc += s.at(j) * t[k - j];
    t[k] = -acc / c0;
  }
  return CoefficientSeries(std::move(t));
}

CoefficientSeries rescale(const CoefficientSeries& s, double r) {
  if (!(r > 0.0 && r <= 1.0)) {
    throw std::invalid_argument("rescale: r must lie in (0, 1]");
  }
  std::vector<Complex> out(s.coeffs().begin(), s.coeffs().end());
  double p = 1.0;
  for (std::size_t k = 1; k < out.size(); ++k) {
    p *= r;
    out[k] *= p;
  }
  return CoefficientSeries(std::move(out));
}

CoefficientSeries derivative(const CoefficientSeries& s) {
  if (s.order() == 0) return CoefficientSeries::zero(0);
  std::vector<Complex> out(s.order());
  for (int k = 1; k <= s.order(); ++k) {
    out[k - 1] = static_cast<double>(k) * s.at(k);
  }
  return CoefficientSeries(std::move(out));
}

Complex evaluate(const CoefficientSeries& s, Complex z) {
  if (!(std::abs(z) < 1.0)) {
    throw std::domain_error("evaluate: |z| must be < 1");
  }
  Complex acc = s.at(s.order());
  for (int k = s.order() - 1; k >= 0; --k) acc = acc * z + s.at(k);
  return acc;
}

void evaluate_many(const CoefficientSeries& s, std::span<const Complex> pts,
                   std::span<Complex> out) {
  if (out.size() != pts.size()) {
    throw std::invalid_argument("evaluate_many: size mismatch");
  }
  for (const Complex& z : pts) {
    if (!(std::abs(z) < 1.0)) {
      throw std::domain_error("evaluate_many: |z| must be < 1");
    }
  }
  std::vector<double> cre, cim, zre, zim;
  split(s.coeffs(), cre, cim);
  split(pts, zre, zim);
  std::vector<double> wre(pts.size()), wim(pts.size());
  kern::horner_many(cre.data(), cim.data(), cre.size(), zre.data(), zim.data(),
                    zre.size(), wre.data(), wim.data());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out[i] = Complex{wre[i], wim[i]};
  }
}

CoefficientSeries u_functional_series(const DiskFunction& f) {
  const int n = f.order();
  std::vector<Complex> out(n + 1, Complex{0.0, 0.0});
  for (int k = 1; k <= n; ++k) {
    out[k] = (1.0 - static_cast<double>(k)) * f.b(k);
  }
  return CoefficientSeries(std::move(out));
}

}  // namespace ufmt
