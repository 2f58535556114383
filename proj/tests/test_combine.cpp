#include <doctest.h>

#include <cmath>
#include <random>

#include "ufmt/classes.hpp"
#include "ufmt/combine.hpp"
#include "ufmt/family.hpp"
#include "test_util.hpp"

using namespace ufmt;
using doctest::Approx;

namespace {

DiskFunction fn(std::vector<Complex> c, const char* label = "test") {
  return DiskFunction(CoefficientSeries(std::move(c)), label);
}

DiskFunction koebe(int order) {
  std::vector<Complex> c(order + 1, 0.0);
  c[0] = 1.0;
  c[1] = -2.0;
  c[2] = 1.0;
  return fn(std::move(c), "koebe");
}

DiskFunction koebe_rot(int order) {
  std::vector<Complex> c(order + 1, 0.0);
  c[0] = 1.0;
  c[1] = 2.0;
  c[2] = 1.0;
  return fn(std::move(c), "koebe-rot");
}

}  // namespace

TEST_SUITE("combine") {

TEST_CASE("mean of Koebe and its rotation is z/(1+z^2)") {
  const DiskFunction m = harmonic_mean(CombineInput({koebe(8), koebe_rot(8)}));
  CHECK(m.b(0) == Complex{1.0, 0.0});
  CHECK(m.b(1) == Complex{0.0, 0.0});
  CHECK(m.b(2) == Complex{1.0, 0.0});
  for (int n = 3; n <= 8; ++n) CHECK(m.b(n) == Complex{0.0, 0.0});
}

TEST_CASE("harmonic mean is idempotent") {
  std::mt19937_64 rng(41);
  const DiskFunction f(testutil::random_phi(rng, 32), "f");
  const DiskFunction m = harmonic_mean(CombineInput({f, f}));
  for (int n = 0; n <= 32; ++n) CHECK(m.b(n) == f.b(n));
}

TEST_CASE("empty input is rejected; orders resolve to the minimum") {
  CHECK_THROWS_AS(CombineInput(std::vector<DiskFunction>{}),
                  std::invalid_argument);
  const DiskFunction m =
      harmonic_mean(CombineInput({koebe(8), koebe_rot(16)}));
  CHECK(m.order() == 8);
}

TEST_CASE("mean coefficients match the family closed form") {
  const DiskFunction series_path = harmonic_mean(
      CombineInput({family_member(0.5, 64), family_member(0.25, 64)}));
  const DiskFunction closed = family_combination(FamilyParams(0.5, 0.25), 64);
  for (int n = 0; n <= 64; ++n) {
    CHECK(std::abs(series_path.b(n) - closed.b(n)) <= 1e-12);
  }
}

TEST_CASE("averaging is linear termwise") {
  std::mt19937_64 rng(42);
  const DiskFunction f(testutil::random_phi(rng, 24), "f");
  const DiskFunction g(testutil::random_phi(rng, 24), "g");
  const DiskFunction h(testutil::random_phi(rng, 24), "h");
  const DiskFunction m = harmonic_mean(CombineInput({f, g, h}));
  for (int n = 1; n <= 24; ++n) {
    const Complex expect = (f.b(n) + g.b(n) + h.b(n)) / 3.0;
    CHECK(std::abs(m.b(n) - expect) <= 1e-15 * (1.0 + std::abs(expect)));
  }
  CHECK(m.b(0) == Complex{1.0, 0.0});
}

TEST_CASE("denominator screen: koebe pair has no zeros") {
  const ZeroScreenReport r = screen_denominator(
      CombineInput({koebe(16), koebe_rot(16)}), 0.9, 2048);
  CHECK(r.winding_number == 0);
  // min |1+z^2| over the grid is at z = +-0.9i
  CHECK(r.min_modulus == Approx(1.0 - 0.81).epsilon(1e-9));
}

TEST_CASE("denominator screen: single unit function") {
  const ZeroScreenReport r = screen_denominator(
      CombineInput({DiskFunction(CoefficientSeries::one(8), "id")}), 0.9, 256);
  CHECK(r.winding_number == 0);
  CHECK(r.min_modulus == Approx(1.0));
}

TEST_CASE("denominator screen: engineered zero inside") {
  // phi-mean = 1 - 2z vanishes at z = 0.5, inside |z| = 0.9
  const ZeroScreenReport r = screen_denominator(
      CombineInput({fn({1.0, -2.0, 0.0, 0.0})}), 0.9, 2048);
  CHECK(r.winding_number == 1);
  CHECK(r.min_modulus < 0.05);
}

TEST_CASE("denominator screen counts multiple zeros") {
  // (1 - 2z)(1 - 2.5z) = 1 - 4.5z + 5z^2: zeros at 0.5 and 0.4
  const ZeroScreenReport r = screen_denominator(
      CombineInput({fn({1.0, -4.5, 5.0, 0.0})}), 0.9, 1024);
  CHECK(r.winding_number == 2);
}

TEST_CASE("screen parameter validation") {
  CHECK_THROWS_AS(
      screen_denominator(CombineInput({koebe(8)}), 1.0, 256),
      std::invalid_argument);
  CHECK_THROWS_AS(
      screen_denominator(CombineInput({koebe(8)}), 0.0, 256),
      std::invalid_argument);
}

TEST_CASE("rescaled combination equals mean of rescaled inputs") {
  std::mt19937_64 rng(43);
  const DiskFunction f(testutil::random_phi(rng, 32), "f");
  const DiskFunction g(testutil::random_phi(rng, 32), "g");
  const CombineInput input({f, g});
  CHECK(rescaled_combination(input, 1.0).b(7) == harmonic_mean(input).b(7));

  const double r = 0.6;
  const DiskFunction lhs = rescaled_combination(input, r);
  const DiskFunction rhs = harmonic_mean(CombineInput(
      {DiskFunction(rescale(f.phi(), r), "fr"),
       DiskFunction(rescale(g.phi(), r), "gr")}));
  for (int n = 0; n <= 32; ++n) {
    CHECK(std::abs(lhs.b(n) - rhs.b(n)) <= 1e-14 * (1.0 + std::abs(rhs.b(n))));
  }
}

TEST_CASE("koebe pair rescaled just inside 1/sqrt(2) is certified at 1/2") {
  // the closed-form radius rounds up in binary, so step one ulp inside
  const double r = std::nextafter(1.0 / std::sqrt(2.0), 0.0);
  const DiskFunction g =
      rescaled_combination(CombineInput({koebe(16), koebe_rot(16)}), r);
  CHECK(g.b(2).real() == Approx(0.5).epsilon(1e-12));
  const MembershipVerdict v = test_u_sufficient(g, LambdaParam(0.5));
  CHECK(v.status == VerdictStatus::Certified);
}

TEST_CASE("mean of lemma2-certified inputs stays certified") {
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> tgt(0.2, 1.0 - 1e-9);
  std::uniform_real_distribution<double> b1(-0.3, 0.3);
  for (int t = 0; t < 50; ++t) {
    const double b = b1(rng);
    const DiskFunction f(
        testutil::random_nonneg_phi(rng, 64, tgt(rng), b), "f");
    const DiskFunction g(
        testutil::random_nonneg_phi(rng, 64, tgt(rng), -b), "g");
    REQUIRE(test_lemma2_nonneg(f).status == VerdictStatus::Certified);
    REQUIRE(test_lemma2_nonneg(g).status == VerdictStatus::Certified);
    const DiskFunction m = harmonic_mean(CombineInput({f, g}));
    CHECK(test_lemma2_nonneg(m).status == VerdictStatus::Certified);
    // b1 + c1 = 0: the mean is starlike as well
    CHECK(m.b(1) == Complex{0.0, 0.0});
    CHECK(test_starlike_sufficient(m).status == VerdictStatus::Certified);
  }
}

TEST_CASE("combined weighted sum obeys the square-weighted bound") {
  // Inputs with sum (n-1)^2 |b_n|^2 <= lambda_k^2 keep the combined sum
  // under ((l1+l2)/2) r^2/sqrt(1-r^2).
  std::mt19937_64 rng(46);
  std::uniform_real_distribution<double> lam(0.1, 1.0);
  for (int t = 0; t < 20; ++t) {
    const double l1 = lam(rng), l2 = lam(rng);
    auto normalized = [&rng](double target) {
      CoefficientSeries s = testutil::random_phi(rng, 128, 0.8);
      double w = 0.0;
      for (int n = 2; n <= s.order(); ++n) {
        const double x = (n - 1) * std::abs(s.at(n));
        w += x * x;
      }
      std::vector<Complex> c(s.coeffs().begin(), s.coeffs().end());
      const double inv = target / std::sqrt(w);
      for (std::size_t n = 1; n < c.size(); ++n) c[n] *= inv;
      return DiskFunction(CoefficientSeries(std::move(c)), "norm");
    };
    const DiskFunction m = harmonic_mean(
        CombineInput({normalized(l1), normalized(l2)}));
    for (double r : {0.2, 0.4, 0.6, 0.8}) {
      double s = 0.0, p = r;
      for (int n = 2; n <= m.order(); ++n) {
        p *= r;
        s += (n - 1) * std::abs(m.b(n)) * p;
      }
      CHECK(s <= 0.5 * (l1 + l2) * r * r / std::sqrt(1.0 - r * r));
    }
  }
}

TEST_CASE("combined weighted sum obeys the area-normalized bound") {
  // For inputs with sum (n-1)|b_n|^2 <= 1 the combined weighted sum stays
  // under r^2/(1-r^2) on the whole test grid.
  std::mt19937_64 rng(45);
  for (int t = 0; t < 20; ++t) {
    CoefficientSeries a = testutil::random_phi(rng, 128);
    CoefficientSeries b = testutil::random_phi(rng, 128);
    auto normalize = [](const CoefficientSeries& s) {
      double w = 0.0;
      for (int n = 2; n <= s.order(); ++n) {
        w += (n - 1) * std::norm(s.at(n));
      }
      std::vector<Complex> c(s.coeffs().begin(), s.coeffs().end());
      const double inv = 1.0 / std::sqrt(w);
      for (std::size_t n = 1; n < c.size(); ++n) c[n] *= inv;
      return CoefficientSeries(std::move(c));
    };
    const DiskFunction f(normalize(a), "f");
    const DiskFunction g(normalize(b), "g");
    const DiskFunction m = harmonic_mean(CombineInput({f, g}));
    for (double r : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7}) {
      double s = 0.0;
      double p = r;  // r^n
      for (int n = 2; n <= m.order(); ++n) {
        p *= r;
        s += (n - 1) * std::abs(m.b(n)) * p;
      }
      CHECK(s <= r * r / (1.0 - r * r));
    }
  }
}

}  // TEST_SUITE
