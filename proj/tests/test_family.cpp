#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "ufmt/family.hpp"
#include "ufmt/series.hpp"
#include "test_util.hpp"

using namespace ufmt;
using doctest::Approx;

TEST_SUITE("family") {

TEST_CASE("parameter domain") {
  CHECK_THROWS_AS(FamilyParams(0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(FamilyParams(0.5, 1.2), std::invalid_argument);
  CHECK_THROWS_AS(family_member(0.0, 16), std::invalid_argument);
  CHECK_NOTHROW(FamilyParams(1.0, -1.0));
}

TEST_CASE("members at alpha = +-1 collapse to Moebius maps") {
  const DiskFunction p = family_member(1.0, 8);
  CHECK(p.b(1) == Complex{1.0, 0.0});
  for (int n = 2; n <= 8; ++n) CHECK(p.b(n) == Complex{0.0, 0.0});
  const DiskFunction m = family_member(-1.0, 8);
  CHECK(m.b(1) == Complex{-1.0, 0.0});
  for (int n = 2; n <= 8; ++n) CHECK(m.b(n) == Complex{0.0, 0.0});
}

TEST_CASE("member matches the series-arithmetic route") {
  // (1 - z^2) * reciprocal(1 - a z), all through the series module
  const double a = 0.5;
  std::vector<Complex> lin(65, 0.0), quad(65, 0.0);
  lin[0] = 1.0;
  lin[1] = -a;
  quad[0] = 1.0;
  quad[2] = -1.0;
  const CoefficientSeries via_series =
      multiply(reciprocal(CoefficientSeries(lin)), CoefficientSeries(quad));
  const DiskFunction direct = family_member(a, 64);
  for (int n = 0; n <= 64; ++n) {
    CHECK(std::abs(via_series.at(n) - direct.b(n)) <= 1e-12);
  }
}

TEST_CASE("combination coefficient formulas") {
  // alpha = beta collapses to the member
  const DiskFunction c = family_combination(FamilyParams(0.4, 0.4), 32);
  const DiskFunction m = family_member(0.4, 32);
  for (int n = 0; n <= 32; ++n) CHECK(c.b(n) == m.b(n));

  // beta = -alpha: b1 = 0, odd coefficients vanish
  const DiskFunction anti = family_combination(FamilyParams(0.6, -0.6), 33);
  CHECK(anti.b(1) == Complex{0.0, 0.0});
  for (int n = 3; n <= 33; n += 2) CHECK(anti.b(n) == Complex{0.0, 0.0});
  for (int n = 2; n <= 32; n += 2) {
    const double expect = -std::pow(0.6, n - 2) * (1.0 - 0.36);
    CHECK(anti.b(n).real() == Approx(expect).epsilon(1e-13));
  }
}

TEST_CASE("area sum closed form") {
  CHECK(family_area_sum(FamilyParams(0.5, 0.5)) == 1.0);
  CHECK(family_area_sum(FamilyParams(1.0, 1.0)) == 1.0);   // 0/0 limit case
  CHECK(family_area_sum(FamilyParams(-1.0, -1.0)) == 1.0);
  CHECK(family_area_sum(FamilyParams(0.5, -0.5)) == Approx(0.68).epsilon(1e-15));
  CHECK(family_area_sum(FamilyParams(1.0, -1.0)) == Approx(0.5).epsilon(1e-15));
}

TEST_CASE("area sum agrees with the displayed fraction form") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(-0.9, 0.9);
  for (int t = 0; t < 200; ++t) {
    double a = u(rng), b = u(rng);
    if (a == 0.0 || b == 0.0) continue;
    const double display =
        0.25 * (2.0 + 2.0 * (1.0 - a * a) * (1.0 - b * b) /
                          ((1.0 - a * b) * (1.0 - a * b)));
    CHECK(family_area_sum(FamilyParams(a, b)) ==
          Approx(display).epsilon(1e-12));
  }
}

TEST_CASE("area sum never exceeds 1 and matches the coefficient route") {
  std::mt19937_64 rng(62);
  std::uniform_real_distribution<double> u(-0.95, 0.95);
  for (int t = 0; t < 50; ++t) {
    double a = u(rng), b = u(rng);
    if (std::abs(a) < 1e-3 || std::abs(b) < 1e-3) continue;
    const FamilyParams p(a, b);
    const double closed = family_area_sum(p);
    CHECK(closed <= 1.0);
    const DiskFunction f = family_combination(p, 512);
    double s = 0.0;
    for (int n = 2; n <= 512; ++n) s += (n - 1) * std::norm(f.b(n));
    CHECK(std::abs(s - closed) <= 1e-9);
  }
}

TEST_CASE("u-radius closed form") {
  CHECK(family_u_radius(1.0) == Approx(1.0).epsilon(1e-15));
  CHECK(family_u_radius(-1.0) == Approx(1.0).epsilon(1e-15));
  CHECK(family_u_radius(0.5) == Approx(0.8628804358299177).epsilon(1e-12));
  CHECK(family_u_radius(0.3) == Approx(0.9309058243627399).epsilon(1e-12));
  CHECK(family_u_radius(0.7) == Approx(0.8174376113569887).epsilon(1e-12));
  double grid_min = 1.0;
  for (double a = 0.05; a <= 0.95; a += 0.05) {
    const double r = family_u_radius(a);
    CHECK(r > 0.0);
    CHECK(r <= 1.0);
    grid_min = std::min(grid_min, r);
  }
  for (double a = 0.05; a <= 0.95; a += 0.05) {
    CHECK(family_u_radius(a) >= grid_min);
  }
}

TEST_CASE("closed-form functional: zeros and degenerate member") {
  CHECK(family_u_functional_closed(0.5, Complex{0.0, 0.0}) ==
        Complex{0.0, 0.0});
  for (double x = -0.9; x <= 0.9; x += 0.1) {
    CHECK(std::abs(family_u_functional_closed(1.0, Complex{x, 0.1})) == 0.0);
  }
}

TEST_CASE("closed-form functional matches the series route") {
  const Complex z{0.3, 0.2};
  const Complex closed = family_u_functional_closed(0.5, z);
  CHECK(closed.real() == Approx(0.030330028558441192).epsilon(1e-12));
  CHECK(closed.imag() == Approx(0.096532153827176003).epsilon(1e-12));
  const DiskFunction f = family_combination(FamilyParams(0.5, -0.5), 128);
  const Complex series = evaluate(u_functional_series(f), z);
  CHECK(std::abs(closed - series) <= 1e-10 * (1.0 + std::abs(series)));
}

TEST_CASE("functional stays below 1 inside r_U and reaches 1 past it") {
  for (double a : {0.3, 0.5, 0.7}) {
    const double ru = family_u_radius(a);
    double maxmod = 0.0;
    for (int j = 0; j < 512; ++j) {
      const double t = 2.0 * 3.14159265358979323846 * j / 512;
      const Complex z = (ru - 1e-4) * Complex{std::cos(t), std::sin(t)};
      maxmod = std::max(maxmod, std::abs(family_u_functional_closed(a, z)));
    }
    CHECK(maxmod < 1.0);
    CHECK(std::abs(family_u_functional_closed(a, Complex{ru + 1e-4, 0.0})) >=
          1.0);
  }
}

TEST_CASE("derivative factorization constants") {
  SUBCASE("complex branch at alpha = 0.5") {
    const FamilyDiagnostics d = family_m_roots(FamilyParams(0.5, -0.5));
    REQUIRE(d.constant_a.has_value());
    CHECK(!d.constants_b.has_value());
    CHECK(std::abs(*d.constant_a) == Approx(2.0).epsilon(1e-13));
    CHECK(d.min_abs_root == Approx(std::sqrt(2.0)).epsilon(1e-13));
    CHECK(d.min_abs_root >= 1.0);
  }
  SUBCASE("real branch at alpha = 0.1") {
    const FamilyDiagnostics d = family_m_roots(FamilyParams(0.1, -0.1));
    REQUIRE(d.constants_b.has_value());
    CHECK(!d.constant_a.has_value());
    const auto [bm, bp] = *d.constants_b;
    CHECK(bm == Approx(1.0421239413308763).epsilon(1e-12));
    CHECK(bp == Approx(95.957876058669124).epsilon(1e-12));
    CHECK(bm * bp == Approx(100.0).epsilon(1e-12));  // product 1/alpha^2
    CHECK(bm >= 1.0);
    CHECK(d.min_abs_root == Approx(std::sqrt(bm)).epsilon(1e-14));
  }
  SUBCASE("precondition") {
    CHECK_THROWS_AS(family_m_roots(FamilyParams(0.5, 0.4)),
                    std::invalid_argument);
  }
}

TEST_CASE("both factorization formula routes agree near alpha = 1/9") {
  // Evaluate the conjugate-pair formula (through a complex square root)
  // and the real-pair formula at the same alpha; the minimum root modulus
  // must come out the same.
  for (double da : {-1e-6, 1e-6}) {
    const double a = 1.0 / 9.0 + da;
    const double a2 = a * a;
    const Complex disc{(9.0 * a2 - 1.0) * (1.0 - a2), 0.0};
    const Complex root = std::sqrt(disc);
    const Complex wp = (Complex{1.0 - 3.0 * a2, 0.0} + Complex{0, 1} * root) /
                       (2.0 * a2);
    const Complex wm = (Complex{1.0 - 3.0 * a2, 0.0} - Complex{0, 1} * root) /
                       (2.0 * a2);
    const double via_complex =
        std::sqrt(std::min(std::abs(wp), std::abs(wm)));
    const double s = std::sqrt((1.0 - 9.0 * a2) * (1.0 - a2));
    const double b_minus = (1.0 - 3.0 * a2 - s) / (2.0 * a2);
    const double via_real = std::sqrt(b_minus);
    CHECK(std::abs(via_complex - via_real) <= 1e-8);
    CHECK(family_m_roots(FamilyParams(a, -a)).min_abs_root ==
          Approx(via_real).epsilon(1e-12));
  }
}

TEST_CASE("root modulus is continuous across the discriminant boundary") {
  // The discriminant (9a^2-1)(1-a^2) changes sign at |a| = 1/3; B- meets
  // the conjugate-pair modulus 1/|a| there with a square-root kink, so
  // continuity holds only at sqrt-of-offset scale.
  const double lo = family_m_roots(FamilyParams(1.0 / 3.0 - 1e-6, -(1.0 / 3.0 - 1e-6))).min_abs_root;
  const double hi = family_m_roots(FamilyParams(1.0 / 3.0 + 1e-6, -(1.0 / 3.0 + 1e-6))).min_abs_root;
  CHECK(std::abs(lo - hi) <= 1e-2);
  CHECK(lo == Approx(std::sqrt(3.0)).epsilon(1e-2));
}

TEST_CASE("derivative matches its factorization and a finite difference") {
  const double a = 0.5;
  const FamilyDiagnostics d = family_m_roots(FamilyParams(a, -a));
  REQUIRE(d.constant_a.has_value());
  const Complex A = *d.constant_a;
  for (const Complex z : {Complex{0.3, 0.1}, Complex{-0.6, 0.2}}) {
    const Complex z2 = z * z;
    const Complex den = (1.0 - z2) * (1.0 - z2);
    const Complex from_roots =
        a * a * (z2 + A) * (z2 + std::conj(A)) / den;
    CHECK(std::abs(from_roots - family_derivative(a, z)) <= 1e-12);

    const double h = 1e-6;
    const Complex fd = (family_value(a, z + h) - family_value(a, z - h)) /
                       (2.0 * h);
    CHECK(std::abs(fd - family_derivative(a, z)) <= 1e-6);
  }
}

TEST_CASE("boundary starlikeness sign pattern") {
  // theta = pi/2: cos 2theta = -1 < a^2, so A >= 0
  CHECK(family_boundary_starlike(0.5, 1.5707963267948966) >= 0.0);
  // cos 0.6 > 0.25: negative
  CHECK(family_boundary_starlike(0.5, 0.3) ==
        Approx(-0.10049064139876108).epsilon(1e-12));
  CHECK(family_boundary_starlike(0.5, 0.3) < 0.0);

  // sign boundary at arccos(a^2)/2 via bisection on A
  const double a = 0.5;
  double lo = 0.3, hi = 1.2;  // A(lo) < 0 < A(hi)
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    (family_boundary_starlike(a, mid) < 0.0 ? lo : hi) = mid;
  }
  CHECK(std::abs(lo - 0.5 * std::acos(0.25)) <= 1e-8);

  // a negative A exists for every |alpha| < 1: never starlike in the disk
  for (double al = 0.05; al <= 0.95; al += 0.05) {
    const double theta = 0.25 * std::acos(al * al);  // inside the window
    CHECK(family_boundary_starlike(al, theta) < 0.0);
  }

  CHECK_THROWS_AS(family_boundary_starlike(1.0, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(family_boundary_starlike(0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(family_boundary_starlike(0.5, 3.15), std::invalid_argument);
}

TEST_CASE("interior starlike quotient near the boundary is negative") {
  const Complex z = 0.9999 * Complex{std::cos(0.3), std::sin(0.3)};
  CHECK(family_starlike_quotient(0.5, z).real() < 0.0);
}

TEST_CASE("tail bound dominates the brute-force tail") {
  const FamilyParams p(0.5, -0.5);
  const double bound = family_tail_bound_u(p, 128);
  const DiskFunction big = family_combination(p, 4096);
  double brute = 0.0;
  for (int n = 129; n <= 4096; ++n) brute += (n - 1) * std::abs(big.b(n));
  CHECK(brute <= bound);
  CHECK(bound < 1e-30);  // geometric decay leaves nothing by order 128

  const double loose = family_tail_bound_u(FamilyParams(0.95, 0.9), 128);
  const DiskFunction big2 = family_combination(FamilyParams(0.95, 0.9), 8192);
  double brute2 = 0.0;
  for (int n = 129; n <= 8192; ++n) brute2 += (n - 1) * std::abs(big2.b(n));
  CHECK(brute2 <= loose);
  CHECK(loose < 1.0);  // still certifiable territory at this order
}

}  // TEST_SUITE
