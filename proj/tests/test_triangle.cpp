#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cuspiso/math_util.hpp"
#include "cuspiso/triangle.hpp"
#include "cuspiso/upper_half_plane.hpp"

using namespace cuspiso;

namespace {

double urand(std::mt19937_64& g, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(g() >> 11) * 0x1.0p-53);
}

// Unsigned angle between two tangent directions.
double angle_between(const UhpPoint& at, const UhpPoint& u, const UhpPoint& w) {
    return std::abs(std::remainder(tangent_angle(at, u) - tangent_angle(at, w), 2.0 * kPi));
}

// Realizes a triangle with side c on the imaginary axis and measures its
// angles from tangent vectors. Independent of the law-of-cosines kernel.
TriangleAngles angles_by_placement(double a, double b, double c) {
    const UhpPoint A(0.0, 1.0);
    const UhpPoint B(0.0, std::exp(c));
    const double E = std::exp(c);
    const double y = (1.0 - E * E) / (2.0 * (std::cosh(b) - E * std::cosh(a)));
    const double x = std::sqrt(2.0 * y * std::cosh(b) - 1.0 - y * y);
    const UhpPoint C(x, y);
    return {angle_between(A, B, C), angle_between(B, A, C), angle_between(C, A, B)};
}

}  // namespace

TEST_CASE("law of cosines on the equilateral triangle with cosh = 2") {
    const double s = std::acosh(2.0);
    const TriangleAngles ang = angles_of(FiniteTriangle(s, s, s));
    const double expected = std::acos(2.0 / 3.0);
    CHECK(ang.alpha == doctest::Approx(expected).epsilon(1e-14));
    CHECK(ang.beta == doctest::Approx(expected).epsilon(1e-14));
    CHECK(ang.gamma == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("equal sides give equal angles") {
    std::mt19937_64 g(11);
    for (int t = 0; t < 50; ++t) {
        const double s = urand(g, 0.2, 4.0);
        const TriangleAngles ang = angles_of(FiniteTriangle(s, s, s));
        CHECK(ang.alpha == doctest::Approx(ang.beta).epsilon(1e-14));
        CHECK(ang.beta == doctest::Approx(ang.gamma).epsilon(1e-14));
        CHECK(ang.sum() < kPi);
    }
}

TEST_CASE("angles match an explicit upper half-plane realization") {
    const TriangleAngles kernel = angles_of(FiniteTriangle(1.0, 1.0, 1.9));
    const TriangleAngles placed = angles_by_placement(1.0, 1.0, 1.9);
    CHECK(kernel.alpha == doctest::Approx(placed.alpha).epsilon(1e-9));
    CHECK(kernel.beta == doctest::Approx(placed.beta).epsilon(1e-9));
    CHECK(kernel.gamma == doctest::Approx(placed.gamma).epsilon(1e-9));

    std::mt19937_64 g(12);
    for (int t = 0; t < 25; ++t) {
        const double a = urand(g, 0.3, 2.5);
        const double b = urand(g, 0.3, 2.5);
        const double lo = std::abs(a - b) + 1e-3, hi = a + b - 1e-3;
        if (lo >= hi) continue;
        const double c = urand(g, lo, hi);
        const TriangleAngles k = angles_of(FiniteTriangle(a, b, c));
        const TriangleAngles p = angles_by_placement(a, b, c);
        CHECK(k.alpha == doctest::Approx(p.alpha).epsilon(1e-8));
        CHECK(k.beta == doctest::Approx(p.beta).epsilon(1e-8));
        CHECK(k.gamma == doctest::Approx(p.gamma).epsilon(1e-8));
    }
}

TEST_CASE("degenerate side triples are rejected") {
    CHECK_THROWS_AS(FiniteTriangle(1.0, 1.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(FiniteTriangle(1.0, 1.0, 2.5), std::invalid_argument);
    CHECK_THROWS_AS(FiniteTriangle(0.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(FiniteTriangle(1e-13, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("inverse trig boundary clamp accepts roundoff, rejects violations") {
    CHECK(safe_acos(1.0 + 5e-13, "test") == 0.0);
    CHECK(safe_acos(-1.0 - 5e-13, "test") == doctest::Approx(kPi));
    CHECK_THROWS_AS(safe_acos(1.0 + 5e-12, "test"), std::domain_error);
    CHECK(safe_acosh(1.0 - 5e-13, "test") == 0.0);
    CHECK_THROWS_AS(safe_acosh(1.0 - 5e-12, "test"), std::domain_error);
}

TEST_CASE("sliding apex family: symmetry, cross-check, degenerate limit") {
    const double c = 1.0, l = 3.0;

    const TriangleAngles mid = sliding_apex_angles(c, l, 1.5);
    CHECK(mid.alpha == doctest::Approx(mid.beta).epsilon(1e-14));

    const TriangleAngles at = sliding_apex_angles(c, l, 1.2);
    const TriangleAngles ref = angles_of(FiniteTriangle(l - 1.2, 1.2, c));
    CHECK(at.alpha == doctest::Approx(ref.alpha).epsilon(1e-12));
    CHECK(at.beta == doctest::Approx(ref.beta).epsilon(1e-12));
    CHECK(at.gamma == doctest::Approx(ref.gamma).epsilon(1e-12));

    // flat limit: at x = (l-c)/2 the sides satisfy x + c = l - x, so the
    // angle between them opens to pi
    const double lo = (l - c) / 2.0;
    CHECK(sliding_apex_angles(c, l, lo + 1e-9).alpha > kPi - 1e-3);
    CHECK(sliding_apex_angles(c, l, lo + 1e-9).gamma < 1e-3);

    CHECK_THROWS_AS(sliding_apex_angles(c, l, lo), std::domain_error);
    CHECK_THROWS_AS(sliding_apex_angles(c, l, (l + c) / 2.0), std::domain_error);
}

TEST_CASE("angle-sum derivative: zero at midpoint, signs, finite differences") {
    const double c = 1.0, l = 3.0;
    CHECK(std::abs(sliding_apex_angle_sum_derivative(c, l, 1.5)) < 1e-9);
    CHECK(sliding_apex_angle_sum_derivative(c, l, 1.7) > 0.0);
    CHECK(sliding_apex_angle_sum_derivative(c, l, 1.3) < 0.0);

    const double h = 1e-6;
    std::mt19937_64 g(13);
    for (int t = 0; t < 50; ++t) {
        const double cc = urand(g, 0.1, 2.5);
        const double ll = cc + urand(g, 0.5, 5.0);
        const double lo = (ll - cc) / 2.0, hi = (ll + cc) / 2.0;
        const double x = lo + (hi - lo) * urand(g, 0.1, 0.9);
        const double fd = (sliding_apex_angles(cc, ll, x + h).sum() -
                           sliding_apex_angles(cc, ll, x - h).sum()) /
                          (2.0 * h);
        CHECK(std::abs(sliding_apex_angle_sum_derivative(cc, ll, x) - fd) <= 1e-5);
    }
}

TEST_CASE("midpoint is the unique angle-sum minimizer on a 2000-point grid") {
    std::mt19937_64 g(14);
    for (int t = 0; t < 20; ++t) {
        const double c = urand(g, 0.1, 2.5);
        const double l = c + urand(g, 0.5, 5.0);
        const double lo = (l - c) / 2.0, hi = (l + c) / 2.0;
        const long n = 2000;
        const double step = (hi - lo) / static_cast<double>(n);
        long best = -1;
        double best_v = 1e300;
        for (long k = 0; k < n; ++k) {
            const double x = lo + (static_cast<double>(k) + 0.5) * step;
            const double v = sliding_apex_angles(c, l, x).sum();
            if (v < best_v) {
                best_v = v;
                best = k;
            }
        }
        const double argmin = lo + (static_cast<double>(best) + 0.5) * step;
        CHECK(std::abs(argmin - l / 2.0) <= step);
    }
}

TEST_CASE("closed-form isosceles angle sum matches direct evaluation and decreases") {
    CHECK(sliding_apex_isosceles_angle_sum(1.0, 3.0) ==
          doctest::Approx(sliding_apex_angles(1.0, 3.0, 1.5).sum()).epsilon(1e-12));

    std::mt19937_64 g(15);
    for (int t = 0; t < 30; ++t) {
        const double c = urand(g, 0.1, 2.0);
        const double l = c + urand(g, 0.3, 6.0);
        CHECK(std::abs(sliding_apex_isosceles_angle_sum(c, l) -
                       sliding_apex_angles(c, l, l / 2.0).sum()) <= 1e-10);
    }

    double prev = sliding_apex_isosceles_angle_sum(1.0, 2.0);
    for (double l : {3.0, 4.0, 5.0}) {
        const double cur = sliding_apex_isosceles_angle_sum(1.0, l);
        CHECK(cur < prev);
        prev = cur;
    }

    // side_sum -> base gives a flattening triangle
    CHECK(sliding_apex_isosceles_angle_sum(1.0, 1.0 + 1e-6) > kPi - 1e-2);
    CHECK_THROWS_AS(sliding_apex_isosceles_angle_sum(1.0, 0.9), std::domain_error);
}

TEST_CASE("cusp triangle: compatibility relation and derived angle") {
    std::mt19937_64 g(16);
    for (int t = 0; t < 50; ++t) {
        const double l = urand(g, 0.05, 8.0);
        const double theta = urand(g, 0.05, kPi - 0.05);
        const CuspTriangle ct = CuspTriangle::from_side_and_angle(l, theta);
        const double lhs = std::cosh(l) * std::sin(ct.theta) * std::sin(ct.phi);
        const double rhs = 1.0 + std::cos(ct.theta) * std::cos(ct.phi);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        CHECK(ct.theta + ct.phi < kPi);
        CHECK(area(ct) > 0.0);
    }
    CHECK_THROWS_AS(CuspTriangle(1.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(CuspTriangle(1.0, 2.0, 2.0), std::invalid_argument);
}

TEST_CASE("symmetric base angle reproduces the exponential form exactly") {
    for (double l = 0.05; l < 20.0; l += 0.37) {
        const double lhs = symmetric_base_angle(l);
        const double rhs = std::asin(2.0 * std::exp(l / 2.0) / (1.0 + std::exp(l)));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        const double sym = symmetric_base_angle(l);
        CHECK(derived_base_angle(l, sym) == doctest::Approx(sym).epsilon(1e-11));
    }
}

TEST_CASE("cusp triangle areas: right-angle case and ideal limit") {
    const double l0 = 2.0 * std::log(std::sqrt(2.0) + 1.0);
    CHECK(symmetric_base_angle(l0) == doctest::Approx(kPi / 4.0).epsilon(1e-14));
    const CuspTriangle right = CuspTriangle::from_side_and_angle(l0, kPi / 4.0);
    CHECK(area(right) == doctest::Approx(kPi / 2.0).epsilon(1e-13));

    // tiny base angles force a long side and near-ideal area
    const double eps = 1e-4;
    const double s = std::sin(eps);
    const double l = 2.0 * std::log((1.0 + std::sqrt(1.0 - s * s)) / s);
    const CuspTriangle thin(l, eps, derived_base_angle(l, eps));
    CHECK(area(thin) > kPi - 1e-3);
}

TEST_CASE("symmetric-family area grows with the side length") {
    double prev = 0.0;
    for (double l = 0.1; l < 12.0; l += 0.1) {
        const double a = kPi - 2.0 * symmetric_base_angle(l);
        CHECK(a > prev);
        prev = a;
    }
}

TEST_CASE("angle-sum inversion at fixed side is exact on both branches") {
    std::mt19937_64 g(17);
    for (int t = 0; t < 50; ++t) {
        const double l = urand(g, 0.1, 10.0);
        const double smin = min_base_angle_sum(l);
        const double S = smin + (kPi - smin) * urand(g, 1e-3, 0.999);
        const double theta = base_angle_for_sum(l, S);
        CHECK(theta > 0.0);
        CHECK(theta + derived_base_angle(l, theta) == doctest::Approx(S).epsilon(1e-10));
    }
    CHECK_THROWS_AS(base_angle_for_sum(1.0, min_base_angle_sum(1.0) - 1e-3), std::domain_error);
}

TEST_CASE("ideal apex angle sum: frozen value, case continuity, grid minimum") {
    // 2 asin(4/5) at the symmetric point of a = 1, b = 4
    CHECK(ideal_apex_angle_sum(1.0, 4.0, 2.0) ==
          doctest::Approx(1.8545904360032246).epsilon(1e-14));

    const double corner = kPi / 2.0 + std::asin(8.0 / 17.0);
    CHECK(ideal_apex_angle_sum(1.0, 4.0, 1.0) == doctest::Approx(corner).epsilon(1e-13));
    CHECK(ideal_apex_angle_sum(1.0, 4.0, 4.0) == doctest::Approx(corner).epsilon(1e-13));
    CHECK(std::abs(ideal_apex_angle_sum_before(1.0, 4.0, 1.0) -
                   ideal_apex_angle_sum_between(1.0, 4.0, 1.0)) < 1e-10);
    CHECK(std::abs(ideal_apex_angle_sum_beyond(1.0, 4.0, 4.0) -
                   ideal_apex_angle_sum_between(1.0, 4.0, 4.0)) < 1e-10);

    // coarse grid minimum near sqrt(ab)
    double best_x = 0.0, best_v = 1e300;
    for (double x = 0.05; x <= 20.0; x += 0.001) {
        const double v = ideal_apex_angle_sum(1.0, 4.0, x);
        if (v < best_v) {
            best_v = v;
            best_x = x;
        }
    }
    CHECK(std::abs(best_x - 2.0) <= 0.001 + 1e-12);

    CHECK_THROWS_AS(ideal_apex_angle_sum(2.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ideal_apex_angle_sum(1.0, 4.0, 0.0), std::domain_error);
}

TEST_CASE("ideal apex angle sum: derivative sign matches the rational form") {
    std::mt19937_64 g(18);
    const double h = 1e-7;
    for (int t = 0; t < 20; ++t) {
        const double a = std::exp(urand(g, std::log(0.2), std::log(2.0)));
        const double b = a * std::exp(urand(g, 0.3, 2.0));
        const double root = std::sqrt(a * b);
        for (double x = a / 2.0; x <= 2.0 * b; x *= 1.18) {
            if (std::abs(x - root) < 0.01 * root) continue;
            if (std::abs(x - a) < 2.0 * h || std::abs(x - b) < 2.0 * h) continue;
            const double fd =
                (ideal_apex_angle_sum(a, b, x + h) - ideal_apex_angle_sum(a, b, x - h)) /
                (2.0 * h);
            const double sign = 2.0 * (x * x - a * b) * (b - a) /
                                ((a * a + x * x) * (b * b + x * x));
            CHECK(fd * sign > 0.0);
        }
    }
}

TEST_CASE("geodesic circle through an axis point and a boundary point") {
    const CircleData unit = axis_geodesic_circle(1.0, 1.0);
    CHECK(unit.center == doctest::Approx(0.0));
    CHECK(unit.radius == doctest::Approx(1.0));

    const CircleData c13 = axis_geodesic_circle(1.0, 3.0);
    CHECK(c13.center == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(c13.radius == doctest::Approx(5.0 / 3.0).epsilon(1e-15));

    std::mt19937_64 g(19);
    for (int t = 0; t < 50; ++t) {
        const double a = urand(g, 0.1, 5.0);
        const double x = urand(g, 0.1, 8.0);
        const CircleData cd = axis_geodesic_circle(a, x);
        CHECK(cd.radius * cd.radius - cd.center * cd.center ==
              doctest::Approx(a * a).epsilon(1e-12));
    }
}
