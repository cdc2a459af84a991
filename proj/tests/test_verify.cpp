#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cuspiso/json_io.hpp"
#include "cuspiso/math_util.hpp"
#include "cuspiso/nelder_mead.hpp"
#include "cuspiso/triangle.hpp"
#include "cuspiso/verify.hpp"

using namespace cuspiso;

namespace {
const double kLog21 = std::log(std::sqrt(2.0) + 1.0);
}

TEST_CASE("nelder_mead minimizes a shifted quadratic") {
    auto fn = [](const std::vector<double>& x) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double d = x[i] - static_cast<double>(i + 1);
            s += (1.0 + static_cast<double>(i)) * d * d;
        }
        return s;
    };
    const NelderMeadResult res = nelder_mead(fn, {0.0, 0.0, 0.0, 0.0});
    CHECK(res.f < 1e-16);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(res.x[i] == doctest::Approx(static_cast<double>(i + 1)).epsilon(1e-7));
}

TEST_CASE("ideal-apex brute force finds sqrt(ab) within one grid step") {
    const OptimizationReport rep = scan_ideal_apex_minimum(1.0, 4.0, 100000);
    CHECK(rep.within_one_step);
    CHECK(std::abs(rep.optimizer_argument.at(0) - 2.0) < 1e-3);
    CHECK(rep.best_value >= rep.reference_value - 1e-9);
    CHECK(rep.trials == 100000);

    const OptimizationReport tight = scan_ideal_apex_minimum(1.0, 1.0 + 1e-6, 10000);
    CHECK(tight.within_one_step);
    CHECK(std::abs(tight.optimizer_argument.at(0) - 1.0) < 1e-2);

    CHECK_THROWS_AS(scan_ideal_apex_minimum(4.0, 1.0, 1000), std::invalid_argument);
    CHECK_THROWS_AS(scan_ideal_apex_minimum(1.0, 4.0, 50), std::invalid_argument);
}

TEST_CASE("max-area verification: extremal pair is sound and attained") {
    const OptimizationReport rep = verify_max_area(4, 8.0 * kLog21, 8, kDefaultSeed);
    CHECK(rep.reference_value == doctest::Approx(2.0 * kPi).epsilon(1e-12));
    CHECK(rep.sound);
    CHECK(rep.attained);
    CHECK(rep.trials == 108);
}

TEST_CASE("max-area verification matches the closed form at p=6, L=12") {
    const OptimizationReport rep = verify_max_area(6, 12.0, 8, kDefaultSeed);
    const double theta = 2.0 * symmetric_base_angle(2.0);
    CHECK(rep.best_value == doctest::Approx(6.0 * (kPi - theta)).epsilon(1e-5));
    CHECK(rep.sound);
    CHECK(rep.attained);
}

TEST_CASE("perturbed regular configuration descends back to the optimum") {
    const int p = 3;
    const double L = 3.0;
    const double l_reg = L / p;
    const double theta_reg = symmetric_base_angle(l_reg);

    std::vector<double> start;
    for (int i = 0; i < p; ++i) start.push_back(l_reg + (i == 0 ? 0.01 : -0.005));
    for (int i = 0; i < p; ++i) start.push_back(theta_reg + (i == 1 ? 0.01 : -0.01));

    NelderMeadOptions opt;
    opt.max_evals = 20000;
    opt.init_step = 0.02;
    const NelderMeadResult res = nelder_mead(neg_area_objective(p, L), start, opt);
    const std::vector<double> q = project_area_params(res.x, p, L);
    for (int i = 0; i < p; ++i) {
        CHECK(std::abs(q[static_cast<std::size_t>(i)] - l_reg) <= 1e-5);
        CHECK(std::abs(q[static_cast<std::size_t>(p + i)] - theta_reg) <= 1e-5);
    }
}

TEST_CASE("min-perimeter verification at the right-angled quadrilateral cusp") {
    const OptimizationReport rep = verify_min_perimeter(4, 2.0 * kPi, 8, kDefaultSeed);
    CHECK(rep.reference_value == doctest::Approx(8.0 * kLog21).epsilon(1e-12));
    CHECK(rep.sound);
    CHECK(rep.attained);
    // decoded optimizer argument: p sides then p angles, all near regular
    REQUIRE(rep.optimizer_argument.size() == 8);
    for (int i = 0; i < 4; ++i)
        CHECK(rep.optimizer_argument[static_cast<std::size_t>(i)] ==
              doctest::Approx(2.0 * kLog21).epsilon(1e-4));
}

TEST_CASE("min-perimeter sampling covers areas close to the p*pi ceiling") {
    // near the ceiling every triangle must carry almost its full capacity
    const OptimizationReport rep = verify_min_perimeter(4, 0.9 * 4.0 * kPi, 3, kDefaultSeed, 30);
    CHECK(rep.sound);
    CHECK(rep.trials == 33);
    CHECK(rep.best_value >= rep.reference_value - 1e-7);
}

TEST_CASE("verification reports are deterministic") {
    const OptimizationReport a = verify_max_area(4, 8.0 * kLog21, 4, 7);
    const OptimizationReport b = verify_max_area(4, 8.0 * kLog21, 4, 7);
    CHECK(dump_json(to_json(a, true)) == dump_json(to_json(b, true)));

    const OptimizationReport c = verify_min_perimeter(4, 2.0 * kPi, 4, 7);
    const OptimizationReport d = verify_min_perimeter(4, 2.0 * kPi, 4, 7);
    CHECK(dump_json(to_json(c, true)) == dump_json(to_json(d, true)));

    CHECK(a.seed == 7);
}

TEST_CASE("right-angled polygon perimeter: frozen values and growth") {
    CHECK(regular_right_polygon_perimeter(5) ==
          doctest::Approx(5.306375309525181).epsilon(1e-14));
    CHECK_THROWS_AS(regular_right_polygon_perimeter(4), std::invalid_argument);

    // f(x)/x increases toward 2 acosh(sqrt(2))
    const double limit = 2.0 * std::acosh(std::sqrt(2.0));
    double prev = 0.0;
    for (int n = 5; n <= 60; ++n) {
        const double ratio = regular_right_polygon_perimeter(n) / static_cast<double>(n);
        CHECK(ratio > prev);
        CHECK(ratio < limit);
        prev = ratio;
    }
    CHECK(right_polygon_perimeter_fn(1e5) / 1e5 == doctest::Approx(limit).epsilon(1e-8));

    // x = 4 is the limit point where the perimeter vanishes
    CHECK(right_polygon_perimeter_fn(4.0) == 0.0);
}

TEST_CASE("polygon-vs-cusp gap: limit value, growth, concavity") {
    CHECK(std::abs(polygon_vs_cusp_gap(4.0)) <= 1e-12);
    CHECK(polygon_vs_cusp_gap(5.0) ==
          doctest::Approx(regular_right_polygon_perimeter(5) - 2.0 * kLog21).epsilon(1e-14));

    const GapScanReport rep = verify_polygon_vs_cusp_gap(50.0, 0.01);
    CHECK(rep.gap_at_four_zero);
    CHECK(rep.strictly_increasing);
    CHECK(rep.positive);
    CHECK(rep.concave);
    CHECK(rep.second_derivative_matches_fd);
    CHECK(rep.all_ok);
    CHECK(rep.max_second_derivative_fd_error <= 1e-4);
}

TEST_CASE("perimeter comparison: frozen instances and strictness") {
    const PerimeterComparison c53 = perimeter_comparison(5, 3);
    CHECK(c53.m == 4);
    CHECK(c53.f_n1 == doctest::Approx(5.306375309525181).epsilon(1e-14));
    CHECK(c53.g_n2 == doctest::Approx(6.0 * kLog21).epsilon(1e-14));
    CHECK(c53.g_m == doctest::Approx(8.0 * kLog21).epsilon(1e-14));
    CHECK(c53.holds);
    CHECK(c53.h_value == doctest::Approx(polygon_vs_cusp_gap(5.0)).epsilon(1e-13));

    const PerimeterComparison c88 = perimeter_comparison(8, 8);
    CHECK(c88.m == 12);
    CHECK(c88.holds);
    CHECK(c88.f_n1 + c88.g_n2 - c88.g_m ==
          doctest::Approx(polygon_vs_cusp_gap(8.0)).epsilon(1e-12));

    CHECK_THROWS_AS(perimeter_comparison(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(perimeter_comparison(5, 2), std::invalid_argument);
}
