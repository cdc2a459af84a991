#include "cuspiso/triangle.hpp"

#include <cmath>
#include <stdexcept>

#include "cuspiso/math_util.hpp"

namespace cuspiso {

namespace {
constexpr double kMinLength = 1e-12;

void check_side(double s, const char* what) {
    if (!(s > kMinLength))
        throw std::invalid_argument(std::string(what) + ": side length must exceed 1e-12");
}
}  // namespace

FiniteTriangle::FiniteTriangle(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
    check_side(a, "FiniteTriangle");
    check_side(b, "FiniteTriangle");
    check_side(c, "FiniteTriangle");
    if (!(a < b + c && b < a + c && c < a + b))
        throw std::invalid_argument("FiniteTriangle: strict triangle inequality violated");
}

TriangleAngles angles_of(const FiniteTriangle& t) {
    auto angle = [](double u, double v, double w) {
        // angle opposite to w
        return safe_acos((std::cosh(u) * std::cosh(v) - std::cosh(w)) /
                             (std::sinh(u) * std::sinh(v)),
                         "angles_of");
    };
    return {angle(t.b, t.c, t.a), angle(t.a, t.c, t.b), angle(t.a, t.b, t.c)};
}

namespace {
void check_sliding_domain(double base, double side_sum, double x) {
    if (!(base > kMinLength) || !(side_sum > base))
        throw std::invalid_argument("sliding apex family: need side_sum > base > 0");
    if (!(x > (side_sum - base) / 2.0 && x < (side_sum + base) / 2.0))
        throw std::domain_error("sliding apex family: x outside the open admissible interval");
}
}  // namespace

TriangleAngles sliding_apex_angles(double base, double side_sum, double x) {
    check_sliding_domain(base, side_sum, x);
    const double c = base, y = side_sum - x;
    const double alpha =
        safe_acos((std::cosh(x) * std::cosh(c) - std::cosh(y)) / (std::sinh(x) * std::sinh(c)),
                  "sliding_apex_angles");
    const double beta =
        safe_acos((std::cosh(y) * std::cosh(c) - std::cosh(x)) / (std::sinh(y) * std::sinh(c)),
                  "sliding_apex_angles");
    const double gamma =
        safe_acos((std::cosh(x) * std::cosh(y) - std::cosh(c)) / (std::sinh(x) * std::sinh(y)),
                  "sliding_apex_angles");
    return {alpha, beta, gamma};
}

double sliding_apex_angle_sum_derivative(double base, double side_sum, double x) {
    check_sliding_domain(base, side_sum, x);
    const double c = base, l = side_sum, y = l - x;
    const double k = std::cosh(l) - std::cosh(c);

    const double na = std::cosh(x) * std::cosh(c) - std::cosh(y);
    const double ra = std::sinh(x) * std::sinh(x) * std::sinh(c) * std::sinh(c) - na * na;
    const double d_alpha = -k / (std::sinh(x) * std::sqrt(ra));

    const double nb = std::cosh(y) * std::cosh(c) - std::cosh(x);
    const double rb = std::sinh(y) * std::sinh(y) * std::sinh(c) * std::sinh(c) - nb * nb;
    const double d_beta = k / (std::sinh(y) * std::sqrt(rb));

    const double ng = std::cosh(x) * std::cosh(y) - std::cosh(c);
    const double rg = std::sinh(x) * std::sinh(x) * std::sinh(y) * std::sinh(y) - ng * ng;
    const double d_gamma = std::sinh(l - 2.0 * x) * k / (std::sinh(x) * std::sinh(y) * std::sqrt(rg));

    return d_alpha + d_beta + d_gamma;
}

double sliding_apex_isosceles_angle_sum(double base, double side_sum) {
    if (!(base > kMinLength) || !(side_sum > base))
        throw std::domain_error("sliding apex midpoint: need side_sum > base > 0");
    const double h = side_sum / 2.0;
    const double coth_h = 1.0 / std::tanh(h);
    const double csch2_h = 1.0 / (std::sinh(h) * std::sinh(h));
    return 2.0 * safe_acos(coth_h * std::tanh(base / 2.0), "isosceles angle sum") +
           safe_acos(coth_h * coth_h - csch2_h * std::cosh(base), "isosceles angle sum");
}

CuspTriangle::CuspTriangle(double l_, double theta_, double phi_)
    : l(l_), theta(theta_), phi(phi_) {
    check_side(l, "CuspTriangle");
    if (!(theta > 0.0 && theta < kPi) || !(phi > 0.0 && phi < kPi))
        throw std::invalid_argument("CuspTriangle: base angles must lie in (0, pi)");
    if (!(theta + phi < kPi))
        throw std::invalid_argument("CuspTriangle: theta + phi must be below pi");
    const double lhs = std::cosh(l) * std::sin(theta) * std::sin(phi);
    const double rhs = 1.0 + std::cos(theta) * std::cos(phi);
    if (std::abs(lhs - rhs) > 1e-9 * std::max(1.0, std::abs(rhs)))
        throw std::invalid_argument("CuspTriangle: side/angle compatibility relation violated");
}

CuspTriangle CuspTriangle::from_side_and_angle(double l, double theta) {
    return CuspTriangle(l, theta, derived_base_angle(l, theta));
}

double area(const CuspTriangle& t) { return kPi - t.theta - t.phi; }

double derived_base_angle(double l, double theta) {
    check_side(l, "derived_base_angle");
    if (!(theta > 0.0 && theta < kPi))
        throw std::invalid_argument("derived_base_angle: theta must lie in (0, pi)");
    return 2.0 * std::atan(std::exp(-l) / std::tan(theta / 2.0));
}

double symmetric_base_angle(double l) {
    check_side(l, "symmetric_base_angle");
    return std::asin(1.0 / std::cosh(l / 2.0));
}

double min_base_angle_sum(double l) { return 2.0 * symmetric_base_angle(l); }

double base_angle_for_sum(double l, double S) {
    check_side(l, "base_angle_for_sum");
    if (!(S < kPi)) throw std::domain_error("base_angle_for_sum: S must be below pi");
    const double d = std::cos(S / 2.0) / std::tanh(l / 2.0);
    if (d > 1.0 + kBoundaryClamp)
        throw std::domain_error("base_angle_for_sum: S below the minimum angle sum for this side");
    return S / 2.0 - std::acos(std::min(d, 1.0));
}

namespace {
void check_ideal_apex(double a, double b, double x) {
    if (!(a > 0.0 && a < b)) throw std::invalid_argument("ideal apex: need 0 < a < b");
    if (!(x > 0.0)) throw std::domain_error("ideal apex: need x > 0");
}

double s_a(double a, double x) { return 2.0 * a * x / (x * x + a * a); }
}  // namespace

double ideal_apex_angle_sum_beyond(double a, double b, double x) {
    check_ideal_apex(a, b, x);
    return kPi / 2.0 + safe_asin(s_a(a, x), "ideal apex") + safe_acos(s_a(b, x), "ideal apex");
}

double ideal_apex_angle_sum_before(double a, double b, double x) {
    check_ideal_apex(a, b, x);
    return kPi / 2.0 + safe_acos(s_a(a, x), "ideal apex") + safe_asin(s_a(b, x), "ideal apex");
}

double ideal_apex_angle_sum_between(double a, double b, double x) {
    check_ideal_apex(a, b, x);
    return safe_asin(s_a(a, x), "ideal apex") + safe_asin(s_a(b, x), "ideal apex");
}

double ideal_apex_angle_sum(double a, double b, double x) {
    check_ideal_apex(a, b, x);
    if (x > b) return ideal_apex_angle_sum_beyond(a, b, x);
    if (x < a) return ideal_apex_angle_sum_before(a, b, x);
    return ideal_apex_angle_sum_between(a, b, x);
}

}  // namespace cuspiso
