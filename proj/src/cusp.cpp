#include "cuspiso/cusp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cuspiso/math_util.hpp"
#include "cuspiso/triangle.hpp"

namespace cuspiso {

namespace {

UhpPoint shifted(const UhpPoint& p, double dx) { return UhpPoint(p.x + dx, p.y); }

std::vector<GeodesicArc> boundary_arcs(const std::vector<UhpPoint>& v, double width) {
    std::vector<GeodesicArc> arcs;
    arcs.reserve(v.size());
    for (std::size_t k = 0; k + 1 < v.size(); ++k) arcs.emplace_back(v[k], v[k + 1]);
    arcs.emplace_back(v.back(), shifted(v.front(), width));
    return arcs;
}

double arc_min_x(const GeodesicArc& a) { return std::min(a.a.x, a.b.x); }
double arc_max_x(const GeodesicArc& a) { return std::max(a.a.x, a.b.x); }

double wrap_angle(double t) {
    const double two_pi = 2.0 * kPi;
    t = std::fmod(t, two_pi);
    if (t < 0.0) t += two_pi;
    return t;
}

double vertex_angle(const UhpPoint& prev, const UhpPoint& at, const UhpPoint& next) {
    const double u = tangent_angle(at, prev);
    const double w = tangent_angle(at, next);
    return wrap_angle(u - w);
}

std::vector<double> angles_of_chain(const std::vector<UhpPoint>& v, double width) {
    const std::size_t p = v.size();
    std::vector<double> out(p);
    for (std::size_t k = 0; k < p; ++k) {
        const UhpPoint prev = k == 0 ? shifted(v[p - 1], -width) : v[k - 1];
        const UhpPoint next = k + 1 == p ? shifted(v[0], width) : v[k + 1];
        out[k] = vertex_angle(prev, v[k], next);
    }
    return out;
}

}  // namespace

PolygonalCusp::PolygonalCusp(std::vector<UhpPoint> vertices_, double width_)
    : vertices(std::move(vertices_)), width(width_) {
    const std::size_t p = vertices.size();
    if (p < 3) throw std::invalid_argument("PolygonalCusp: need at least 3 vertices");
    if (!(width > 0.0)) throw std::invalid_argument("PolygonalCusp: width must be positive");

    for (std::size_t k = 0; k < p; ++k) {
        const UhpPoint& a = vertices[k];
        const UhpPoint b = k + 1 == p ? shifted(vertices[0], width) : vertices[k + 1];
        if (std::abs(a.x - b.x) <= 1e-12 && std::abs(a.y - b.y) <= 1e-12)
            throw std::invalid_argument("PolygonalCusp: consecutive vertices coincide at index " +
                                        std::to_string(k));
    }

    // Embeddedness on the quotient cylinder: compare each arc against every
    // width-translate of every arc that can overlap it in x.
    const auto arcs = boundary_arcs(vertices, width);
    const long n = static_cast<long>(p);
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) {
            const double jmin = arc_min_x(arcs[j]), jmax = arc_max_x(arcs[j]);
            const long k_lo = static_cast<long>(
                std::floor((arc_min_x(arcs[i]) - jmax) / width)) - 1;
            for (long k = k_lo;; ++k) {
                const double dx = width * static_cast<double>(k);
                if (jmin + dx > arc_max_x(arcs[i]) + 1e-9) break;
                if (jmax + dx < arc_min_x(arcs[i]) - 1e-9) continue;
                const long m = j + k * n;
                if (m <= i) continue;  // each unordered pair once
                const bool consecutive = (m - i == 1) || (i - m == 1);
                GeodesicArc tj(shifted(arcs[j].a, dx), shifted(arcs[j].b, dx));
                if (arcs_cross(arcs[i], tj, consecutive))
                    throw std::invalid_argument(
                        "PolygonalCusp: boundary chain self-intersects (segments " +
                        std::to_string(i) + " and " + std::to_string(j) + " shifted by " +
                        std::to_string(k) + " periods)");
            }
        }
    }

    const auto angles = angles_of_chain(vertices, width);
    for (std::size_t k = 0; k < p; ++k) {
        if (!(angles[k] > 0.0 && angles[k] < kPi))
            throw std::invalid_argument("PolygonalCusp: interior angle at vertex " +
                                        std::to_string(k) + " outside (0, pi)");
    }
}

std::vector<double> side_lengths(const PolygonalCusp& c) {
    const std::size_t p = c.vertices.size();
    std::vector<double> out(p);
    for (std::size_t k = 0; k < p; ++k) {
        const UhpPoint b =
            k + 1 == p ? shifted(c.vertices[0], c.width) : c.vertices[k + 1];
        out[k] = distance(c.vertices[k], b);
    }
    return out;
}

std::vector<double> interior_angles(const PolygonalCusp& c) {
    return angles_of_chain(c.vertices, c.width);
}

double area(const PolygonalCusp& c) {
    double sum = 0.0;
    for (double t : interior_angles(c)) sum += t;
    return static_cast<double>(c.vertices.size()) * kPi - sum;
}

RegularCusp::RegularCusp(int p_, double l_, double theta_) : p(p_), l(l_), theta(theta_) {
    if (p < 3) throw std::invalid_argument("RegularCusp: need p >= 3");
    if (!(l > 0.0)) throw std::invalid_argument("RegularCusp: side length must be positive");
    if (!(theta > 0.0 && theta < kPi))
        throw std::invalid_argument("RegularCusp: interior angle must lie in (0, pi)");
    // theta = 2 asin(sech(l/2)), checked in the well-conditioned product form
    // sin(theta/2) cosh(l/2) = 1.
    if (std::abs(std::sin(theta / 2.0) * std::cosh(l / 2.0) - 1.0) > 1e-12)
        throw std::invalid_argument("RegularCusp: angle/side relation violated");
}

RegularCusp regular_cusp_from_perimeter(int p, double perimeter) {
    if (p < 3) throw std::invalid_argument("regular_cusp_from_perimeter: need p >= 3");
    if (!(perimeter > 0.0))
        throw std::invalid_argument("regular_cusp_from_perimeter: perimeter must be positive");
    const double l = perimeter / static_cast<double>(p);
    return RegularCusp(p, l, 2.0 * symmetric_base_angle(l));
}

RegularCusp regular_cusp_from_angle(int p, double theta) {
    if (p < 3) throw std::invalid_argument("regular_cusp_from_angle: need p >= 3");
    if (!(theta > 0.0 && theta < kPi))
        throw std::invalid_argument("regular_cusp_from_angle: theta must lie in (0, pi)");
    // Invert sin(theta/2) = sech(l/2) through logarithms:
    // l = 2 asech(s) = 2 ln((1 + sqrt(1 - s^2)) / s).
    const double s = std::sin(theta / 2.0);
    const double l = 2.0 * std::log((1.0 + std::sqrt((1.0 - s) * (1.0 + s))) / s);
    return RegularCusp(p, l, theta);
}

RegularCusp regular_cusp_from_area(int p, double a) {
    if (p < 3) throw std::invalid_argument("regular_cusp_from_area: need p >= 3");
    if (!(a > 0.0 && a < static_cast<double>(p) * kPi))
        throw std::invalid_argument("regular_cusp_from_area: area must lie in (0, p*pi)");
    return regular_cusp_from_angle(p, (static_cast<double>(p) * kPi - a) / static_cast<double>(p));
}

double perimeter(const RegularCusp& rc) { return static_cast<double>(rc.p) * rc.l; }

double area(const RegularCusp& rc) { return static_cast<double>(rc.p) * (kPi - rc.theta); }

PolygonalCusp realize(const RegularCusp& rc) {
    const double delta = 2.0 * std::sinh(rc.l / 2.0);
    std::vector<UhpPoint> vs;
    vs.reserve(static_cast<std::size_t>(rc.p));
    for (int k = 0; k < rc.p; ++k) vs.emplace_back(delta * static_cast<double>(k), 1.0);
    return PolygonalCusp(std::move(vs), delta * static_cast<double>(rc.p));
}

}  // namespace cuspiso
