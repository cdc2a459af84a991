#include "cuspiso/upper_half_plane.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cuspiso/math_util.hpp"

namespace cuspiso {

namespace {
constexpr double kTol = 1e-12;

bool close(const UhpPoint& p, const UhpPoint& q) {
    return std::abs(p.x - q.x) <= kTol && std::abs(p.y - q.y) <= kTol;
}
}  // namespace

UhpPoint::UhpPoint(double x_, double y_) : x(x_), y(y_) {
    if (!(y > 0.0)) throw std::invalid_argument("UhpPoint: y must be positive");
}

double distance(const UhpPoint& p, const UhpPoint& q) {
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    return safe_acosh(1.0 + (dx * dx + dy * dy) / (2.0 * p.y * q.y), "distance");
}

Geodesic geodesic_through(const UhpPoint& p, const UhpPoint& q) {
    Geodesic g{};
    if (std::abs(p.x - q.x) <= kTol) {
        g.vertical = true;
        g.x0 = 0.5 * (p.x + q.x);
        return g;
    }
    g.vertical = false;
    g.center = (p.x * p.x + p.y * p.y - q.x * q.x - q.y * q.y) / (2.0 * (p.x - q.x));
    g.radius = std::hypot(p.x - g.center, p.y);
    return g;
}

double tangent_angle(const UhpPoint& at, const UhpPoint& toward) {
    const Geodesic g = geodesic_through(at, toward);
    if (g.vertical) return toward.y > at.y ? kPi / 2.0 : -kPi / 2.0;
    // Tangent is perpendicular to the radial direction; pick the branch that
    // heads toward the other endpoint.
    double tx = at.y;
    double ty = g.center - at.x;
    if (toward.x < at.x) {
        tx = -tx;
        ty = -ty;
    }
    return std::atan2(ty, tx);
}

CircleData axis_geodesic_circle(double a, double x) {
    if (!(a > 0.0) || !(x > 0.0))
        throw std::invalid_argument("axis_geodesic_circle: a and x must be positive");
    return {(x * x - a * a) / (2.0 * x), (x * x + a * a) / (2.0 * x)};
}

GeodesicArc::GeodesicArc(const UhpPoint& a_, const UhpPoint& b_)
    : a(a_), b(b_), geo(geodesic_through(a_, b_)) {}

namespace {

// Is the point p (on the supporting geodesic of s) inside the arc, endpoints
// excluded up to tolerance?
bool strictly_inside(const GeodesicArc& s, const UhpPoint& p) {
    if (close(p, s.a) || close(p, s.b)) return false;
    if (s.geo.vertical) {
        const double lo = std::min(s.a.y, s.b.y);
        const double hi = std::max(s.a.y, s.b.y);
        return p.y > lo + kTol && p.y < hi - kTol;
    }
    const double ta = std::atan2(s.a.y, s.a.x - s.geo.center);
    const double tb = std::atan2(s.b.y, s.b.x - s.geo.center);
    const double tp = std::atan2(p.y, p.x - s.geo.center);
    const double lo = std::min(ta, tb);
    const double hi = std::max(ta, tb);
    return tp > lo + kTol / s.geo.radius && tp < hi - kTol / s.geo.radius;
}

bool same_geodesic(const Geodesic& g, const Geodesic& h) {
    if (g.vertical != h.vertical) return false;
    if (g.vertical) return std::abs(g.x0 - h.x0) <= kTol;
    return std::abs(g.center - h.center) <= kTol && std::abs(g.radius - h.radius) <= kTol;
}

// Overlap test for two arcs on a common supporting geodesic.
bool collinear_overlap(const GeodesicArc& s, const GeodesicArc& t, bool allow_shared_endpoint) {
    auto param = [](const GeodesicArc& arc, const UhpPoint& p) {
        return arc.geo.vertical ? p.y : std::atan2(p.y, p.x - arc.geo.center);
    };
    double s0 = param(s, s.a), s1 = param(s, s.b);
    double t0 = param(s, t.a), t1 = param(s, t.b);
    if (s0 > s1) std::swap(s0, s1);
    if (t0 > t1) std::swap(t0, t1);
    const double eps = s.geo.vertical ? kTol : kTol / s.geo.radius;
    const double lo = std::max(s0, t0);
    const double hi = std::min(s1, t1);
    if (hi < lo - eps) return false;          // disjoint
    if (hi - lo <= eps) {                     // touching at one point
        return !allow_shared_endpoint;
    }
    return true;                              // genuine overlap
}

}  // namespace

bool arcs_cross(const GeodesicArc& s, const GeodesicArc& t, bool allow_shared_endpoint) {
    if (same_geodesic(s.geo, t.geo)) return collinear_overlap(s, t, allow_shared_endpoint);

    // Intersection point of the supporting geodesics in the open half-plane,
    // if any. Two distinct geodesics meet in at most one such point.
    double px, py2;
    if (s.geo.vertical && t.geo.vertical) return false;
    if (s.geo.vertical || t.geo.vertical) {
        const Geodesic& v = s.geo.vertical ? s.geo : t.geo;
        const Geodesic& c = s.geo.vertical ? t.geo : s.geo;
        px = v.x0;
        py2 = c.radius * c.radius - (px - c.center) * (px - c.center);
    } else {
        const double c1 = s.geo.center, r1 = s.geo.radius;
        const double c2 = t.geo.center, r2 = t.geo.radius;
        if (std::abs(c1 - c2) <= kTol) return false;  // concentric, no UHP crossing
        px = (r1 * r1 - r2 * r2 + c2 * c2 - c1 * c1) / (2.0 * (c2 - c1));
        py2 = r1 * r1 - (px - c1) * (px - c1);
    }
    if (py2 <= kTol * kTol) return false;
    const UhpPoint p(px, std::sqrt(py2));

    const bool in_s = strictly_inside(s, p);
    const bool in_t = strictly_inside(t, p);
    if (in_s && in_t) return true;
    if (!in_s && !in_t) {
        // Possibly an endpoint-endpoint touch.
        const bool touches_s = close(p, s.a) || close(p, s.b);
        const bool touches_t = close(p, t.a) || close(p, t.b);
        if (touches_s && touches_t) return !allow_shared_endpoint;
        return false;
    }
    // Endpoint of one arc in the interior of the other: a T-crossing.
    const bool touches_other = in_s ? (close(p, t.a) || close(p, t.b))
                                    : (close(p, s.a) || close(p, s.b));
    return touches_other;
}

}  // namespace cuspiso
