#pragma once

#include <vector>

namespace cuspiso {

/// A point of the upper half-plane model {x + iy : y > 0}.
struct UhpPoint {
    double x;
    double y;

    UhpPoint(double x_, double y_);
};

/// Hyperbolic distance between two points.
double distance(const UhpPoint& p, const UhpPoint& q);

/// The full geodesic through two distinct points: either a vertical line or a
/// semicircle centered on the real axis.
struct Geodesic {
    bool vertical;
    double x0;      // vertical line abscissa (vertical only)
    double center;  // circle center on the real axis (circular only)
    double radius;  // circle radius (circular only)
};

Geodesic geodesic_through(const UhpPoint& p, const UhpPoint& q);

/// Polar angle in (-pi, pi] of the unit tangent at `at` pointing along the
/// geodesic toward `toward`. Euclidean angles coincide with hyperbolic ones
/// (the model is conformal).
double tangent_angle(const UhpPoint& at, const UhpPoint& toward);

/// Center and radius of the geodesic through the axis point (0, a) and the
/// boundary point (x, 0), a > 0, x > 0. Satisfies radius^2 - center^2 = a^2.
struct CircleData {
    double center;
    double radius;
};

CircleData axis_geodesic_circle(double a, double x);

/// Geodesic segment between two points, carrying its supporting geodesic.
struct GeodesicArc {
    UhpPoint a;
    UhpPoint b;
    Geodesic geo;

    GeodesicArc(const UhpPoint& a_, const UhpPoint& b_);
};

/// True when the two arcs meet at a point that is not a shared endpoint.
/// `allow_shared_endpoint` permits touching at coincident endpoints (used for
/// consecutive arcs of a chain). Tolerance 1e-12 on coordinates.
bool arcs_cross(const GeodesicArc& s, const GeodesicArc& t, bool allow_shared_endpoint);

}  // namespace cuspiso
