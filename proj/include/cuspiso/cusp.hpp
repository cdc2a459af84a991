#pragma once

#include <vector>

#include "cuspiso/upper_half_plane.hpp"

namespace cuspiso {

/// A cusp neighborhood bounded by a piecewise-geodesic closed curve, stored
/// as one period of the boundary chain in the upper half-plane. The cusp
/// point sits at infinity; the chain closes through the parabolic z -> z + width.
/// Segment k joins vertices[k] to vertices[k+1], the last one to
/// vertices[0] + width.
///
/// Construction validates: at least 3 vertices, positive width, distinct
/// consecutive vertices, an embedded boundary chain (pairwise arc crossings
/// checked against all relevant width-translates), and interior angles in
/// (0, pi). Angles are measured on the cusp side, which lies to the left of
/// the direction of travel.
struct PolygonalCusp {
    std::vector<UhpPoint> vertices;
    double width;

    PolygonalCusp(std::vector<UhpPoint> vertices_, double width_);
};

/// Hyperbolic lengths of the boundary segments (last one uses the shifted
/// first vertex).
std::vector<double> side_lengths(const PolygonalCusp& c);

/// Interior angle at each vertex, from tangent directions of the two
/// incident arcs.
std::vector<double> interior_angles(const PolygonalCusp& c);

/// Angle-defect area: p*pi - sum of interior angles.
double area(const PolygonalCusp& c);

/// A regular polygonal cusp: p sides of common length l and common interior
/// angle theta, tied by theta = 2 asin(2 e^{l/2} / (1 + e^l)) = 2 asin(sech(l/2)).
struct RegularCusp {
    int p;
    double l;
    double theta;

    RegularCusp(int p_, double l_, double theta_);
};

RegularCusp regular_cusp_from_perimeter(int p, double perimeter);
RegularCusp regular_cusp_from_angle(int p, double theta);
RegularCusp regular_cusp_from_area(int p, double area);

double perimeter(const RegularCusp& rc);
double area(const RegularCusp& rc);

/// Explicit boundary chain: vertex k at (k * delta, 1) with delta = 2 sinh(l/2),
/// width p * delta. Side lengths are all l and interior angles all theta by
/// construction.
PolygonalCusp realize(const RegularCusp& rc);

}  // namespace cuspiso
