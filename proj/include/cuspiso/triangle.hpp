#pragma once

namespace cuspiso {

struct TriangleAngles {
    double alpha;
    double beta;
    double gamma;

    double sum() const { return alpha + beta + gamma; }
};

/// A compact hyperbolic triangle given by its three side lengths.
struct FiniteTriangle {
    double a;
    double b;
    double c;

    FiniteTriangle(double a_, double b_, double c_);
};

/// Angles opposite to sides a, b, c via the hyperbolic law of cosines,
/// e.g. cos(gamma) = (cosh a cosh b - cosh c) / (sinh a sinh b).
TriangleAngles angles_of(const FiniteTriangle& t);

/// Angles of the triangle with base `base` and apex sliding so the two
/// remaining sides have fixed sum `side_sum`; `x` is the side adjacent to the
/// base angle alpha. Domain: (side_sum - base)/2 < x < (side_sum + base)/2.
TriangleAngles sliding_apex_angles(double base, double side_sum, double x);

/// d/dx of the angle sum of sliding_apex_angles, in closed form.
double sliding_apex_angle_sum_derivative(double base, double side_sum, double x);

/// Angle sum of the isosceles member (x = side_sum/2) of the sliding-apex
/// family, in closed form; decreasing in side_sum.
double sliding_apex_isosceles_angle_sum(double base, double side_sum);

/// A hyperbolic triangle with one ideal vertex: finite side of length l and
/// base angles theta, phi at its endpoints. The three values are tied by
///   cosh(l) sin(theta) sin(phi) = 1 + cos(theta) cos(phi),
/// equivalently tan(theta/2) tan(phi/2) = exp(-l).
struct CuspTriangle {
    double l;
    double theta;
    double phi;

    CuspTriangle(double l_, double theta_, double phi_);

    /// Derive phi from (l, theta) in closed form.
    static CuspTriangle from_side_and_angle(double l, double theta);
};

/// Angle-defect area pi - theta - phi.
double area(const CuspTriangle& t);

/// Second base angle phi of the ideal-vertex triangle with finite side l and
/// first base angle theta: phi = 2 atan(exp(-l) cot(theta/2)).
double derived_base_angle(double l, double theta);

/// Base angle of the symmetric (theta == phi) ideal-vertex triangle with
/// finite side l: asin(sech(l/2)) = asin(2 e^{l/2} / (1 + e^l)).
double symmetric_base_angle(double l);

/// Minimum of theta + phi over ideal-vertex triangles with finite side l,
/// attained at the symmetric one: 2 * symmetric_base_angle(l).
double min_base_angle_sum(double l);

/// Inverse of S = theta + phi at fixed l on the branch theta <= phi:
/// theta = S/2 - acos(cos(S/2) coth(l/2)). Requires min_base_angle_sum(l) <= S < pi.
double base_angle_for_sum(double l, double S);

/// Sum of the two finite angles of the triangle with vertices (0,a), (0,b)
/// and ideal vertex (x, 0), where 0 < a < b and x > 0. Case split on the
/// position of x relative to [a, b]; continuous across x = a and x = b.
double ideal_apex_angle_sum(double a, double b, double x);

/// The three case formulas individually (x > b, x < a, a <= x <= b); exposed
/// for boundary-continuity checks.
double ideal_apex_angle_sum_beyond(double a, double b, double x);
double ideal_apex_angle_sum_before(double a, double b, double x);
double ideal_apex_angle_sum_between(double a, double b, double x);

}  // namespace cuspiso
