#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace cuspiso {

inline constexpr double kPi = 3.14159265358979323846;

// Roundoff margin for inverse-trig arguments. Values within this distance of
// the domain boundary are clamped; larger excursions are domain errors.
inline constexpr double kBoundaryClamp = 1e-12;

inline double clamp_abs_one(double u, const char* what) {
    if (u > 1.0) {
        if (u - 1.0 > kBoundaryClamp)
            throw std::domain_error(std::string(what) + ": argument " +
                                    std::to_string(u) + " outside [-1, 1]");
        return 1.0;
    }
    if (u < -1.0) {
        if (-1.0 - u > kBoundaryClamp)
            throw std::domain_error(std::string(what) + ": argument " +
                                    std::to_string(u) + " outside [-1, 1]");
        return -1.0;
    }
    return u;
}

inline double safe_acos(double u, const char* what) { return std::acos(clamp_abs_one(u, what)); }
inline double safe_asin(double u, const char* what) { return std::asin(clamp_abs_one(u, what)); }

inline double safe_acosh(double u, const char* what) {
    if (u < 1.0) {
        if (1.0 - u > kBoundaryClamp)
            throw std::domain_error(std::string(what) + ": argument " +
                                    std::to_string(u) + " below 1");
        return 0.0;
    }
    return std::acosh(u);
}

}  // namespace cuspiso
