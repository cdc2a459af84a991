#pragma once

#include <functional>
#include <vector>

namespace cuspiso {

struct NelderMeadOptions {
    int max_evals = 20000;
    double x_tol = 1e-12;   // simplex diameter stop
    double f_tol = 1e-14;   // value spread stop
    double init_step = 0.5; // initial simplex edge, per coordinate
};

struct NelderMeadResult {
    std::vector<double> x;
    double f = 0.0;
    int evals = 0;
};

/// Downhill simplex minimization with adaptive (dimension-dependent)
/// reflection/expansion/contraction coefficients. Deterministic.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& fn,
                             std::vector<double> x0, const NelderMeadOptions& opt = {});

}  // namespace cuspiso
