#include "cuspiso/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cuspiso {

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& fn,
                             std::vector<double> x0, const NelderMeadOptions& opt) {
    const std::size_t n = x0.size();
    if (n == 0) throw std::invalid_argument("nelder_mead: empty start point");

    // Adaptive coefficients (Gao & Han) help in higher dimensions.
    const double nd = static_cast<double>(n);
    const double refl = 1.0;
    const double expa = 1.0 + 2.0 / nd;
    const double contr = 0.75 - 0.5 / nd;
    const double shrink = 1.0 - 1.0 / nd;

    std::vector<std::vector<double>> xs(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) {
        double step = opt.init_step * std::max(1.0, std::abs(x0[i]));
        xs[i + 1][i] += step;
    }

    int evals = 0;
    std::vector<double> fs(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        fs[i] = fn(xs[i]);
        ++evals;
    }

    std::vector<std::size_t> order(n + 1);
    auto sort_simplex = [&]() {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
    };

    std::vector<double> centroid(n), xr(n), xe(n), xc(n);
    while (evals < opt.max_evals) {
        sort_simplex();
        const std::size_t best = order[0], worst = order[n], second = order[n - 1];

        double diam = 0.0;
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                diam = std::max(diam, std::abs(xs[order[i]][j] - xs[best][j]));
        if (diam <= opt.x_tol && std::abs(fs[worst] - fs[best]) <= opt.f_tol) break;

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t j = 0; j < n; ++j) centroid[j] += xs[i][j];
        }
        for (std::size_t j = 0; j < n; ++j) centroid[j] /= nd;

        for (std::size_t j = 0; j < n; ++j) xr[j] = centroid[j] + refl * (centroid[j] - xs[worst][j]);
        const double fr = fn(xr);
        ++evals;

        if (fr < fs[best]) {
            for (std::size_t j = 0; j < n; ++j) xe[j] = centroid[j] + expa * (xr[j] - centroid[j]);
            const double fe = fn(xe);
            ++evals;
            if (fe < fr) {
                xs[worst] = xe;
                fs[worst] = fe;
            } else {
                xs[worst] = xr;
                fs[worst] = fr;
            }
            continue;
        }
        if (fr < fs[second]) {
            xs[worst] = xr;
            fs[worst] = fr;
            continue;
        }
        const bool outside = fr < fs[worst];
        const std::vector<double>& base = outside ? xr : xs[worst];
        for (std::size_t j = 0; j < n; ++j) xc[j] = centroid[j] + contr * (base[j] - centroid[j]);
        const double fc = fn(xc);
        ++evals;
        if (fc < (outside ? fr : fs[worst])) {
            xs[worst] = xc;
            fs[worst] = fc;
            continue;
        }
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == best) continue;
            for (std::size_t j = 0; j < n; ++j)
                xs[i][j] = xs[best][j] + shrink * (xs[i][j] - xs[best][j]);
            fs[i] = fn(xs[i]);
            ++evals;
        }
    }

    sort_simplex();
    return {xs[order[0]], fs[order[0]], evals};
}

}  // namespace cuspiso
