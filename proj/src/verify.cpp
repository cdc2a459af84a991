#include "cuspiso/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "cuspiso/math_util.hpp"
#include "cuspiso/nelder_mead.hpp"
#include "cuspiso/triangle.hpp"

namespace cuspiso {

namespace {

// Raw 64-bit driven uniforms keep runs reproducible across standard library
// implementations.
struct Rng {
    std::mt19937_64 gen;

    explicit Rng(std::uint64_t seed) : gen(seed) {}

    double u01() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }
    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }
};

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 step over seed ^ stream tag
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr double kThetaFloor = 1e-6;
constexpr double kSideFloor = 1e-6;
constexpr double kSideCeil = 100.0;

double triangle_area_of(double l, double theta) {
    return kPi - theta - 2.0 * std::atan(std::exp(-l) / std::tan(theta / 2.0));
}

double regular_reference_area(int p, double L) {
    const double l = L / static_cast<double>(p);
    return static_cast<double>(p) * (kPi - 2.0 * symmetric_base_angle(l));
}

double regular_reference_perimeter(int p, double A) {
    const double theta = (static_cast<double>(p) * kPi - A) / static_cast<double>(p);
    const double s = std::sin(theta / 2.0);
    const double l = 2.0 * std::log((1.0 + std::sqrt((1.0 - s) * (1.0 + s))) / s);
    return static_cast<double>(p) * l;
}

}  // namespace

std::vector<double> project_area_params(std::vector<double> raw, int p, double L) {
    double sum = 0.0;
    for (int i = 0; i < p; ++i) {
        raw[i] = std::clamp(std::abs(raw[i]), kSideFloor, kSideCeil);
        sum += raw[i];
    }
    const double scale = L / sum;
    for (int i = 0; i < p; ++i) raw[i] *= scale;
    for (int i = p; i < 2 * p; ++i) raw[i] = std::clamp(raw[i], kThetaFloor, kPi - kThetaFloor);
    return raw;
}

std::function<double(const std::vector<double>&)> neg_area_objective(int p, double L) {
    return [p, L](const std::vector<double>& raw) {
        const std::vector<double> q = project_area_params(raw, p, L);
        double a = 0.0;
        for (int i = 0; i < p; ++i) a += triangle_area_of(q[i], q[p + i]);
        return -a;
    };
}

OptimizationReport verify_max_area(int p, double L, int restarts, std::uint64_t seed,
                                   int random_trials, VerifyTolerances tol) {
    if (p < 3) throw std::invalid_argument("verify_max_area: need p >= 3");
    if (!(L > 0.0)) throw std::invalid_argument("verify_max_area: need L > 0");
    if (restarts < 1) throw std::invalid_argument("verify_max_area: need restarts >= 1");

    OptimizationReport rep;
    rep.claim = "max_area_regular";
    rep.seed = seed;
    rep.reference_value = regular_reference_area(p, L);

    const auto objective = neg_area_objective(p, L);
    const std::size_t dim = static_cast<std::size_t>(2 * p);

    double best = -1.0;
    std::vector<double> best_raw;

    // Random feasible configurations, soundness side.
    rep.random_values.reserve(static_cast<std::size_t>(random_trials));
    for (int t = 0; t < random_trials; ++t) {
        Rng rng(derive_seed(seed, 0x10000u + static_cast<std::uint64_t>(t)));
        std::vector<double> raw(dim);
        for (int i = 0; i < p; ++i) raw[static_cast<std::size_t>(i)] = rng.log_uniform(0.1, 5.0);
        for (int i = 0; i < p; ++i)
            raw[static_cast<std::size_t>(p + i)] = rng.uniform(0.05, kPi - 0.05);
        const double a = -objective(raw);
        rep.random_values.push_back(a);
        if (a > best) {
            best = a;
            best_raw = raw;
        }
    }

    // Simplex-descent restarts, attainment side.
    double best_restart = -1.0;
    rep.restart_values.reserve(static_cast<std::size_t>(restarts));
    for (int r = 0; r < restarts; ++r) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
        std::vector<double> start(dim);
        for (int i = 0; i < p; ++i) start[static_cast<std::size_t>(i)] = rng.log_uniform(0.1, 5.0);
        for (int i = 0; i < p; ++i)
            start[static_cast<std::size_t>(p + i)] = rng.uniform(0.3, kPi - 0.3);

        NelderMeadOptions opt;
        opt.max_evals = 4000 + 500 * p;
        opt.init_step = 0.25;
        NelderMeadResult res = nelder_mead(objective, start, opt);
        for (double polish_step : {0.02, 0.001}) {
            NelderMeadOptions popt;
            popt.max_evals = 2000 + 300 * p;
            popt.init_step = polish_step;
            NelderMeadResult pres = nelder_mead(objective, res.x, popt);
            if (pres.f < res.f) res = pres;
        }
        const double a = -res.f;
        rep.restart_values.push_back(a);
        best_restart = std::max(best_restart, a);
        if (a > best) {
            best = a;
            best_raw = res.x;
        }
    }

    rep.best_value = best;
    rep.optimizer_argument = project_area_params(best_raw, p, L);
    rep.gap = rep.reference_value - rep.best_value;
    rep.trials = random_trials + restarts;
    rep.sound = best <= rep.reference_value + tol.soundness;
    rep.attained = best_restart >= rep.reference_value - tol.attainment;
    return rep;
}

namespace {

// Raw layout for the fixed-area problem: (l_1..l_{p-1}, theta_1..theta_p).
// The last triangle absorbs the residual area: its base angle theta_p is a
// free parameter and its side comes out of the compatibility relation,
// l_p = -ln(tan(theta_p/2) tan(phi_p/2)) with phi_p = pi - theta_p - rest.
// This keeps the regular optimum in the interior of the feasible region.
struct PerimeterEval {
    double value = 0.0;   // objective (perimeter, possibly penalized)
    bool feasible = false;
    double perimeter = 0.0;
    double last_side = 0.0;
};

PerimeterEval eval_perimeter_params(const std::vector<double>& raw, int p, double A) {
    PerimeterEval out;
    double perim = 0.0;
    double used = 0.0;
    for (int i = 0; i + 1 < p; ++i) {
        const double l =
            std::clamp(std::abs(raw[static_cast<std::size_t>(i)]), kSideFloor, kSideCeil);
        const double theta =
            std::clamp(raw[static_cast<std::size_t>(p - 1 + i)], kThetaFloor, kPi - kThetaFloor);
        perim += l;
        used += triangle_area_of(l, theta);
    }
    const double theta_p =
        std::clamp(raw[static_cast<std::size_t>(2 * p - 2)], kThetaFloor, kPi - kThetaFloor);
    const double rest = A - used;
    const double margin = 1e-9;
    const double phi_p = kPi - theta_p - rest;
    if (rest > margin && phi_p > margin) {
        const double t = std::tan(theta_p / 2.0) * std::tan(phi_p / 2.0);
        const double l_p = -std::log(t);
        if (l_p > kSideFloor && l_p < kSideCeil) {
            out.feasible = true;
            out.last_side = l_p;
            out.perimeter = perim + l_p;
            out.value = out.perimeter;
            return out;
        }
    }
    const double violation = std::max(0.0, margin - rest) + std::max(0.0, margin - phi_p);
    out.value = perim + 50.0 + 10.0 * violation;
    return out;
}

// Random cusp of total area exactly A: headroom-weighted allocation over
// per-triangle area capacities, then each base angle recovered in closed form.
// Side lengths are capped (the angle-sum inversion loses precision beyond
// l ~ 14); for areas near p*pi the allocation falls back to a deterministic
// proportional fill.
std::vector<double> random_area_config(Rng& rng, int p, double A, double* perimeter_out) {
    constexpr double kSideCap = 14.0;
    std::vector<double> ls(static_cast<std::size_t>(p));
    for (auto& l : ls) l = rng.log_uniform(0.1, 5.0);
    auto caps_sum = [&]() {
        double s = 0.0;
        for (double l : ls) s += kPi - min_base_angle_sum(l);
        return s;
    };
    const double want = std::min(1.6 * A, static_cast<double>(p) *
                                              (kPi - min_base_angle_sum(kSideCap)) * 0.999);
    while (caps_sum() < std::max(want, A * 1.0001)) {
        bool all_capped = true;
        for (auto& l : ls) {
            l = std::min(l * 1.3, kSideCap);
            all_capped = all_capped && l >= kSideCap;
        }
        if (all_capped && caps_sum() <= A * 1.0001)
            throw std::runtime_error("random_area_config: area too close to p*pi for sampling");
    }

    std::vector<double> caps(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i)
        caps[static_cast<std::size_t>(i)] = kPi - min_base_angle_sum(ls[static_cast<std::size_t>(i)]);
    const double cap_total = caps_sum();

    std::vector<double> alloc(static_cast<std::size_t>(p));
    bool ok = false;
    for (int attempt = 0; attempt < 50 && !ok; ++attempt) {
        double total = 0.0;
        for (int i = 0; i < p; ++i) {
            alloc[static_cast<std::size_t>(i)] =
                caps[static_cast<std::size_t>(i)] * (1.0 + rng.uniform(-0.15, 0.15));
            total += alloc[static_cast<std::size_t>(i)];
        }
        ok = true;
        for (int i = 0; i < p && ok; ++i)
            ok = alloc[static_cast<std::size_t>(i)] * A / total <
                 caps[static_cast<std::size_t>(i)] * 0.99999;
        if (ok)
            for (auto& a : alloc) a *= A / total;
    }
    if (!ok) {
        // proportional fill is always feasible once cap_total > A
        for (int i = 0; i < p; ++i)
            alloc[static_cast<std::size_t>(i)] = caps[static_cast<std::size_t>(i)] * A / cap_total;
    }

    std::vector<double> config(static_cast<std::size_t>(2 * p));
    double perim = 0.0;
    for (int i = 0; i < p; ++i) {
        const double l = ls[static_cast<std::size_t>(i)];
        config[static_cast<std::size_t>(i)] = l;
        config[static_cast<std::size_t>(p + i)] =
            base_angle_for_sum(l, kPi - alloc[static_cast<std::size_t>(i)]);
        perim += l;
    }
    if (perimeter_out) *perimeter_out = perim;
    return config;
}

}  // namespace

OptimizationReport verify_min_perimeter(int p, double A, int restarts, std::uint64_t seed,
                                        int random_trials, VerifyTolerances tol) {
    if (p < 3) throw std::invalid_argument("verify_min_perimeter: need p >= 3");
    if (!(A > 0.0 && A < static_cast<double>(p) * kPi))
        throw std::invalid_argument("verify_min_perimeter: need 0 < A < p*pi");
    if (restarts < 1) throw std::invalid_argument("verify_min_perimeter: need restarts >= 1");

    OptimizationReport rep;
    rep.claim = "min_perimeter_regular";
    rep.seed = seed;
    rep.reference_value = regular_reference_perimeter(p, A);

    double best = std::numeric_limits<double>::infinity();
    std::vector<double> best_config;

    rep.random_values.reserve(static_cast<std::size_t>(random_trials));
    for (int t = 0; t < random_trials; ++t) {
        Rng rng(derive_seed(seed, 0x20000u + static_cast<std::uint64_t>(t)));
        double perim = 0.0;
        std::vector<double> config = random_area_config(rng, p, A, &perim);
        rep.random_values.push_back(perim);
        if (perim < best) {
            best = perim;
            best_config = config;
        }
    }

    const auto objective = [p, A](const std::vector<double>& raw) {
        return eval_perimeter_params(raw, p, A).value;
    };
    const std::size_t dim = static_cast<std::size_t>(2 * p - 1);

    double best_restart = std::numeric_limits<double>::infinity();
    rep.restart_values.reserve(static_cast<std::size_t>(restarts));
    for (int r = 0; r < restarts; ++r) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
        std::vector<double> start(dim);
        for (int i = 0; i + 1 < p; ++i)
            start[static_cast<std::size_t>(i)] = rng.log_uniform(0.5, 3.0);
        for (int i = 0; i < p; ++i)
            start[static_cast<std::size_t>(p - 1 + i)] = rng.uniform(0.3, kPi - 0.3);

        NelderMeadOptions opt;
        opt.max_evals = 4000 + 500 * p;
        opt.init_step = 0.25;
        NelderMeadResult res = nelder_mead(objective, start, opt);
        for (double polish_step : {0.02, 0.001}) {
            NelderMeadOptions popt;
            popt.max_evals = 2000 + 300 * p;
            popt.init_step = polish_step;
            NelderMeadResult pres = nelder_mead(objective, res.x, popt);
            if (pres.f < res.f) res = pres;
        }
        const PerimeterEval ev = eval_perimeter_params(res.x, p, A);
        if (!ev.feasible) {
            // an infeasible endpoint; record the penalized objective
            rep.restart_values.push_back(ev.value);
            continue;
        }
        rep.restart_values.push_back(ev.perimeter);
        best_restart = std::min(best_restart, ev.perimeter);
        if (ev.perimeter < best) {
            best = ev.perimeter;
            // Decode to the full (l_1..l_p, theta_1..theta_p) layout.
            best_config.clear();
            for (int i = 0; i + 1 < p; ++i)
                best_config.push_back(std::clamp(std::abs(res.x[static_cast<std::size_t>(i)]),
                                                 kSideFloor, kSideCeil));
            best_config.push_back(ev.last_side);
            for (int i = 0; i < p; ++i)
                best_config.push_back(std::clamp(res.x[static_cast<std::size_t>(p - 1 + i)],
                                                 kThetaFloor, kPi - kThetaFloor));
        }
    }

    rep.best_value = best;
    rep.optimizer_argument = best_config;
    rep.gap = rep.best_value - rep.reference_value;
    rep.trials = random_trials + restarts;
    rep.sound = best >= rep.reference_value - tol.soundness;
    rep.attained = best_restart <= rep.reference_value + tol.attainment;
    return rep;
}

OptimizationReport scan_ideal_apex_minimum(double a, double b, long grid_points) {
    if (!(a > 0.0 && a < b))
        throw std::invalid_argument("scan_ideal_apex_minimum: need 0 < a < b");
    if (grid_points < 100)
        throw std::invalid_argument("scan_ideal_apex_minimum: need at least 100 grid points");

    OptimizationReport rep;
    rep.claim = "ideal_apex_minimum";
    rep.trials = grid_points;
    rep.seed = 0;

    const double lo = std::log(a / 10.0);
    const double hi = std::log(10.0 * b);
    const double step = (hi - lo) / static_cast<double>(grid_points - 1);
    auto grid_x = [&](long k) { return std::exp(lo + step * static_cast<double>(k)); };

    long best_k = 0;
    double best_v = std::numeric_limits<double>::infinity();
    for (long k = 0; k < grid_points; ++k) {
        const double v = ideal_apex_angle_sum(a, b, grid_x(k));
        if (v < best_v) {
            best_v = v;
            best_k = k;
        }
    }

    const double root = std::sqrt(a * b);
    rep.best_value = best_v;
    rep.optimizer_argument = {grid_x(best_k)};
    rep.reference_argument = root;
    rep.reference_value = 2.0 * std::asin(2.0 * root / (a + b));
    rep.gap = std::abs(grid_x(best_k) - root);
    rep.argmin_lo = best_k > 0 ? grid_x(best_k - 1) : grid_x(0);
    rep.argmin_hi = best_k + 1 < grid_points ? grid_x(best_k + 1) : grid_x(best_k);
    rep.within_one_step = root >= rep.argmin_lo && root <= rep.argmin_hi;
    rep.sound = best_v >= rep.reference_value - 1e-9;
    rep.attained = rep.within_one_step;
    return rep;
}

double right_polygon_perimeter_fn(double x) {
    if (!(x >= 4.0))
        throw std::domain_error("right_polygon_perimeter_fn: defined for x >= 4");
    if (x == 4.0) return 0.0;  // closed-endpoint value, defined by the limit
    const double t = std::sqrt(2.0) * std::cos(kPi / x);
    return 2.0 * x * safe_acosh(t, "right_polygon_perimeter_fn");
}

double regular_right_polygon_perimeter(int n) {
    if (n < 5)
        throw std::invalid_argument("regular_right_polygon_perimeter: need n >= 5");
    return right_polygon_perimeter_fn(static_cast<double>(n));
}

double cusp_polygon_perimeter_fn(double x) {
    return 2.0 * x * std::log(std::sqrt(2.0) + 1.0);
}

double polygon_vs_cusp_gap(double x) {
    return right_polygon_perimeter_fn(x) - cusp_polygon_perimeter_fn(x - 4.0);
}

double polygon_vs_cusp_gap_second_derivative(double x) {
    if (!(x > 4.0))
        throw std::domain_error("polygon_vs_cusp_gap_second_derivative: defined for x > 4");
    const double c = std::cos(2.0 * kPi / x);
    return -2.0 * kPi * kPi * std::sqrt(2.0) * std::cos(kPi / x) /
           (x * x * x * std::sqrt(c * c * c));
}

GapScanReport verify_polygon_vs_cusp_gap(double x_max, double step) {
    if (!(x_max > 5.0)) throw std::invalid_argument("verify_polygon_vs_cusp_gap: need x_max > 5");
    if (!(step > 0.0)) throw std::invalid_argument("verify_polygon_vs_cusp_gap: need step > 0");

    GapScanReport rep;
    rep.x_max = x_max;
    rep.step = step;
    rep.gap_at_four = polygon_vs_cusp_gap(4.0);
    rep.gap_at_four_zero = std::abs(rep.gap_at_four) <= 1e-12;

    rep.strictly_increasing = true;
    rep.positive = true;
    rep.concave = true;
    double prev = rep.gap_at_four;
    const long count = static_cast<long>(std::floor((x_max - 4.0) / step + 1e-9));
    for (long k = 1; k <= count; ++k) {
        const double x = 4.0 + step * static_cast<double>(k);
        const double h = polygon_vs_cusp_gap(x);
        if (!(h > prev)) rep.strictly_increasing = false;
        if (!(h > 0.0)) rep.positive = false;
        if (!(polygon_vs_cusp_gap_second_derivative(x) < 0.0)) rep.concave = false;
        prev = h;
    }
    rep.grid_points = count;

    // h'' equals f''; compare against central second differences of f away
    // from the x = 4 blow-up.
    const double delta = 1e-4;
    double max_err = 0.0;
    const long fd_count = static_cast<long>(std::floor((x_max - 4.1) / 0.1 + 1e-9));
    for (long k = 0; k <= fd_count; ++k) {
        const double x = 4.1 + 0.1 * static_cast<double>(k);
        const double fd = (right_polygon_perimeter_fn(x + delta) -
                           2.0 * right_polygon_perimeter_fn(x) +
                           right_polygon_perimeter_fn(x - delta)) /
                          (delta * delta);
        max_err = std::max(max_err, std::abs(fd - polygon_vs_cusp_gap_second_derivative(x)));
    }
    rep.max_second_derivative_fd_error = max_err;
    rep.second_derivative_matches_fd = max_err <= 1e-4;

    rep.all_ok = rep.gap_at_four_zero && rep.strictly_increasing && rep.positive &&
                 rep.concave && rep.second_derivative_matches_fd;
    return rep;
}

PerimeterComparison perimeter_comparison(int n1, int n2) {
    if (n1 < 5) throw std::invalid_argument("perimeter_comparison: need n1 >= 5");
    if (n2 < 3) throw std::invalid_argument("perimeter_comparison: need n2 >= 3");
    PerimeterComparison cmp;
    cmp.n1 = n1;
    cmp.n2 = n2;
    cmp.m = n1 + n2 - 4;
    cmp.f_n1 = regular_right_polygon_perimeter(n1);
    cmp.g_n2 = cusp_polygon_perimeter_fn(static_cast<double>(n2));
    cmp.g_m = cusp_polygon_perimeter_fn(static_cast<double>(cmp.m));
    cmp.h_value = cmp.f_n1 - cusp_polygon_perimeter_fn(static_cast<double>(n1 - 4));
    cmp.holds = cmp.f_n1 + cmp.g_n2 > cmp.g_m;
    return cmp;
}

}  // namespace cuspiso
