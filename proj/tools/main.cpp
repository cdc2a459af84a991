#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cuspiso/cusp.hpp"
#include "cuspiso/fillpair.hpp"
#include "cuspiso/json_io.hpp"
#include "cuspiso/math_util.hpp"
#include "cuspiso/triangle.hpp"
#include "cuspiso/verify.hpp"

using nlohmann::json;
using namespace cuspiso;

namespace {

// Exit codes: 0 pass, 1 mathematical assertion failure, 2 input/usage error.
constexpr int kExitPass = 0;
constexpr int kExitAssert = 1;
constexpr int kExitUsage = 2;

enum class Format { Json, Csv, Human };

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "human") return Format::Human;
    throw CLI::ValidationError("--output must be json, csv or human");
}

struct Row {
    std::string suite;
    std::string item;
    std::string metric;
    double value;
    double reference;
    bool pass;
};

void emit_rows_csv(const std::vector<Row>& rows) {
    std::cout << "suite,item,metric,value,reference,pass\n";
    char buf[64];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.17g", r.value);
        std::string v = buf;
        std::snprintf(buf, sizeof buf, "%.17g", r.reference);
        std::cout << r.suite << ',' << r.item << ',' << r.metric << ',' << v << ',' << buf << ','
                  << (r.pass ? "true" : "false") << '\n';
    }
}

// Deterministic raw-bit uniforms, shared convention with the library.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    double u01() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
};

std::uint64_t suite_seed(std::uint64_t seed, std::uint64_t tag) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double auto_perimeter(int p) { return 2.0 * p * std::log(std::sqrt(2.0) + 1.0); }
double auto_area(int p) { return 0.5 * p * kPi; }

struct SuiteOutcome {
    bool pass = true;
    json report = json::object();
    std::vector<Row> rows;
};

// --- verify suites ---------------------------------------------------------

SuiteOutcome run_suite_lemma24(std::uint64_t seed, long grid) {
    SuiteOutcome out;
    Rng rng(suite_seed(seed, 24));
    const int cases = 50;
    const double fd_step = 1e-6;
    double max_mid_err = 0.0, max_deriv_err = 0.0;
    json failures = json::array();

    for (int t = 0; t < cases; ++t) {
        const double c = rng.uniform(0.1, 2.5);
        const double l = c + rng.uniform(0.5, 5.0);
        const double lo = (l - c) / 2.0, hi = (l + c) / 2.0;
        const double step = (hi - lo) / static_cast<double>(grid);

        long best_k = 0;
        double best_v = std::numeric_limits<double>::infinity();
        for (long k = 0; k < grid; ++k) {
            const double x = lo + (static_cast<double>(k) + 0.5) * step;
            const double v = sliding_apex_angles(c, l, x).sum();
            if (v < best_v) {
                best_v = v;
                best_k = k;
            }
        }
        const double argmin = lo + (static_cast<double>(best_k) + 0.5) * step;
        const bool argmin_ok = std::abs(argmin - l / 2.0) <= step;

        const double mid_err = std::abs(sliding_apex_isosceles_angle_sum(c, l) -
                                        sliding_apex_angles(c, l, l / 2.0).sum());
        max_mid_err = std::max(max_mid_err, mid_err);

        double deriv_err = 0.0;
        for (int k = 1; k <= 9; ++k) {
            const double x = lo + (hi - lo) * static_cast<double>(k) / 10.0;
            const double fd = (sliding_apex_angles(c, l, x + fd_step).sum() -
                               sliding_apex_angles(c, l, x - fd_step).sum()) /
                              (2.0 * fd_step);
            deriv_err = std::max(
                deriv_err, std::abs(fd - sliding_apex_angle_sum_derivative(c, l, x)));
        }
        max_deriv_err = std::max(max_deriv_err, deriv_err);

        const bool ok = argmin_ok && mid_err <= 1e-10 && deriv_err <= 1e-5;
        if (!ok)
            failures.push_back({{"c", c},
                                {"l", l},
                                {"argmin", argmin},
                                {"argmin_ok", argmin_ok},
                                {"midpoint_error", mid_err},
                                {"derivative_error", deriv_err}});
        out.pass = out.pass && ok;
        out.rows.push_back({"lemma24", "pair_" + std::to_string(t), "argmin_offset",
                            std::abs(argmin - l / 2.0), step, ok});
    }
    out.report = {{"suite", "lemma24"},
                  {"cases", cases},
                  {"grid", grid},
                  {"max_midpoint_error", max_mid_err},
                  {"max_derivative_error", max_deriv_err},
                  {"pass", out.pass}};
    if (!failures.empty()) out.report["failures"] = failures;
    return out;
}

SuiteOutcome run_suite_lemma26(std::uint64_t seed, long grid) {
    SuiteOutcome out;
    Rng rng(suite_seed(seed, 26));
    const int cases = 50;
    double max_boundary_err = 0.0, max_min_value_err = 0.0;
    json failures = json::array();

    for (int t = 0; t < cases; ++t) {
        const double a = rng.log_uniform(0.2, 2.0);
        const double b = a * std::exp(rng.uniform(0.25, 2.3));
        const OptimizationReport scan = scan_ideal_apex_minimum(a, b, grid);

        const double corner = kPi / 2.0 + std::asin(2.0 * a * b / (a * a + b * b));
        const double boundary_err =
            std::max(std::abs(ideal_apex_angle_sum_before(a, b, a) - corner),
                     std::max(std::abs(ideal_apex_angle_sum_between(a, b, a) - corner),
                              std::max(std::abs(ideal_apex_angle_sum_between(a, b, b) - corner),
                                       std::abs(ideal_apex_angle_sum_beyond(a, b, b) - corner))));
        max_boundary_err = std::max(max_boundary_err, boundary_err);

        const double root = std::sqrt(a * b);
        const double min_value_err =
            std::abs(ideal_apex_angle_sum(a, b, root) - 2.0 * std::asin(2.0 * root / (a + b)));
        max_min_value_err = std::max(max_min_value_err, min_value_err);

        const bool ok = scan.within_one_step && boundary_err <= 1e-10 && min_value_err <= 1e-9;
        if (!ok)
            failures.push_back({{"a", a},
                                {"b", b},
                                {"argmin", scan.optimizer_argument.at(0)},
                                {"within_one_step", scan.within_one_step},
                                {"boundary_error", boundary_err},
                                {"min_value_error", min_value_err}});
        out.pass = out.pass && ok;
        out.rows.push_back(
            {"lemma26", "pair_" + std::to_string(t), "argmin_gap", scan.gap, 0.0, ok});
    }
    out.report = {{"suite", "lemma26"},
                  {"cases", cases},
                  {"grid", grid},
                  {"max_boundary_error", max_boundary_err},
                  {"max_min_value_error", max_min_value_err},
                  {"pass", out.pass}};
    if (!failures.empty()) out.report["failures"] = failures;
    return out;
}

SuiteOutcome run_suite_theorem12(std::uint64_t seed, int restarts,
                                 const std::vector<std::pair<int, double>>& pairs,
                                 VerifyTolerances tol, bool traces) {
    SuiteOutcome out;
    json reports = json::array();
    for (const auto& [p, L] : pairs) {
        OptimizationReport rep = verify_max_area(p, L, restarts, seed, 100, tol);
        const bool ok = rep.sound && rep.attained;
        out.pass = out.pass && ok;
        json jr = to_json(rep, traces);
        jr["p"] = p;
        jr["L"] = L;
        reports.push_back(jr);
        const std::string tag = "p" + std::to_string(p);
        out.rows.push_back({"theorem12", tag, "best_area", rep.best_value,
                            rep.reference_value, ok});
        for (std::size_t k = 0; k < rep.random_values.size(); ++k)
            out.rows.push_back({"theorem12", tag + "_random_" + std::to_string(k), "area",
                                rep.random_values[k], rep.reference_value,
                                rep.random_values[k] <= rep.reference_value + tol.soundness});
        for (std::size_t k = 0; k < rep.restart_values.size(); ++k)
            out.rows.push_back({"theorem12", tag + "_restart_" + std::to_string(k), "area",
                                rep.restart_values[k], rep.reference_value,
                                rep.restart_values[k] <= rep.reference_value + tol.soundness});
    }
    out.report = {{"suite", "theorem12"}, {"pairs", reports}, {"pass", out.pass}};
    return out;
}

SuiteOutcome run_suite_lemma29(std::uint64_t seed, int restarts,
                               const std::vector<std::pair<int, double>>& pairs,
                               VerifyTolerances tol, bool traces) {
    SuiteOutcome out;
    json reports = json::array();
    for (const auto& [p, A] : pairs) {
        OptimizationReport rep = verify_min_perimeter(p, A, restarts, seed, 100, tol);
        const bool ok = rep.sound && rep.attained;
        out.pass = out.pass && ok;
        json jr = to_json(rep, traces);
        jr["p"] = p;
        jr["A"] = A;
        reports.push_back(jr);
        const std::string tag = "p" + std::to_string(p);
        out.rows.push_back({"lemma29", tag, "best_perimeter", rep.best_value,
                            rep.reference_value, ok});
        for (std::size_t k = 0; k < rep.random_values.size(); ++k)
            out.rows.push_back({"lemma29", tag + "_random_" + std::to_string(k), "perimeter",
                                rep.random_values[k], rep.reference_value,
                                rep.random_values[k] >= rep.reference_value - tol.soundness});
        for (std::size_t k = 0; k < rep.restart_values.size(); ++k)
            out.rows.push_back({"lemma29", tag + "_restart_" + std::to_string(k), "perimeter",
                                rep.restart_values[k], rep.reference_value,
                                rep.restart_values[k] >= rep.reference_value - tol.soundness});
    }
    out.report = {{"suite", "lemma29"}, {"pairs", reports}, {"pass", out.pass}};
    return out;
}

SuiteOutcome run_suite_final_lemma() {
    SuiteOutcome out;
    const GapScanReport scan = verify_polygon_vs_cusp_gap(200.0, 0.01);
    bool comparisons_ok = true;
    double min_slack = std::numeric_limits<double>::infinity();
    for (int n1 = 5; n1 <= 30; ++n1)
        for (int n2 = 3; n2 <= 30; ++n2) {
            const PerimeterComparison cmp = perimeter_comparison(n1, n2);
            comparisons_ok = comparisons_ok && cmp.holds;
            min_slack = std::min(min_slack, cmp.f_n1 + cmp.g_n2 - cmp.g_m);
            out.rows.push_back({"final_lemma",
                                "n" + std::to_string(n1) + "_" + std::to_string(n2),
                                "combined_slack", cmp.f_n1 + cmp.g_n2 - cmp.g_m, 0.0,
                                cmp.holds});
        }
    out.pass = scan.all_ok && comparisons_ok;
    out.report = {{"suite", "final_lemma"},
                  {"gap_scan", to_json(scan)},
                  {"gap_at_five", polygon_vs_cusp_gap(5.0)},
                  {"perimeter_comparisons_ok", comparisons_ok},
                  {"perimeter_comparison_min_slack", min_slack},
                  {"pass", out.pass}};
    out.rows.push_back({"final_lemma", "gap_scan", "gap_at_four", scan.gap_at_four, 0.0,
                        scan.all_ok});
    out.rows.push_back({"final_lemma", "comparisons", "min_slack", min_slack, 0.0,
                        comparisons_ok});
    return out;
}

// --- commands ---------------------------------------------------------------

int cmd_bound(int genus, Format fmt) {
    const double bound = length_lower_bound(genus);
    const int p = 8 * genus - 4;
    const RegularCusp extremal = regular_cusp_from_angle(p, kPi / 2.0);
    json j{{"genus", genus},
           {"bound", bound},
           {"extremal_side_length", extremal.l},
           {"extremal_cusp",
            {{"p", p},
             {"theta", extremal.theta},
             {"area", area(extremal)},
             {"perimeter", perimeter(extremal)}}}};
    switch (fmt) {
        case Format::Json:
            std::cout << dump_json(j) << '\n';
            break;
        case Format::Csv:
            emit_rows_csv({{"bound", "genus_" + std::to_string(genus), "bound", bound, 0.0, true},
                           {"bound", "genus_" + std::to_string(genus), "extremal_side_length",
                            extremal.l, 0.0, true}});
            break;
        case Format::Human:
            std::cout << "length lower bound for genus " << genus << ": " << bound << "\n"
                      << "extremal cusp: p = " << p << ", theta = pi/2, side length = "
                      << extremal.l << ", area = " << area(extremal) << "\n";
            break;
    }
    return kExitPass;
}

int cmd_cusp(int p, std::optional<double> L, std::optional<double> A, std::optional<double> theta,
             Format fmt) {
    const int given = (L ? 1 : 0) + (A ? 1 : 0) + (theta ? 1 : 0);
    if (given != 1) {
        std::cerr << "cusp: give exactly one of --L, --A, --theta\n";
        return kExitUsage;
    }
    RegularCusp rc = L     ? regular_cusp_from_perimeter(p, *L)
                     : A   ? regular_cusp_from_area(p, *A)
                           : regular_cusp_from_angle(p, *theta);
    const PolygonalCusp chain = realize(rc);
    json j{{"regular_cusp", to_json(rc)},
           {"perimeter", perimeter(rc)},
           {"area", area(rc)},
           {"realized", to_json(chain)}};
    switch (fmt) {
        case Format::Json:
            std::cout << dump_json(j) << '\n';
            break;
        case Format::Csv:
            emit_rows_csv({{"cusp", "p" + std::to_string(p), "l", rc.l, 0.0, true},
                           {"cusp", "p" + std::to_string(p), "theta", rc.theta, 0.0, true},
                           {"cusp", "p" + std::to_string(p), "perimeter", perimeter(rc), 0.0, true},
                           {"cusp", "p" + std::to_string(p), "area", area(rc), 0.0, true}});
            break;
        case Format::Human:
            std::cout << "regular cusp: p = " << rc.p << ", side length = " << rc.l
                      << ", interior angle = " << rc.theta << "\nperimeter = " << perimeter(rc)
                      << ", area = " << area(rc) << "\n";
            break;
    }
    return kExitPass;
}

int cmd_triangle(std::optional<double> c, std::optional<double> l, std::optional<double> a,
                 std::optional<double> b, std::optional<double> x, Format fmt) {
    json j;
    if (c && l && x && !a && !b) {
        const TriangleAngles ang = sliding_apex_angles(*c, *l, *x);
        j = {{"family", "sliding_apex"},
             {"base", *c},
             {"side_sum", *l},
             {"x", *x},
             {"alpha", ang.alpha},
             {"beta", ang.beta},
             {"gamma", ang.gamma},
             {"angle_sum", ang.sum()},
             {"angle_sum_derivative", sliding_apex_angle_sum_derivative(*c, *l, *x)},
             {"isosceles_angle_sum", sliding_apex_isosceles_angle_sum(*c, *l)}};
    } else if (a && b && x && !c && !l) {
        const CircleData ca = axis_geodesic_circle(*a, *x);
        const CircleData cb = axis_geodesic_circle(*b, *x);
        const double root = std::sqrt(*a * *b);
        j = {{"family", "ideal_apex"},
             {"a", *a},
             {"b", *b},
             {"x", *x},
             {"angle_sum", ideal_apex_angle_sum(*a, *b, *x)},
             {"circle_a", {{"center", ca.center}, {"radius", ca.radius}}},
             {"circle_b", {{"center", cb.center}, {"radius", cb.radius}}},
             {"minimizer", root},
             {"minimum_angle_sum", 2.0 * std::asin(2.0 * root / (*a + *b))}};
    } else {
        std::cerr << "triangle: give either --c --l --x or --a --b --x\n";
        return kExitUsage;
    }
    if (fmt == Format::Human) {
        for (auto it = j.begin(); it != j.end(); ++it)
            std::cout << it.key() << " = " << it.value().dump() << "\n";
    } else if (fmt == Format::Csv) {
        std::vector<Row> rows;
        for (auto it = j.begin(); it != j.end(); ++it)
            if (it.value().is_number())
                rows.push_back({"triangle", j["family"], it.key(), it.value().get<double>(), 0.0,
                                true});
        emit_rows_csv(rows);
    } else {
        std::cout << dump_json(j) << '\n';
    }
    return kExitPass;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int restarts, long grid,
               std::optional<int> p_opt, const std::string& l_str, const std::string& a_str,
               VerifyTolerances tol, bool traces, Format fmt) {
    std::vector<SuiteOutcome> outcomes;

    auto theorem12_pairs = [&]() {
        std::vector<std::pair<int, double>> pairs;
        if (p_opt) {
            double L = l_str == "auto" || l_str.empty() ? auto_perimeter(*p_opt) : std::stod(l_str);
            pairs.emplace_back(*p_opt, L);
        } else {
            pairs = {{3, 3.0}, {4, auto_perimeter(4)}, {6, 12.0}, {12, auto_perimeter(12)}};
        }
        return pairs;
    };
    auto lemma29_pairs = [&]() {
        std::vector<std::pair<int, double>> pairs;
        if (p_opt) {
            double A = a_str == "auto" || a_str.empty() ? auto_area(*p_opt) : std::stod(a_str);
            pairs.emplace_back(*p_opt, A);
        } else {
            pairs = {{4, 2.0 * kPi}, {12, 6.0 * kPi}};
        }
        return pairs;
    };

    if (suite == "lemma24" || suite == "all") outcomes.push_back(run_suite_lemma24(seed, grid));
    if (suite == "lemma26" || suite == "all")
        outcomes.push_back(run_suite_lemma26(seed, 50L * grid));  // 1e5 points by default
    if (suite == "theorem12" || suite == "all")
        outcomes.push_back(run_suite_theorem12(seed, restarts, theorem12_pairs(), tol, traces));
    if (suite == "lemma29" || suite == "all")
        outcomes.push_back(run_suite_lemma29(seed, restarts, lemma29_pairs(), tol, traces));
    if (suite == "final_lemma" || suite == "all") outcomes.push_back(run_suite_final_lemma());
    if (outcomes.empty()) {
        std::cerr << "verify: unknown suite '" << suite
                  << "' (expected lemma24, lemma26, theorem12, lemma29, final_lemma or all)\n";
        return kExitUsage;
    }

    bool pass = true;
    json all = json::array();
    std::vector<Row> rows;
    for (auto& o : outcomes) {
        pass = pass && o.pass;
        all.push_back(o.report);
        rows.insert(rows.end(), o.rows.begin(), o.rows.end());
    }
    json top{{"command", "verify"}, {"suite", suite}, {"seed", seed}, {"pass", pass},
             {"suites", all}};

    switch (fmt) {
        case Format::Json:
            std::cout << dump_json(top) << '\n';
            break;
        case Format::Csv:
            emit_rows_csv(rows);
            break;
        case Format::Human:
            for (const auto& o : outcomes)
                std::cout << (o.report.value("pass", false) ? "[PASS] " : "[FAIL] ")
                          << o.report.value("suite", "?") << "\n";
            std::cout << (pass ? "all checks passed" : "some checks FAILED") << "\n";
            break;
    }
    return pass ? kExitPass : kExitAssert;
}

int cmd_fillpair(const std::string& path, Format fmt) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "fillpair: cannot read '" << path << "'\n";
        return kExitUsage;
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        std::cerr << "fillpair: invalid JSON: " << e.what() << "\n";
        return kExitUsage;
    }
    CombinatorialMap m;
    try {
        m = load_map(doc);
    } catch (const MapFormatError& e) {
        std::cerr << "fillpair: malformed map document: " << e.what() << "\n";
        return kExitUsage;
    }
    PipelineReport rep;
    try {
        rep = verify_bound_pipeline(m);
    } catch (const InvariantError& e) {
        std::cerr << "fillpair: invariant failure: " << e.what() << "\n";
        return kExitAssert;
    }
    switch (fmt) {
        case Format::Json:
            std::cout << dump_json(to_json(rep)) << '\n';
            break;
        case Format::Csv:
            emit_rows_csv({{"fillpair", path, "genus", static_cast<double>(rep.genus.g), 0.0,
                            rep.ok},
                           {"fillpair", path, "glued_sides", static_cast<double>(rep.glued_sides),
                            static_cast<double>(8 * rep.genus.g - 4), rep.sides_identity_ok},
                           {"fillpair", path, "bound", rep.bound, 0.0, rep.ok}});
            break;
        case Format::Human:
            std::cout << "genus " << rep.genus.g << ", i = " << rep.genus.i
                      << ", faces = " << rep.genus.r << ", n(Q) = " << rep.glued_sides
                      << ", bound = " << rep.bound << (rep.ok ? "" : "  [FAILED]") << "\n";
            if (!rep.diagnostic.empty()) std::cout << "diagnostic: " << rep.diagnostic << "\n";
            break;
    }
    return rep.ok ? kExitPass : kExitAssert;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polygonal-cusp isoperimetry and filling-pair length bounds"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = kDefaultSeed;
    std::string output = "json";
    app.add_option("--seed", seed, "RNG seed (default 1729)")->envname("CUSP_ISO_SEED");
    app.add_option("--output", output, "Output format: json, csv or human")
        ->check(CLI::IsMember({"json", "csv", "human"}));

    auto* bound = app.add_subcommand("bound", "Evaluate the filling-pair length bound");
    int genus = 0;
    bound->add_option("--genus", genus, "Surface genus (>= 1)")->required();

    auto* cusp = app.add_subcommand("cusp", "Solve a regular polygonal cusp");
    int cusp_p = 0;
    std::optional<double> cusp_L, cusp_A, cusp_theta;
    cusp->add_option("--p", cusp_p, "Side count (>= 3)")->required();
    cusp->add_option("--L", cusp_L, "Perimeter");
    cusp->add_option("--A", cusp_A, "Area");
    cusp->add_option("--theta", cusp_theta, "Interior angle");

    auto* triangle = app.add_subcommand("triangle", "Evaluate triangle kernels");
    std::optional<double> tri_c, tri_l, tri_a, tri_b, tri_x;
    triangle->add_option("--c", tri_c, "Fixed base length");
    triangle->add_option("--l", tri_l, "Sum of the two sliding sides");
    triangle->add_option("--a", tri_a, "Lower axis point height");
    triangle->add_option("--b", tri_b, "Upper axis point height");
    triangle->add_option("--x", tri_x, "Family parameter");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    int restarts = 20;
    long grid = 2000;
    std::string l_str, a_str;
    std::optional<int> verify_p;
    std::vector<std::string> tol_overrides;
    bool traces = false;
    verify->add_option("--suite", suite,
                       "lemma24, lemma26, theorem12, lemma29, final_lemma or all")
        ->required();
    verify->add_option("--p", verify_p, "Side count override for theorem12/lemma29");
    verify->add_option("--L", l_str, "Perimeter override, or 'auto'");
    verify->add_option("--A", a_str, "Area override, or 'auto'");
    verify->add_option("--restarts", restarts, "Local-search restarts (default 20)");
    verify->add_option("--grid", grid, "Grid points for the scans (default 2000)");
    verify->add_option("--tolerance-override", tol_overrides,
                       "name=value for soundness or attainment");
    verify->add_flag("--trace", traces, "Include per-restart traces in JSON reports");

    auto* fillpair = app.add_subcommand("fillpair", "Run the bound pipeline on a map document");
    std::string path;
    fillpair->add_option("path", path, "Map document (JSON)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        const Format fmt = parse_format(output);
        if (bound->parsed()) return cmd_bound(genus, fmt);
        if (cusp->parsed()) return cmd_cusp(cusp_p, cusp_L, cusp_A, cusp_theta, fmt);
        if (triangle->parsed()) return cmd_triangle(tri_c, tri_l, tri_a, tri_b, tri_x, fmt);
        if (verify->parsed()) {
            VerifyTolerances tol;
            for (const auto& ov : tol_overrides) {
                const auto eq = ov.find('=');
                if (eq == std::string::npos) {
                    std::cerr << "verify: bad --tolerance-override '" << ov << "'\n";
                    return kExitUsage;
                }
                const std::string name = ov.substr(0, eq);
                const double value = std::stod(ov.substr(eq + 1));
                if (name == "soundness")
                    tol.soundness = value;
                else if (name == "attainment")
                    tol.attainment = value;
                else {
                    std::cerr << "verify: unknown tolerance '" << name << "'\n";
                    return kExitUsage;
                }
            }
            return cmd_verify(suite, seed, restarts, grid, verify_p, l_str, a_str, tol, traces,
                              fmt);
        }
        if (fillpair->parsed()) return cmd_fillpair(path, fmt);
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << app.get_name() << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << app.get_name() << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << app.get_name() << ": " << e.what() << "\n";
        return kExitAssert;
    }
}
