#include "cuspiso/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace cuspiso {

nlohmann::json to_json(const PolygonalCusp& c) {
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& v : c.vertices) verts.push_back({v.x, v.y});
    return {{"vertices", verts}, {"width", c.width}};
}

PolygonalCusp polygonal_cusp_from_json(const nlohmann::json& j) {
    std::vector<UhpPoint> vs;
    for (const auto& v : j.at("vertices")) vs.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
    return PolygonalCusp(std::move(vs), j.at("width").get<double>());
}

nlohmann::json to_json(const RegularCusp& rc) {
    return {{"p", rc.p}, {"l", rc.l}, {"theta", rc.theta}};
}

RegularCusp regular_cusp_from_json(const nlohmann::json& j) {
    return RegularCusp(j.at("p").get<int>(), j.at("l").get<double>(),
                       j.at("theta").get<double>());
}

nlohmann::json to_json(const OptimizationReport& rep, bool traces) {
    nlohmann::json j{{"claim", rep.claim},
                     {"best_value", rep.best_value},
                     {"optimizer_argument", rep.optimizer_argument},
                     {"reference_value", rep.reference_value},
                     {"gap", rep.gap},
                     {"trials", rep.trials},
                     {"seed", rep.seed},
                     {"sound", rep.sound},
                     {"attained", rep.attained}};
    if (rep.claim == "ideal_apex_minimum") {
        j["reference_argument"] = rep.reference_argument;
        j["argmin_lo"] = rep.argmin_lo;
        j["argmin_hi"] = rep.argmin_hi;
        j["within_one_step"] = rep.within_one_step;
    }
    if (traces) {
        j["restart_values"] = rep.restart_values;
        j["random_values"] = rep.random_values;
    }
    return j;
}

nlohmann::json to_json(const GapScanReport& rep) {
    return {{"x_max", rep.x_max},
            {"step", rep.step},
            {"grid_points", rep.grid_points},
            {"gap_at_four", rep.gap_at_four},
            {"gap_at_four_zero", rep.gap_at_four_zero},
            {"strictly_increasing", rep.strictly_increasing},
            {"positive", rep.positive},
            {"concave", rep.concave},
            {"max_second_derivative_fd_error", rep.max_second_derivative_fd_error},
            {"second_derivative_matches_fd", rep.second_derivative_matches_fd},
            {"all_ok", rep.all_ok}};
}

nlohmann::json to_json(const PerimeterComparison& cmp) {
    return {{"n1", cmp.n1},       {"n2", cmp.n2},   {"m", cmp.m},
            {"f_n1", cmp.f_n1},   {"g_n2", cmp.g_n2}, {"g_m", cmp.g_m},
            {"h_value", cmp.h_value}, {"holds", cmp.holds}};
}

nlohmann::json to_json(const PipelineReport& rep) {
    nlohmann::json tree{{"found", rep.tree.found}, {"edges", rep.tree.edges}};
    nlohmann::json j{{"genus", rep.genus.g},
                     {"intersection_number", rep.genus.i},
                     {"faces", rep.genus.r},
                     {"face_sides", rep.face_sides},
                     {"punctured_face", rep.punctured_face},
                     {"alpha_separating", rep.alpha_separating},
                     {"beta_separating", rep.beta_separating},
                     {"spread_tree", tree},
                     {"glued_sides", rep.glued_sides},
                     {"sides_identity_ok", rep.sides_identity_ok},
                     {"cusp_area", rep.cusp_area},
                     {"regular_angle", rep.regular_angle},
                     {"regular_side", rep.regular_side},
                     {"reference_perimeter", rep.reference_perimeter},
                     {"bound", rep.bound},
                     {"ok", rep.ok}};
    if (!rep.diagnostic.empty()) j["diagnostic"] = rep.diagnostic;
    return j;
}

namespace {

void write_value(const nlohmann::json& j, std::string& out, int indent, int depth) {
    const std::string pad = indent >= 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
    const std::string close_pad = indent >= 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
    const char* nl = indent >= 0 ? "\n" : "";
    const char* sep = indent >= 0 ? ": " : ":";

    switch (j.type()) {
        case nlohmann::json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{";
            out += nl;
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) {
                    out += ",";
                    out += nl;
                }
                first = false;
                out += pad;
                out += nlohmann::json(it.key()).dump();
                out += sep;
                write_value(it.value(), out, indent, depth + 1);
            }
            out += nl;
            out += close_pad;
            out += "}";
            return;
        }
        case nlohmann::json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[";
            out += nl;
            bool first = true;
            for (const auto& el : j) {
                if (!first) {
                    out += ",";
                    out += nl;
                }
                first = false;
                out += pad;
                write_value(el, out, indent, depth + 1);
            }
            out += nl;
            out += close_pad;
            out += "]";
            return;
        }
        case nlohmann::json::value_t::number_float: {
            const double v = j.get<double>();
            if (!std::isfinite(v)) throw std::invalid_argument("dump_json: non-finite number");
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out += buf;
            return;
        }
        default:
            out += j.dump();
            return;
    }
}

}  // namespace

std::string dump_json(const nlohmann::json& j, int indent) {
    std::string out;
    write_value(j, out, indent, 0);
    return out;
}

}  // namespace cuspiso
