#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "cuspiso/cusp.hpp"
#include "cuspiso/fillpair.hpp"
#include "cuspiso/json_io.hpp"
#include "cuspiso/math_util.hpp"
#include "cuspiso/nelder_mead.hpp"
#include "cuspiso/triangle.hpp"
#include "cuspiso/upper_half_plane.hpp"
#include "cuspiso/verify.hpp"

namespace py = pybind11;
using namespace cuspiso;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    py::object loads = py::module_::import("json").attr("loads");
    return loads(dump_json(j, -1));
}

CombinatorialMap map_from_py(const py::object& doc) {
    py::object dumps = py::module_::import("json").attr("dumps");
    const std::string text = dumps(doc).cast<std::string>();
    return load_map(nlohmann::json::parse(text));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hyperbolic polygonal-cusp isoperimetry and filling-pair length bounds";

    py::register_exception<MapFormatError>(m, "MapFormatError", PyExc_ValueError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_ValueError);

    py::class_<UhpPoint>(m, "UhpPoint")
        .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
        .def_readonly("x", &UhpPoint::x)
        .def_readonly("y", &UhpPoint::y)
        .def("__repr__", [](const UhpPoint& p) {
            return "UhpPoint(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
        });
    m.def("distance", &distance, py::arg("p"), py::arg("q"),
          "Hyperbolic distance between two upper half-plane points.");
    m.def(
        "axis_geodesic_circle",
        [](double a, double x) {
            const CircleData c = axis_geodesic_circle(a, x);
            return py::make_tuple(c.center, c.radius);
        },
        py::arg("a"), py::arg("x"),
        "Center and radius of the geodesic through (0, a) and (x, 0).");

    py::class_<FiniteTriangle>(m, "FiniteTriangle")
        .def(py::init<double, double, double>(), py::arg("a"), py::arg("b"), py::arg("c"))
        .def_readonly("a", &FiniteTriangle::a)
        .def_readonly("b", &FiniteTriangle::b)
        .def_readonly("c", &FiniteTriangle::c);
    m.def(
        "triangle_angles",
        [](const FiniteTriangle& t) {
            const TriangleAngles a = angles_of(t);
            return py::make_tuple(a.alpha, a.beta, a.gamma);
        },
        py::arg("t"), "Angles opposite to sides a, b, c.");
    m.def(
        "sliding_apex_angles",
        [](double base, double side_sum, double x) {
            const TriangleAngles a = sliding_apex_angles(base, side_sum, x);
            return py::make_tuple(a.alpha, a.beta, a.gamma);
        },
        py::arg("base"), py::arg("side_sum"), py::arg("x"));
    m.def("sliding_apex_angle_sum_derivative", &sliding_apex_angle_sum_derivative,
          py::arg("base"), py::arg("side_sum"), py::arg("x"));
    m.def("sliding_apex_isosceles_angle_sum", &sliding_apex_isosceles_angle_sum,
          py::arg("base"), py::arg("side_sum"));

    py::class_<CuspTriangle>(m, "CuspTriangle")
        .def(py::init<double, double, double>(), py::arg("l"), py::arg("theta"), py::arg("phi"))
        .def_static("from_side_and_angle", &CuspTriangle::from_side_and_angle, py::arg("l"),
                    py::arg("theta"))
        .def_readonly("l", &CuspTriangle::l)
        .def_readonly("theta", &CuspTriangle::theta)
        .def_readonly("phi", &CuspTriangle::phi)
        .def("area", [](const CuspTriangle& t) { return area(t); });
    m.def("derived_base_angle", &derived_base_angle, py::arg("l"), py::arg("theta"));
    m.def("symmetric_base_angle", &symmetric_base_angle, py::arg("l"));
    m.def("ideal_apex_angle_sum", &ideal_apex_angle_sum, py::arg("a"), py::arg("b"), py::arg("x"));

    py::class_<PolygonalCusp>(m, "PolygonalCusp")
        .def(py::init<std::vector<UhpPoint>, double>(), py::arg("vertices"), py::arg("width"))
        .def_readonly("vertices", &PolygonalCusp::vertices)
        .def_readonly("width", &PolygonalCusp::width)
        .def("side_lengths", [](const PolygonalCusp& c) { return side_lengths(c); })
        .def("interior_angles", [](const PolygonalCusp& c) { return interior_angles(c); })
        .def("area", [](const PolygonalCusp& c) { return area(c); })
        .def("to_dict", [](const PolygonalCusp& c) { return json_to_py(to_json(c)); });

    py::class_<RegularCusp>(m, "RegularCusp")
        .def(py::init<int, double, double>(), py::arg("p"), py::arg("l"), py::arg("theta"))
        .def_readonly("p", &RegularCusp::p)
        .def_readonly("l", &RegularCusp::l)
        .def_readonly("theta", &RegularCusp::theta)
        .def("perimeter", [](const RegularCusp& rc) { return perimeter(rc); })
        .def("area", [](const RegularCusp& rc) { return area(rc); })
        .def("realize", [](const RegularCusp& rc) { return realize(rc); });
    m.def("regular_cusp_from_perimeter", &regular_cusp_from_perimeter, py::arg("p"),
          py::arg("perimeter"));
    m.def("regular_cusp_from_angle", &regular_cusp_from_angle, py::arg("p"), py::arg("theta"));
    m.def("regular_cusp_from_area", &regular_cusp_from_area, py::arg("p"), py::arg("area"));

    py::class_<OptimizationReport>(m, "OptimizationReport")
        .def_readonly("claim", &OptimizationReport::claim)
        .def_readonly("best_value", &OptimizationReport::best_value)
        .def_readonly("optimizer_argument", &OptimizationReport::optimizer_argument)
        .def_readonly("reference_value", &OptimizationReport::reference_value)
        .def_readonly("gap", &OptimizationReport::gap)
        .def_readonly("trials", &OptimizationReport::trials)
        .def_readonly("seed", &OptimizationReport::seed)
        .def_readonly("sound", &OptimizationReport::sound)
        .def_readonly("attained", &OptimizationReport::attained)
        .def_readonly("within_one_step", &OptimizationReport::within_one_step)
        .def("to_dict",
             [](const OptimizationReport& r) { return json_to_py(to_json(r, true)); });
    py::class_<VerifyTolerances>(m, "VerifyTolerances")
        .def(py::init<>())
        .def_readwrite("soundness", &VerifyTolerances::soundness)
        .def_readwrite("attainment", &VerifyTolerances::attainment);
    m.def("scan_ideal_apex_minimum", &scan_ideal_apex_minimum, py::arg("a"), py::arg("b"),
          py::arg("grid_points"));
    m.def("verify_max_area", &verify_max_area, py::arg("p"), py::arg("L"), py::arg("restarts"),
          py::arg("seed") = kDefaultSeed, py::arg("random_trials") = 100,
          py::arg("tolerances") = VerifyTolerances{});
    m.def("verify_min_perimeter", &verify_min_perimeter, py::arg("p"), py::arg("A"),
          py::arg("restarts"), py::arg("seed") = kDefaultSeed, py::arg("random_trials") = 100,
          py::arg("tolerances") = VerifyTolerances{});

    m.def("regular_right_polygon_perimeter", &regular_right_polygon_perimeter, py::arg("n"));
    m.def("polygon_vs_cusp_gap", &polygon_vs_cusp_gap, py::arg("x"));
    m.def(
        "verify_polygon_vs_cusp_gap",
        [](double x_max, double step) { return json_to_py(to_json(verify_polygon_vs_cusp_gap(x_max, step))); },
        py::arg("x_max"), py::arg("step"));
    m.def(
        "perimeter_comparison",
        [](int n1, int n2) { return json_to_py(to_json(perimeter_comparison(n1, n2))); },
        py::arg("n1"), py::arg("n2"));

    m.def("length_lower_bound", &length_lower_bound, py::arg("g"),
          "The filling-pair length bound (8g - 4) ln(sqrt(2) + 1).");
    m.def(
        "load_map", [](const py::object& doc) { return map_from_py(doc); }, py::arg("document"),
        "Validates a combinatorial-map document (a dict in the input JSON schema).");
    py::class_<CombinatorialMap>(m, "CombinatorialMap")
        .def_readonly("darts", &CombinatorialMap::darts)
        .def_readonly("num_vertices", &CombinatorialMap::num_vertices)
        .def_readonly("punctured_face", &CombinatorialMap::punctured_face);
    m.def(
        "verify_bound_pipeline",
        [](const py::object& doc) {
            return json_to_py(to_json(verify_bound_pipeline(map_from_py(doc))));
        },
        py::arg("document"),
        "Runs faces -> genus -> dual -> spread tree -> gluing and reports the bound data.");

    m.attr("DEFAULT_SEED") = kDefaultSeed;
    m.attr("PI") = kPi;
}
