#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cutplan/generator.hpp>
#include <cutplan/svg.hpp>

namespace py = pybind11;
using namespace cutplan;

namespace {

Point point_from_doubles(const std::vector<double>& xs) {
    Point p;
    for (double x : xs) p.push_back(rational_from_double(x));
    return p;
}

std::vector<double> point_to_doubles(const Point& p) {
    std::vector<double> xs;
    for (const auto& x : p) xs.push_back(to_double(x));
    return xs;
}

PlannerConfig config_from_kwargs(std::uint64_t seed, double timeout_s, bool anytime,
                                 const std::string& sampler, const std::string& cut_mode) {
    PlannerConfig cfg;
    cfg.seed = seed;
    cfg.timeout_s = timeout_s;
    cfg.anytime = anytime;
    cfg.sampler = sampler == "uniform" ? SamplerMode::uniform : SamplerMode::halton;
    cfg.cut_mode = cut_mode == "single" ? CutMode::single : CutMode::multi;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(pycutplan, m) {
    m.doc() = "lazy roadmap planner with exact collision certificates";

    py::class_<Instance>(m, "Instance")
        .def_static("from_json", &parse_instance, py::arg("text"))
        .def_static("from_file", &load_instance, py::arg("path"))
        .def_static(
            "generate",
            [](std::uint64_t seed, std::size_t rows, std::size_t cols, double fill) {
                GeneratorConfig cfg;
                cfg.seed = seed;
                cfg.rows = rows;
                cfg.cols = cols;
                cfg.fill = fill;
                return generate_instance(cfg);
            },
            py::arg("seed") = 1, py::arg("rows") = 30, py::arg("cols") = 30,
            py::arg("fill") = 0.35)
        .def_property_readonly("d", [](const Instance& i) { return i.ws.dim(); })
        .def_property_readonly("q0", [](const Instance& i) { return point_to_doubles(i.q0); })
        .def_property_readonly("obstacle_count",
                               [](const Instance& i) { return i.ws.obstacles.size(); })
        .def("to_json", &instance_to_json)
        .def("point_free",
             [](const Instance& i, const std::vector<double>& p) {
                 return point_free(point_from_doubles(p), i.ws);
             })
        .def("segment_free", [](const Instance& i, const std::vector<double>& p,
                                const std::vector<double>& q) {
            return segment_free(point_from_doubles(p), point_from_doubles(q), i.ws);
        });

    py::class_<PlannerResult>(m, "PlanResult")
        .def_property_readonly("status",
                               [](const PlannerResult& r) {
                                   switch (r.termination) {
                                       case Termination::success: return "success";
                                       case Termination::trivial: return "trivial";
                                       case Termination::starved: return "starved";
                                       default: return "timeout";
                                   }
                               })
        .def_property_readonly("solved", [](const PlannerResult& r) { return r.best.has_value(); })
        .def_readonly("cost", &PlannerResult::cost)
        .def_readonly("arc_length", &PlannerResult::arc_length)
        .def_readonly("iterations", &PlannerResult::iterations)
        .def_readonly("geometric_cuts", &PlannerResult::geometric_cuts)
        .def_readonly("kinematic_cuts", &PlannerResult::kinematic_cuts)
        .def_readonly("incumbent_costs", &PlannerResult::incumbent_costs)
        .def_property_readonly("piece_count",
                               [](const PlannerResult& r) {
                                   return r.best ? r.best->piece_count() : std::size_t(0);
                               })
        .def("eval",
             [](const PlannerResult& r, double t) {
                 if (!r.best) throw std::runtime_error("no plan");
                 return point_to_doubles(eval(*r.best, rational_from_double(t)));
             },
             py::arg("t"), "plan position at parameter t in [0, 1]")
        .def("to_json", [](const PlannerResult& r, const Instance& inst, std::uint64_t seed) {
            return result_to_json(inst, r, seed);
        });

    m.def(
        "plan",
        [](const Instance& inst, std::uint64_t seed, double timeout_s, bool anytime,
           const std::string& sampler, const std::string& cut_mode) {
            return plan(inst.ws, inst.q0, inst.goal, inst.constraints,
                        config_from_kwargs(seed, timeout_s, anytime, sampler, cut_mode));
        },
        py::arg("instance"), py::arg("seed") = 1, py::arg("timeout_s") = 60.0,
        py::arg("anytime") = false, py::arg("sampler") = "halton",
        py::arg("cut_mode") = "multi", py::call_guard<py::gil_scoped_release>());

    m.def("render_svg", [](const Instance& inst, const PlannerResult* res) {
        return render_svg(inst, res && res->roadmap ? &*res->roadmap : nullptr,
                          res && res->best ? &*res->best : nullptr);
    }, py::arg("instance"), py::arg("result") = nullptr);
}
