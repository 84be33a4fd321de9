#include <cutplan/instance_io.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cutplan {

namespace {

using nlohmann::json;

Rational parse_rat(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_number_float()) return rational_from_double(v.get<double>());
    if (v.is_string()) return rational_from_string(v.get<std::string>());
    throw std::invalid_argument("expected a rational (int, float, or string)");
}

Point parse_point(const json& arr, std::size_t d) {
    if (!arr.is_array() || arr.size() != d) {
        throw std::invalid_argument("expected an array of length d");
    }
    Point p;
    for (const auto& v : arr) p.push_back(parse_rat(v));
    return p;
}

json point_to_json(const Point& p) {
    json a = json::array();
    for (const auto& x : p) a.push_back(rational_to_string(x));
    return a;
}

Box parse_box(const json& v, std::size_t d) {
    Box b{parse_point(v.at("lo"), d), parse_point(v.at("hi"), d)};
    for (std::size_t j = 0; j < d; ++j) {
        if (b.lo[j] > b.hi[j]) throw std::invalid_argument("box with lo > hi");
    }
    return b;
}

json box_to_json(const Box& b) {
    return json{{"lo", point_to_json(b.lo)}, {"hi", point_to_json(b.hi)}};
}

}  // namespace

Instance parse_instance(const std::string& json_text) {
    json doc = json::parse(json_text);
    std::size_t d = doc.at("d").get<std::size_t>();
    if (d == 0) throw std::invalid_argument("d must be positive");

    Instance inst;
    inst.ws.bounds = parse_box(doc.at("bounds"), d);

    if (doc.contains("polytopes")) {
        for (const auto& pj : doc["polytopes"]) {
            Polytope poly;
            poly.id = static_cast<int>(inst.ws.obstacles.size());
            for (const auto& cj : pj.at("constraints")) {
                AffineConstraint g;
                g.a = parse_point(cj.at("a"), d);
                g.b = parse_rat(cj.at("b"));
                poly.constraints.push_back(std::move(g));
            }
            if (poly.constraints.empty()) throw std::invalid_argument("empty polytope");
            inst.ws.obstacles.push_back(std::move(poly));
        }
    }
    if (doc.contains("grid")) {
        if (d != 2) throw std::invalid_argument("grids are 2D only");
        const auto& gj = doc["grid"];
        OccupancyGrid grid;
        grid.rows = gj.at("rows").get<std::size_t>();
        grid.cols = gj.at("cols").get<std::size_t>();
        std::string cells = gj.at("cells").get<std::string>();
        if (cells.size() != grid.rows * grid.cols) {
            throw std::invalid_argument("grid cell string length mismatch");
        }
        for (char c : cells) {
            if (c != '0' && c != '1') throw std::invalid_argument("grid cells must be 0/1");
            grid.cells.push_back(c == '1');
        }
        for (auto& poly : grid_to_polytopes(grid, parse_rat(gj.at("resolution")))) {
            poly.id = static_cast<int>(inst.ws.obstacles.size());
            inst.ws.obstacles.push_back(std::move(poly));
        }
    }

    Rational delta(0);
    if (doc.contains("clearance")) delta = parse_rat(doc["clearance"]);
    if (delta < 0) throw std::invalid_argument("clearance must be non-negative");
    inst.ws.clearance.assign(inst.ws.obstacles.size(), delta);

    inst.q0 = parse_point(doc.at("q0"), d);
    inst.goal.box = parse_box(doc.at("goal_box"), d);
    if (doc.contains("phi_max")) inst.constraints.phi_max = doc["phi_max"].get<double>();
    if (doc.contains("differential_constraints")) {
        for (const auto& cj : doc["differential_constraints"]) {
            DifferentialConstraint c;
            c.coeff = parse_point(cj.at("coeff"), 3 * d);
            c.offset = parse_rat(cj.at("offset"));
            inst.constraints.polynomial.push_back(std::move(c));
        }
    }
    return inst;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_instance(ss.str());
}

std::string instance_to_json(const Instance& inst) {
    json doc;
    std::size_t d = inst.ws.dim();
    doc["d"] = d;
    doc["bounds"] = box_to_json(inst.ws.bounds);
    json polys = json::array();
    for (const auto& poly : inst.ws.obstacles) {
        json cjs = json::array();
        for (const auto& g : poly.constraints) {
            cjs.push_back({{"a", point_to_json(g.a)}, {"b", rational_to_string(g.b)}});
        }
        polys.push_back({{"constraints", cjs}});
    }
    doc["polytopes"] = polys;
    doc["clearance"] =
        inst.ws.clearance.empty() ? "0" : rational_to_string(inst.ws.clearance.front());
    doc["q0"] = point_to_json(inst.q0);
    doc["goal_box"] = box_to_json(inst.goal.box);
    doc["phi_max"] = inst.constraints.phi_max;
    if (!inst.constraints.polynomial.empty()) {
        json cjs = json::array();
        for (const auto& c : inst.constraints.polynomial) {
            cjs.push_back({{"coeff", point_to_json(c.coeff)},
                           {"offset", rational_to_string(c.offset)}});
        }
        doc["differential_constraints"] = cjs;
    }
    return doc.dump(2);
}

std::string result_to_json(const Instance& inst, const PlannerResult& res,
                           std::uint64_t seed) {
    json doc;
    switch (res.termination) {
        case Termination::success: doc["status"] = "success"; break;
        case Termination::timeout: doc["status"] = "timeout"; break;
        case Termination::trivial: doc["status"] = "trivial"; break;
        case Termination::starved: doc["status"] = "starved"; break;
    }
    doc["seed"] = seed;
    doc["d"] = inst.ws.dim();
    doc["iterations"] = res.iterations;
    doc["cuts"] = {{"geometric", res.geometric_cuts}, {"kinematic", res.kinematic_cuts}};
    doc["timings_ms"] = {{"graph", res.timings.graph_ms},
                         {"cmcp", res.timings.cmcp_ms},
                         {"fit", res.timings.fit_ms},
                         {"kinematic", res.timings.kinematic_ms},
                         {"trace", res.timings.trace_ms}};
    doc["time_to_first_ms"] = res.time_to_first_ms;
    if (res.best) {
        doc["cost"] = res.cost;
        doc["arc_length"] = res.arc_length;
        doc["incumbent_costs"] = res.incumbent_costs;
        json pieces = json::array();
        for (const auto& piece : res.best->pieces) {
            json comps = json::array();
            for (const auto& poly : piece.components) {
                json coeffs = json::array();
                for (const auto& c : poly.coeffs()) coeffs.push_back(rational_to_string(c));
                comps.push_back(coeffs);
            }
            pieces.push_back(comps);
        }
        doc["plan"] = {{"pieces", pieces},
                       {"waypoints", [&] {
                            json w = json::array();
                            for (const auto& p : res.best->source.waypoints)
                                w.push_back(point_to_json(p));
                            return w;
                        }()}};
    }
    return doc.dump(2);
}

std::string roadmap_to_json(const Roadmap& G) {
    json doc;
    json verts = json::array();
    for (std::uint32_t v = 0; v < G.vertex_count(); ++v) verts.push_back(point_to_json(G.vertex(v)));
    doc["vertices"] = verts;
    json edges = json::array();
    for (std::uint64_t e = 0; e < G.edge_count(); ++e) {
        auto [from, to] = G.edge_endpoints(e);
        edges.push_back({{"id", e}, {"from", from}, {"to", to}, {"cost", G.edge_cost(e)}});
    }
    doc["edges"] = edges;
    doc["goal_ids"] = G.goal_ids();
    return doc.dump(2);
}

}  // namespace cutplan
