#include <cutplan/svg.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cutplan {

namespace {

// Vertices of a 2D polytope: intersect every constraint pair, keep feasible
// points, order them by angle around the centroid.
std::vector<std::pair<double, double>> polytope_outline(const Polytope& poly,
                                                        const Rational& delta) {
    std::vector<AffineConstraint> cs;
    for (const auto& g : poly.constraints) cs.push_back(expand_constraint(g, delta));
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            Rational det = cs[i].a[0] * cs[j].a[1] - cs[j].a[0] * cs[i].a[1];
            if (det == 0) continue;
            Rational x = (cs[i].a[1] * cs[j].b - cs[j].a[1] * cs[i].b) / det;
            Rational y = (cs[j].a[0] * cs[i].b - cs[i].a[0] * cs[j].b) / det;
            Point p{x, y};
            bool feasible = true;
            for (const auto& g : cs) {
                if (sign(constraint_eval(g, p)) > 0) {
                    feasible = false;
                    break;
                }
            }
            if (feasible) pts.push_back({to_double(x), to_double(y)});
        }
    }
    double cx = 0, cy = 0;
    for (auto [x, y] : pts) cx += x, cy += y;
    if (!pts.empty()) cx /= pts.size(), cy /= pts.size();
    std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
        return std::atan2(a.second - cy, a.first - cx) < std::atan2(b.second - cy, b.first - cx);
    });
    return pts;
}

void emit_polygon(std::ostream& out, const std::vector<std::pair<double, double>>& pts,
                  const char* style) {
    if (pts.empty()) return;
    out << "<polygon points=\"";
    for (auto [x, y] : pts) out << x << "," << y << " ";
    out << "\" " << style << "/>\n";
}

}  // namespace

std::string render_svg(const Instance& inst, const Roadmap* roadmap,
                       const SmoothPlan* plan) {
    if (inst.ws.dim() != 2) throw std::invalid_argument("svg rendering is 2D only");
    const Box& b = inst.ws.bounds;
    double x0 = to_double(b.lo[0]), y0 = to_double(b.lo[1]);
    double w = to_double(b.hi[0]) - x0, h = to_double(b.hi[1]) - y0;

    std::ostringstream out;
    // flip y so larger y draws upward
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x0 << " " << -(y0 + h)
        << " " << w << " " << h << "\" width=\"800\" height=\"" << 800.0 * h / w << "\">\n";
    out << "<g transform=\"scale(1,-1)\">\n";
    out << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << w << "\" height=\"" << h
        << "\" fill=\"white\" stroke=\"black\" stroke-width=\"" << w / 400 << "\"/>\n";

    std::string expanded_style = "fill=\"#fbd\" stroke=\"none\"";
    std::string solid_style = "fill=\"#c33\" stroke=\"none\"";
    for (std::size_t o = 0; o < inst.ws.obstacles.size(); ++o) {
        emit_polygon(out, polytope_outline(inst.ws.obstacles[o], inst.ws.delta(o)),
                     expanded_style.c_str());
    }
    for (const auto& poly : inst.ws.obstacles) {
        emit_polygon(out, polytope_outline(poly, Rational(0)), solid_style.c_str());
    }

    const Box& gb = inst.goal.box;
    out << "<rect x=\"" << to_double(gb.lo[0]) << "\" y=\"" << to_double(gb.lo[1])
        << "\" width=\"" << to_double(gb.hi[0]) - to_double(gb.lo[0]) << "\" height=\""
        << to_double(gb.hi[1]) - to_double(gb.lo[1])
        << "\" fill=\"#9e9\" fill-opacity=\"0.6\"/>\n";

    if (roadmap) {
        out << "<g stroke=\"#bbb\" stroke-width=\"" << w / 800 << "\">\n";
        for (std::uint64_t e = 0; e < roadmap->edge_count(); ++e) {
            auto [u, v] = roadmap->edge_endpoints(e);
            if (u > v) continue;  // draw each undirected pair once
            const Point& p = roadmap->vertex(u);
            const Point& q = roadmap->vertex(v);
            out << "<line x1=\"" << to_double(p[0]) << "\" y1=\"" << to_double(p[1])
                << "\" x2=\"" << to_double(q[0]) << "\" y2=\"" << to_double(q[1]) << "\"/>\n";
        }
        out << "</g>\n";
    }

    if (plan) {
        out << "<polyline fill=\"none\" stroke=\"#06c\" stroke-width=\"" << w / 200
            << "\" points=\"";
        for (const auto& piece : plan->pieces) {
            for (int k = 0; k <= 64; ++k) {
                Point p = piece.eval(Rational(k, 64));
                out << to_double(p[0]) << "," << to_double(p[1]) << " ";
            }
        }
        out << "\"/>\n";
        for (const auto& wp : plan->source.waypoints) {
            out << "<circle cx=\"" << to_double(wp[0]) << "\" cy=\"" << to_double(wp[1])
                << "\" r=\"" << w / 150 << "\" fill=\"#06c\"/>\n";
        }
    }

    out << "<circle cx=\"" << to_double(inst.q0[0]) << "\" cy=\"" << to_double(inst.q0[1])
        << "\" r=\"" << w / 100 << "\" fill=\"#080\"/>\n";
    out << "</g>\n</svg>\n";
    return out.str();
}

void write_svg(const std::string& path, const Instance& inst, const Roadmap* roadmap,
               const SmoothPlan* plan) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open svg output: " + path);
    out << render_svg(inst, roadmap, plan);
}

}  // namespace cutplan
