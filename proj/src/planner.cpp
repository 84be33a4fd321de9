#include <cutplan/planner.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>

namespace cutplan {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// 16-point Gauss-Legendre on [-1, 1], positive half; nodes are symmetric.
constexpr double kGlNode[8] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
    0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499};
constexpr double kGlWeight[8] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

double speed_at(const std::vector<UniPoly>& derivs, double t) {
    double sq = 0.0;
    for (const auto& d : derivs) {
        double v = to_double(d.eval(rational_from_double(t)));
        sq += v * v;
    }
    return std::sqrt(sq);
}

std::vector<std::uint64_t> cut_edges_for(const GeometricPlan& gp, std::size_t piece,
                                         CutMode mode) {
    std::vector<std::uint64_t> ids;
    if (mode == CutMode::single) {
        ids.push_back(gp.edges[piece]);
    } else {
        for (auto i : cut_edge_range(piece + 1, gp.edges.size())) {
            ids.push_back(gp.edges[i - 1]);
        }
    }
    return ids;
}

void seed_neighborhoods(Sampler& sampler, const Roadmap& G,
                        const std::vector<std::uint64_t>& cut_edges, double radius,
                        SeedStateMode mode) {
    if (mode == SeedStateMode::per_edge) {
        for (auto e : cut_edges) {
            auto [u, v] = G.edge_endpoints(e);
            const Point& a = G.vertex(u);
            const Point& b = G.vertex(v);
            Point mid(a.size());
            for (std::size_t j = 0; j < a.size(); ++j) mid[j] = (a[j] + b[j]) / 2;
            sampler.add_neighborhood({std::move(mid), radius});
        }
        return;
    }
    std::vector<std::uint32_t> verts;
    for (auto e : cut_edges) {
        auto [u, v] = G.edge_endpoints(e);
        for (auto w : {u, v}) {
            if (std::find(verts.begin(), verts.end(), w) == verts.end()) verts.push_back(w);
        }
    }
    Point bary(G.vertex(verts.front()).size(), Rational(0));
    for (auto w : verts) {
        const Point& p = G.vertex(w);
        for (std::size_t j = 0; j < p.size(); ++j) bary[j] += p[j];
    }
    for (auto& c : bary) c /= Rational(static_cast<long>(verts.size()));
    sampler.add_neighborhood({std::move(bary), radius});
}

}  // namespace

double arc_length(const SmoothPlan& plan) {
    double total = 0.0;
    for (const auto& piece : plan.pieces) {
        std::vector<UniPoly> derivs;
        for (const auto& c : piece.components) derivs.push_back(c.derivative());
        double len = 0.0;
        for (int i = 0; i < 8; ++i) {
            // map +-node from [-1, 1] to [0, 1]
            len += kGlWeight[i] * speed_at(derivs, 0.5 * (1.0 + kGlNode[i]));
            len += kGlWeight[i] * speed_at(derivs, 0.5 * (1.0 - kGlNode[i]));
        }
        total += 0.5 * len;
    }
    return total;
}

PlannerResult plan(const Workspace& ws, const Point& q0, const GoalRegion& goal,
                   const DifferentialConstraintSet& constraints, const PlannerConfig& cfg) {
    PlannerResult res;
    auto start = Clock::now();
    auto out_of_time = [&] {
        return cfg.timeout_s && ms_since(start) >= *cfg.timeout_s * 1000.0;
    };

    if (goal.box.contains(q0)) {
        res.termination = Termination::trivial;
        return res;
    }

    Sampler sampler(cfg.sampler, cfg.seed);
    Roadmap G(q0, goal.box.center(), goal);
    std::vector<Cut> cuts;
    CmcpOptions opts;
    std::size_t d = ws.dim();
    bool first_round = true;
    bool need_growth = true;  // grow only when the constrained search comes up empty
    bool starved = false;

    while (!out_of_time()) {
        ++res.iterations;
        double radius = connection_radius(G.vertex_count(), d, ws.bounds, cfg.r_min);

        if (need_growth) {
            auto t_graph = Clock::now();
            std::size_t budget = first_round ? cfg.initial_vertices : cfg.per_round;
            first_round = false;
            starved = false;
            for (std::size_t i = 0; i < budget; ++i) {
                try {
                    Point q = (!sampler.neighborhoods().empty() && i < budget / 2)
                                  ? sampler.sample_directed(ws)
                                  : sampler.sample_undirected(ws);
                    G.grow(q, radius, ws, goal);
                } catch (const SamplerStarved&) {
                    starved = i == 0;  // the round added nothing at all
                    break;
                }
                radius = connection_radius(G.vertex_count(), d, ws.bounds, cfg.r_min);
            }
            res.timings.graph_ms += ms_since(t_graph);
            need_growth = false;
        }

        auto t_cmcp = Clock::now();
        auto gp = solve_cmcp(G, goal, cuts, opts);
        res.timings.cmcp_ms += ms_since(t_cmcp);
        if (!gp) {
            if (starved) {
                // no path and nothing new can be sampled: give up
                res.termination = res.best ? Termination::success : Termination::starved;
                res.roadmap = std::move(G);
                return res;
            }
            need_growth = true;
            continue;
        }

        auto t_fit = Clock::now();
        SmoothPlan smooth = rationalize(fit(*gp));
        res.timings.fit_ms += ms_since(t_fit);

        auto t_kin = Clock::now();
        auto violations = check_polynomial_constraints(smooth, constraints);
        if (d == 2) {
            auto curv = check_curvature(smooth, constraints.phi_max);
            violations.insert(violations.end(), curv.begin(), curv.end());
        }
        res.timings.kinematic_ms += ms_since(t_kin);
        if (!violations.empty()) {
            std::size_t worst = violations.front().piece;
            for (const auto& v : violations) worst = std::min(worst, v.piece);
            auto edges = cut_edges_for(*gp, worst, cfg.cut_mode);
            seed_neighborhoods(sampler, G, edges, radius, cfg.seed_state);
            cuts.push_back({std::move(edges), CutKind::kinematic, res.iterations});
            ++res.kinematic_cuts;
            continue;
        }

        auto t_trace = Clock::now();
        std::optional<std::size_t> bad_piece;
        for (std::size_t i = 0; i < smooth.pieces.size() && !bad_piece; ++i) {
            for (std::size_t o = 0; o < ws.obstacles.size(); ++o) {
                if (intersects_obstacle(smooth.pieces[i], ws.obstacles[o], ws.delta(o))) {
                    bad_piece = i;
                    break;
                }
            }
        }
        res.timings.trace_ms += ms_since(t_trace);
        if (bad_piece) {
            auto edges = cut_edges_for(*gp, *bad_piece, cfg.cut_mode);
            seed_neighborhoods(sampler, G, edges, radius, cfg.seed_state);
            cuts.push_back({std::move(edges), CutKind::geometric, res.iterations});
            ++res.geometric_cuts;
            continue;
        }

        // reported cost is the arc length; the search bound stays on the
        // roadmap path cost, which the solver can reason about
        double len = arc_length(smooth);
        if (!res.best) res.time_to_first_ms = ms_since(start);
        if (!res.best || len < res.cost) {
            res.best = std::move(smooth);
            res.cost = len;
            res.arc_length = len;
            res.incumbent_costs.push_back(len);
        }
        if (!cfg.anytime) {
            res.termination = Termination::success;
            res.roadmap = std::move(G);
            return res;
        }
        opts.cost_bound = path_cost(G, *gp);  // only strictly better paths from here on
    }

    res.termination = res.best ? Termination::success : Termination::timeout;
    res.roadmap = std::move(G);
    return res;
}

}  // namespace cutplan
