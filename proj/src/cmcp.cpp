#include <cutplan/cmcp.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>

namespace cutplan {

namespace {

// Euclidean distance from a vertex to the goal box, 0 inside; admissible
// and consistent for arc-length edge costs.
double goal_distance(const Point& p, const Box& box) {
    double sq = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        double x = to_double(p[j]);
        double lo = to_double(box.lo[j]);
        double hi = to_double(box.hi[j]);
        double d = std::max({lo - x, 0.0, x - hi});
        sq += d * d;
    }
    return std::sqrt(sq);
}

GeometricPlan build_plan(const Roadmap& G, const std::vector<std::uint32_t>& verts,
                         const std::vector<std::uint64_t>& edges) {
    GeometricPlan plan;
    for (auto v : verts) plan.waypoints.push_back(G.vertex(v));
    plan.edges = edges;
    return plan;
}

}  // namespace

double path_cost(const Roadmap& G, const GeometricPlan& plan) {
    double c = 0.0;
    for (auto e : plan.edges) c += G.edge_cost(e);
    return c;
}

std::optional<GeometricPlan> solve_mcp(const Roadmap& G, const GoalRegion& goal,
                                       SolveStats* stats) {
    if (G.goal_ids().empty()) return std::nullopt;
    std::vector<bool> is_goal(G.vertex_count(), false);
    for (auto g : G.goal_ids()) is_goal[g] = true;

    struct Node {
        double f, h;
        std::uint64_t order;
        std::uint32_t vertex;
    };
    auto cmp = [](const Node& a, const Node& b) {
        if (a.f != b.f) return a.f > b.f;
        if (a.h != b.h) return a.h > b.h;
        return a.order > b.order;
    };
    std::priority_queue<Node, std::vector<Node>, decltype(cmp)> open(cmp);
    std::vector<double> best_g(G.vertex_count(), std::numeric_limits<double>::infinity());
    std::vector<std::uint32_t> parent(G.vertex_count(), UINT32_MAX);
    std::vector<std::uint64_t> parent_edge(G.vertex_count(), UINT64_MAX);

    std::uint64_t order = 0;
    best_g[G.q0_id()] = 0.0;
    open.push({goal_distance(G.vertex(G.q0_id()), goal.box),
               goal_distance(G.vertex(G.q0_id()), goal.box), order++, G.q0_id()});
    while (!open.empty()) {
        Node n = open.top();
        open.pop();
        double g = n.f - n.h;
        if (g > best_g[n.vertex] + 1e-15) continue;  // stale entry
        if (stats) ++stats->expanded;
        if (is_goal[n.vertex]) {
            std::vector<std::uint32_t> verts;
            std::vector<std::uint64_t> edges;
            for (std::uint32_t v = n.vertex; v != UINT32_MAX; v = parent[v]) {
                verts.push_back(v);
                if (parent_edge[v] != UINT64_MAX) edges.push_back(parent_edge[v]);
            }
            std::reverse(verts.begin(), verts.end());
            std::reverse(edges.begin(), edges.end());
            return build_plan(G, verts, edges);
        }
        for (const auto& e : G.adjacency(n.vertex)) {
            double ng = g + e.cost;
            if (ng < best_g[e.to]) {
                best_g[e.to] = ng;
                parent[e.to] = n.vertex;
                parent_edge[e.to] = e.id;
                double h = goal_distance(G.vertex(e.to), goal.box);
                open.push({ng + h, h, order++, e.to});
            }
        }
    }
    return std::nullopt;
}

std::optional<GeometricPlan> solve_cmcp(const Roadmap& G, const GoalRegion& goal,
                                        const std::vector<Cut>& cuts,
                                        const CmcpOptions& opts, SolveStats* stats) {
    if (cuts.empty() && !opts.cost_bound) return solve_mcp(G, goal, stats);
    if (G.goal_ids().empty()) return std::nullopt;
    std::vector<bool> is_goal(G.vertex_count(), false);
    for (auto g : G.goal_ids()) is_goal[g] = true;

    // edge id -> indices of cuts containing it
    std::map<std::uint64_t, std::vector<std::size_t>> edge_cuts;
    for (std::size_t c = 0; c < cuts.size(); ++c) {
        for (auto e : cuts[c].edges) edge_cuts[e].push_back(c);
    }

    struct State {
        std::vector<std::uint32_t> verts;
        std::vector<std::uint64_t> edges;
        std::vector<std::uint8_t> usage;  // per cut, capped at |cut| - 1
        double g;
    };
    struct Node {
        double f, h;
        std::size_t n_edges;
        std::uint64_t order;
        std::size_t state;
    };
    auto cmp = [](const Node& a, const Node& b) {
        if (a.f != b.f) return a.f > b.f;
        if (a.h != b.h) return a.h > b.h;
        if (a.n_edges != b.n_edges) return a.n_edges > b.n_edges;
        return a.order > b.order;
    };
    std::priority_queue<Node, std::vector<Node>, decltype(cmp)> open(cmp);
    std::vector<State> states;
    // dominance: best g per (vertex, saturated usage signature)
    std::map<std::pair<std::uint32_t, std::vector<std::uint8_t>>, double> best;

    auto push = [&](State s) {
        double h = goal_distance(G.vertex(s.verts.back()), goal.box);
        if (opts.cost_bound && s.g + h >= *opts.cost_bound - 1e-9) return;
        if (!opts.no_dedup) {
            auto key = std::make_pair(s.verts.back(), s.usage);
            auto it = best.find(key);
            if (it != best.end() && it->second <= s.g + 1e-15) return;
            best[key] = s.g;
        }
        std::size_t idx = states.size();
        states.push_back(std::move(s));
        open.push({states[idx].g + h, h, states[idx].edges.size(),
                   static_cast<std::uint64_t>(idx), idx});
    };

    push(State{{G.q0_id()}, {}, std::vector<std::uint8_t>(cuts.size(), 0), 0.0});
    while (!open.empty()) {
        Node n = open.top();
        open.pop();
        const State s = states[n.state];  // copy: states may reallocate below
        if (!opts.no_dedup) {
            auto it = best.find(std::make_pair(s.verts.back(), s.usage));
            if (it != best.end() && it->second < s.g - 1e-15) continue;  // dominated
        }
        if (stats) ++stats->expanded;
        if (is_goal[s.verts.back()]) {
            return build_plan(G, s.verts, s.edges);
        }
        for (const auto& e : G.adjacency(s.verts.back())) {
            if (std::find(s.verts.begin(), s.verts.end(), e.to) != s.verts.end()) continue;
            State ns = s;
            bool completes_cut = false;
            if (auto it = edge_cuts.find(e.id); it != edge_cuts.end()) {
                for (std::size_t c : it->second) {
                    if (ns.usage[c] + 1 >= cuts[c].edges.size()) {
                        completes_cut = true;
                        break;
                    }
                    ++ns.usage[c];
                }
            }
            if (completes_cut) continue;
            ns.verts.push_back(e.to);
            ns.edges.push_back(e.id);
            ns.g += e.cost;
            push(std::move(ns));
        }
    }
    return std::nullopt;
}

std::optional<GeometricPlan> enumerate_oracle(const Roadmap& G, const GoalRegion& goal,
                                              const std::vector<Cut>& cuts) {
    if (G.vertex_count() > 12) {
        throw std::domain_error("enumerate_oracle: vertex budget (12) exceeded");
    }
    std::vector<bool> is_goal(G.vertex_count(), false);
    for (auto g : G.goal_ids()) is_goal[g] = true;

    std::optional<GeometricPlan> bestp;
    double best_cost = std::numeric_limits<double>::infinity();
    std::vector<std::uint32_t> verts{G.q0_id()};
    std::vector<std::uint64_t> edges;
    std::vector<bool> visited(G.vertex_count(), false);
    visited[G.q0_id()] = true;

    auto satisfies_cuts = [&]() {
        for (const auto& cut : cuts) {
            std::size_t used = 0;
            for (auto e : edges) {
                if (std::find(cut.edges.begin(), cut.edges.end(), e) != cut.edges.end()) ++used;
            }
            if (used >= cut.edges.size()) return false;
        }
        return true;
    };

    auto dfs = [&](auto&& self, double g) -> void {
        if (is_goal[verts.back()] && satisfies_cuts() && g < best_cost) {
            best_cost = g;
            GeometricPlan p;
            for (auto v : verts) p.waypoints.push_back(G.vertex(v));
            p.edges = edges;
            bestp = std::move(p);
        }
        for (const auto& e : G.adjacency(verts.back())) {
            if (visited[e.to]) continue;
            visited[e.to] = true;
            verts.push_back(e.to);
            edges.push_back(e.id);
            self(self, g + e.cost);
            edges.pop_back();
            verts.pop_back();
            visited[e.to] = false;
        }
    };
    dfs(dfs, 0.0);
    return bestp;
}

}  // namespace cutplan
