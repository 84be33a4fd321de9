// End-to-end acceptance checks. Each criterion prints one line:
//   [PASS|FAIL] <n>: <description> (<seconds>s)
// The process exits nonzero if any criterion fails.

#include <cutplan/generator.hpp>
#include <cutplan/svg.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <queue>
#include <random>
#include <vector>

using namespace cutplan;
using Clock = std::chrono::steady_clock;

namespace {

std::filesystem::path g_work_dir = "acceptance_work";
int g_failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int n, const char* what, bool ok, double secs) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << n << ": " << what << " (" << secs << "s)"
              << std::endl;
    if (!ok) ++g_failures;
}

Rational rand_rat(std::mt19937_64& rng, int denom_bits = 8) {
    std::uniform_int_distribution<long> num(-(1L << denom_bits), 1L << denom_bits);
    std::uniform_int_distribution<long> den(1, 1L << denom_bits);
    return Rational(num(rng), den(rng));
}

// --- 1: exact spline invariants on 500 random fits ------------------------

bool spline_invariants_hold(const SmoothPlan& sp, const GeometricPlan& gp) {
    std::size_t n = sp.pieces.size();
    std::size_t d = gp.waypoints.front().size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const UniPoly& a = sp.pieces[i].components[j];
            if (a.eval(Rational(0)) != gp.waypoints[i][j]) return false;
            if (a.eval(Rational(1)) != gp.waypoints[i + 1][j]) return false;
            UniPoly da = a.derivative();
            UniPoly dda = da.derivative();
            if (i + 1 < n) {
                const UniPoly& b = sp.pieces[i + 1].components[j];
                if (da.eval(Rational(1)) != b.derivative().eval(Rational(0))) return false;
                if (dda.eval(Rational(1)) != b.derivative().derivative().eval(Rational(0)))
                    return false;
            }
            if (i == 0 && dda.eval(Rational(0)) != 0) return false;
            if (i + 1 == n && dda.eval(Rational(1)) != 0) return false;
        }
    }
    return true;
}

void criterion_1() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(1001);
    std::uniform_int_distribution<int> pieces(1, 8), dims(1, 4);
    bool ok = true;
    for (int trial = 0; trial < 500 && ok; ++trial) {
        std::size_t d = dims(rng), n = pieces(rng);
        GeometricPlan gp;
        for (std::size_t i = 0; i <= n; ++i) {
            Point p;
            for (std::size_t j = 0; j < d; ++j) p.push_back(rand_rat(rng));
            if (!gp.waypoints.empty() && p == gp.waypoints.back()) p[0] += 1;
            gp.waypoints.push_back(std::move(p));
        }
        gp.edges.assign(n, 0);
        ok = spline_invariants_hold(fit(gp), gp);
    }
    double secs = seconds_since(t0);
    report(1, "500 random fits satisfy all interpolation and continuity "
              "constraints exactly, under 60s",
           ok && secs < 60.0, secs);
}

// --- 2: trace soundness against a sampling oracle -------------------------

void criterion_2() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(2002);
    std::uniform_int_distribution<int> deg(1, 3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const Rational deltas[3] = {Rational(0), Rational(1, 4), Rational(1, 2)};
    bool ok = true;
    int collisions = 0;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        // random quadratic/cubic curve piece in the plane
        CurvePiece curve;
        for (int j = 0; j < 2; ++j) {
            std::vector<Rational> cs;
            for (int k = 0; k <= deg(rng); ++k) cs.push_back(rand_rat(rng, 4));
            curve.components.push_back(UniPoly(std::move(cs)));
        }
        Rational cx = rand_rat(rng, 4), cy = rand_rat(rng, 4);
        Rational w(std::uniform_int_distribution<long>(1, 8)(rng), 4);
        Polytope box = make_rect(cx - w, cx + w, cy - w, cy + w);
        const Rational& delta = deltas[trial % 3];

        bool traced = intersects_obstacle(curve, box, delta);
        if (traced != intersects_obstacle(curve, box, delta, false)) {
            ok = false;  // inertial filter changed the verdict
            break;
        }
        collisions += traced;

        // precompute expanded constraints once; double prefilter, exact confirm
        std::vector<AffineConstraint> expanded;
        for (const auto& g : box.constraints) expanded.push_back(expand_constraint(g, delta));
        std::vector<std::array<double, 3>> approx;  // ax, ay, b
        for (const auto& g : expanded) {
            approx.push_back({to_double(g.a[0]), to_double(g.a[1]), to_double(g.b)});
        }
        for (int k = 0; k <= 200; ++k) {
            Rational t(k, 200);
            double x = to_double(curve.components[0].eval(t));
            double y = to_double(curve.components[1].eval(t));
            bool maybe_inside = true;
            for (const auto& g : approx) {
                if (g[0] * x + g[1] * y + g[2] > 1e-9) {
                    maybe_inside = false;
                    break;
                }
            }
            if (!maybe_inside) continue;
            Point p = curve.eval(t);
            bool inside = true;
            for (const auto& g : expanded) {
                if (sign(constraint_eval(g, p)) > 0) {
                    inside = false;
                    break;
                }
            }
            if (inside && !traced) {
                ok = false;  // sampling found a witness the trace missed
                break;
            }
        }
    }
    double secs = seconds_since(t0);
    report(2, "1000 curve/obstacle/clearance triples: no false negatives vs a "
              "sampling oracle, filter-independent, under 300s",
           ok && collisions > 100 && secs < 300.0, secs);
}

// --- 3: root isolation on polynomials with known factors ------------------

void criterion_3() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(3003);
    std::uniform_int_distribution<int> n_lin(0, 6), n_quad(0, 6), off(0, 1);
    bool ok = true;
    for (int trial = 0; trial < 500 && ok; ++trial) {
        // distinct rational roots in [0, 1] plus irreducible quadratics
        std::vector<Rational> roots;
        UniPoly p = UniPoly::constant(Rational(1));
        int lins = n_lin(rng), quads = n_quad(rng);
        if (lins + quads == 0) lins = 1;
        for (int i = 0; i < lins; ++i) {
            Rational r(std::uniform_int_distribution<long>(0, 64)(rng), 64);
            if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
            roots.push_back(r);
            p = p * UniPoly({-r, Rational(1)});
        }
        for (int i = 0; i < quads; ++i) {
            // (t - c)^2 + e with e > 0: no real roots
            Rational c = rand_rat(rng, 4), e(std::uniform_int_distribution<long>(1, 16)(rng), 16);
            p = p * UniPoly({c * c + e, -2 * c, Rational(1)});
        }
        auto intervals = isolate_roots(p, Interval{Rational(0), Rational(1)});
        if (intervals.size() != roots.size()) {
            ok = false;
            break;
        }
        std::sort(roots.begin(), roots.end());
        for (std::size_t i = 0; i < roots.size() && ok; ++i) {
            if (intervals[i].lo > roots[i] || roots[i] > intervals[i].hi) ok = false;
            if (i + 1 < roots.size() && intervals[i].hi > intervals[i + 1].lo) ok = false;
        }
    }
    double secs = seconds_since(t0);
    report(3, "500 polynomials with planted factors (degree <= 18): every root "
              "isolated in disjoint intervals, under 120s",
           ok && secs < 120.0, secs);
}

// --- 4: path search vs enumeration and Dijkstra ---------------------------

double dijkstra_cost(const Roadmap& G) {
    std::vector<double> dist(G.vertex_count(), std::numeric_limits<double>::infinity());
    std::priority_queue<std::pair<double, std::uint32_t>,
                        std::vector<std::pair<double, std::uint32_t>>, std::greater<>>
        pq;
    dist[G.q0_id()] = 0;
    pq.push({0, G.q0_id()});
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (d > dist[v]) continue;
        for (const auto& e : G.adjacency(v)) {
            if (d + e.cost < dist[e.to]) {
                dist[e.to] = d + e.cost;
                pq.push({dist[e.to], e.to});
            }
        }
    }
    double best = std::numeric_limits<double>::infinity();
    for (auto g : G.goal_ids()) best = std::min(best, dist[g]);
    return best;
}

Roadmap random_roadmap(std::mt19937_64& rng, const Workspace& ws, const GoalRegion& goal,
                       int extra, double radius) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Roadmap G({Rational(0), Rational(0)}, goal.box.center(), goal);
    for (int i = 0; i < extra; ++i) {
        G.grow({rational_from_double(u(rng)), rational_from_double(u(rng))}, radius, ws, goal);
    }
    G.grow(G.vertex(0), radius, ws, goal);
    G.grow(G.vertex(1), radius, ws, goal);
    return G;
}

void criterion_4() {
    auto t0 = Clock::now();
    Workspace ws;
    ws.bounds = Box{{Rational(0), Rational(0)}, {Rational(1), Rational(1)}};
    GoalRegion goal{Box{{Rational(3, 4), Rational(3, 4)}, {Rational(1), Rational(1)}}};
    std::mt19937_64 rng(4004);
    bool ok = true;

    std::uniform_int_distribution<int> n_cuts(0, 4), cut_size(1, 3);
    for (int trial = 0; trial < 200 && ok; ++trial) {
        Roadmap G = random_roadmap(rng, ws, goal, 10, 0.45);
        std::vector<Cut> cuts;
        if (G.edge_count() > 0) {
            std::uniform_int_distribution<std::uint64_t> pick(0, G.edge_count() - 1);
            for (int c = n_cuts(rng); c > 0; --c) {
                Cut cut{{}, CutKind::geometric, 0};
                for (int i = cut_size(rng); i > 0; --i) {
                    std::uint64_t e = pick(rng);
                    if (std::find(cut.edges.begin(), cut.edges.end(), e) == cut.edges.end()) {
                        cut.edges.push_back(e);
                    }
                }
                cuts.push_back(std::move(cut));
            }
        }
        auto oracle = enumerate_oracle(G, goal, cuts);
        auto got = solve_cmcp(G, goal, cuts);
        if (oracle.has_value() != got.has_value()) ok = false;
        if (ok && oracle &&
            std::abs(path_cost(G, *got) - path_cost(G, *oracle)) > 1e-9) {
            ok = false;
        }
    }
    for (int trial = 0; trial < 100 && ok; ++trial) {
        Roadmap G = random_roadmap(rng, ws, goal, 400, 0.12);
        double oracle = dijkstra_cost(G);
        auto got = solve_mcp(G, goal);
        if (got.has_value() != std::isfinite(oracle)) ok = false;
        if (ok && got && std::abs(path_cost(G, *got) - oracle) > 1e-9) ok = false;
    }
    double secs = seconds_since(t0);
    report(4, "constrained search matches enumeration (200 small graphs) and "
              "plain search matches Dijkstra (100 graphs, <=500 vertices), under 60s",
           ok && secs < 60.0, secs);
}

// --- 5-7: end-to-end benchmark on generated instances ---------------------

bool plan_exactly_collision_free(const SmoothPlan& sp, const Workspace& ws) {
    std::vector<std::vector<AffineConstraint>> expanded(ws.obstacles.size());
    for (std::size_t o = 0; o < ws.obstacles.size(); ++o) {
        for (const auto& g : ws.obstacles[o].constraints) {
            expanded[o].push_back(expand_constraint(g, ws.delta(o)));
        }
    }
    for (const auto& piece : sp.pieces) {
        for (int k = 0; k <= 64; ++k) {
            Point p = piece.eval(Rational(k, 64));
            for (const auto& cs : expanded) {
                bool inside = true;
                for (const auto& g : cs) {
                    if (sign(constraint_eval(g, p)) > 0) {
                        inside = false;
                        break;
                    }
                }
                if (inside) return false;
            }
        }
    }
    return true;
}

struct BenchRun {
    bool solved = false;
    double cost = 0;
    double ttf_ms = 0;
    std::size_t pieces = 0;
    bool valid = false;
};

BenchRun one_run(const Instance& inst, std::uint64_t seed, CutMode mode) {
    PlannerConfig cfg;
    cfg.seed = seed;
    cfg.timeout_s = 60.0;
    cfg.cut_mode = mode;
    PlannerResult res = plan(inst.ws, inst.q0, inst.goal, inst.constraints, cfg);
    BenchRun r;
    r.solved = res.best.has_value();
    if (r.solved) {
        r.cost = res.cost;
        r.ttf_ms = res.time_to_first_ms;
        r.pieces = res.best->piece_count();
        r.valid = plan_exactly_collision_free(*res.best, inst.ws);
    }
    return r;
}

std::vector<Instance> g_instances;
std::vector<BenchRun> g_multi_runs;  // 20 instances x 3 seeds, multi-edge cuts

void criterion_5() {
    auto t0 = Clock::now();
    for (std::uint64_t i = 0; i < 20; ++i) {
        GeneratorConfig gen;
        gen.seed = 400 + i;
        g_instances.push_back(generate_instance(gen));
    }
    const std::uint64_t seeds[3] = {1, 42, 567};
    int solved = 0, invalid = 0;
    std::vector<double> ttf;
    for (const auto& inst : g_instances) {
        for (auto seed : seeds) {
            BenchRun r = one_run(inst, seed, CutMode::multi);
            g_multi_runs.push_back(r);
            if (r.solved) {
                ++solved;
                ttf.push_back(r.ttf_ms);
                if (!r.valid) ++invalid;
            }
        }
    }
    std::sort(ttf.begin(), ttf.end());
    double median = ttf.empty() ? 1e18 : ttf[ttf.size() / 2];
    // one rendered artifact for inspection
    {
        PlannerConfig cfg;
        cfg.seed = 42;
        cfg.timeout_s = 60.0;
        const Instance& inst = g_instances.front();
        PlannerResult res = plan(inst.ws, inst.q0, inst.goal, inst.constraints, cfg);
        if (res.best) {
            write_svg((g_work_dir / "sample_plan.svg").string(), inst,
                      res.roadmap ? &*res.roadmap : nullptr, &*res.best);
            std::ofstream((g_work_dir / "sample_result.json"))
                << result_to_json(inst, res, 42);
        }
    }
    double secs = seconds_since(t0);
    bool ok = solved >= 54 && invalid == 0 && median < 5000.0;
    std::cout << "       solved " << solved << "/60, invalid " << invalid
              << ", median time-to-first " << median << " ms\n";
    report(5, "20 generated instances x 3 seeds: >=90% solved, every plan exactly "
              "collision free on a dense grid, median time-to-first under 5s",
           ok, secs);
}

void criterion_6() {
    auto t0 = Clock::now();
    const std::uint64_t seeds[3] = {1, 42, 567};
    int pairs = 0, multi_no_worse = 0;
    double multi_sum = 0, single_sum = 0;
    std::ofstream scatter(g_work_dir / "cut_mode_scatter.csv");
    scatter << "instance,seed,multi_cost,single_cost\n";
    for (std::size_t i = 0; i < g_instances.size(); ++i) {
        for (int k = 0; k < 3; ++k) {
            const BenchRun& m = g_multi_runs[i * 3 + k];
            BenchRun s = one_run(g_instances[i], seeds[k], CutMode::single);
            if (!m.solved || !s.solved) continue;
            ++pairs;
            multi_sum += m.cost;
            single_sum += s.cost;
            if (m.cost <= s.cost + 1e-6) ++multi_no_worse;
            scatter << i << ',' << seeds[k] << ',' << m.cost << ',' << s.cost << '\n';
        }
    }
    double secs = seconds_since(t0);
    bool ok = pairs > 0 && multi_no_worse * 2 >= pairs && multi_sum <= single_sum + 1e-6;
    std::cout << "       pairs " << pairs << ", multi no worse in " << multi_no_worse
              << ", mean multi " << (pairs ? multi_sum / pairs : 0) << " vs single "
              << (pairs ? single_sum / pairs : 0) << "\n";
    report(6, "multi-edge cuts cost no more than single-edge cuts in >=50% of "
              "solved pairs and on average",
           ok, secs);
}

void criterion_7() {
    auto t0 = Clock::now();
    int solved = 0, short_plans = 0, trivial = 0;
    for (const auto& r : g_multi_runs) {
        if (!r.solved) continue;
        ++solved;
        if (r.pieces <= 6) ++short_plans;
        if (r.pieces < 2) ++trivial;
    }
    double secs = seconds_since(t0);
    bool ok = solved > 0 && short_plans * 2 >= solved && trivial == 0;
    std::cout << "       " << short_plans << "/" << solved
              << " plans with <=6 pieces, " << trivial << " with <2\n";
    report(7, ">=50% of solved plans use at most 6 pieces and none fewer than 2",
           ok, secs);
}

// --- 8: anytime improvement ----------------------------------------------

void criterion_8() {
    auto t0 = Clock::now();
    bool ok = true;
    for (std::uint64_t i = 0; i < 10 && ok; ++i) {
        PlannerConfig cfg;
        cfg.seed = 9000 + i;
        cfg.timeout_s = 30.0;
        cfg.anytime = true;
        const Instance& inst = g_instances[i % g_instances.size()];
        PlannerResult res = plan(inst.ws, inst.q0, inst.goal, inst.constraints, cfg);
        if (!res.best || res.incumbent_costs.empty()) {
            ok = false;
            break;
        }
        for (std::size_t k = 1; k < res.incumbent_costs.size(); ++k) {
            if (res.incumbent_costs[k] >= res.incumbent_costs[k - 1]) ok = false;
        }
        if (std::abs(res.cost - res.incumbent_costs.back()) > 1e-12) ok = false;
    }
    double secs = seconds_since(t0);
    report(8, "10 anytime runs (30s): incumbent costs strictly decrease and the "
              "final cost is the last incumbent",
           ok, secs);
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; i += 2) {
        if (std::strcmp(argv[i], "--work-dir") == 0) g_work_dir = argv[i + 1];
    }
    std::filesystem::create_directories(g_work_dir);

    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();

    std::cout << (g_failures == 0 ? "all criteria passed" : "criteria failed") << std::endl;
    return g_failures == 0 ? 0 : 1;
}
