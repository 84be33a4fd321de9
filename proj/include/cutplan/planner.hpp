#pragma once

#include <cutplan/cmcp.hpp>
#include <cutplan/kinematics.hpp>

#include <cstdint>
#include <optional>

namespace cutplan {

enum class CutMode { single, multi };
// Where directed sampling concentrates after a cut: the barycenter of the
// cut edges' endpoints, or one neighborhood per cut edge at its midpoint.
enum class SeedStateMode { barycenter, per_edge };

struct PlannerConfig {
    std::uint64_t seed = 1;
    std::optional<double> timeout_s;
    std::size_t initial_vertices = 20;
    std::size_t per_round = 10;  // half directed, half undirected
    SamplerMode sampler = SamplerMode::halton;
    CutMode cut_mode = CutMode::multi;
    SeedStateMode seed_state = SeedStateMode::barycenter;
    double r_min = 1e-3;
    bool anytime = false;
};

enum class Termination { success, timeout, trivial, starved };

struct PlannerTimings {
    double graph_ms = 0;  // sampling and roadmap growth
    double cmcp_ms = 0;
    double fit_ms = 0;
    double kinematic_ms = 0;
    double trace_ms = 0;
};

struct PlannerResult {
    std::optional<SmoothPlan> best;
    double cost = 0;        // roadmap path cost of the accepted plan
    double arc_length = 0;  // numeric arc length of the smooth plan
    std::uint64_t iterations = 0;
    std::uint64_t geometric_cuts = 0;
    std::uint64_t kinematic_cuts = 0;
    double time_to_first_ms = 0;
    PlannerTimings timings;
    Termination termination = Termination::timeout;
    // costs of successive incumbents, strictly decreasing (anytime mode)
    std::vector<double> incumbent_costs;
    // final roadmap (absent only on trivial termination)
    std::optional<Roadmap> roadmap;
};

// Grow-solve-check loop: constrained min-cost path on the lazy roadmap,
// exact cubic fit, kinematic check, then exact obstacle trace; each failed
// check adds a cut and a directed-sampling neighborhood around it.
PlannerResult plan(const Workspace& ws, const Point& q0, const GoalRegion& goal,
                   const DifferentialConstraintSet& constraints, const PlannerConfig& cfg);

// 16-point Gauss-Legendre arc length of the smooth plan (sum over pieces).
double arc_length(const SmoothPlan& plan);

}  // namespace cutplan
