#pragma once

#include <cutplan/roadmap.hpp>
#include <cutplan/spline.hpp>

#include <optional>
#include <vector>

namespace cutplan {

enum class CutKind { geometric, kinematic };

// Forbids any path that uses every edge in `edges` simultaneously; a path
// may use at most |edges| - 1 of them.
struct Cut {
    std::vector<std::uint64_t> edges;
    CutKind kind;
    std::uint64_t iteration = 0;
};

struct SolveStats {
    std::size_t expanded = 0;
};

// Min-cost simple path from q0 to any goal vertex via A* with the Euclidean
// distance-to-goal-box heuristic. Empty optional when unreachable.
std::optional<GeometricPlan> solve_mcp(const Roadmap& G, const GoalRegion& goal,
                                       SolveStats* stats = nullptr);

struct CmcpOptions {
    // prune states with g + h >= cost_bound (anytime improvement bound)
    std::optional<double> cost_bound;
    // disable the (vertex, capped cut-usage) dominance dedup
    bool no_dedup = false;
};

// Best-first search over paths with lazy cut checking: a successor that
// would complete any cut is pruned. Falls back to plain A* semantics when
// cuts are empty.
std::optional<GeometricPlan> solve_cmcp(const Roadmap& G, const GoalRegion& goal,
                                        const std::vector<Cut>& cuts,
                                        const CmcpOptions& opts = {},
                                        SolveStats* stats = nullptr);

// Exhaustive enumeration of all simple q0-to-goal paths, filtered by the
// cuts; refuses graphs with more than 12 vertices.
std::optional<GeometricPlan> enumerate_oracle(const Roadmap& G, const GoalRegion& goal,
                                              const std::vector<Cut>& cuts);

double path_cost(const Roadmap& G, const GeometricPlan& plan);

}  // namespace cutplan
