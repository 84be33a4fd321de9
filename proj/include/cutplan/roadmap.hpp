#pragma once

#include <cutplan/geometry.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace cutplan {

struct SamplerStarved : std::runtime_error {
    SamplerStarved() : std::runtime_error("sampler rejection budget exhausted") {}
};

enum class SamplerMode { uniform, halton };

// Ball around a seed point, registered from a cut; directed draws come from
// a uniformly chosen neighborhood.
struct Neighborhood {
    Point seed;
    double radius;
};

class Sampler {
  public:
    Sampler(SamplerMode mode, std::uint64_t seed) : mode_(mode), rng_(seed) {}

    void add_neighborhood(Neighborhood n) { neighborhoods_.push_back(std::move(n)); }
    const std::vector<Neighborhood>& neighborhoods() const { return neighborhoods_; }

    // Coin-flips directed vs undirected when neighborhoods exist; see
    // sample_undirected / sample_directed for the forced variants.
    Point sample(const Workspace& ws);
    Point sample_undirected(const Workspace& ws);
    // Falls back to an undirected draw when the chosen ball is blocked.
    Point sample_directed(const Workspace& ws);

  private:
    Point halton_next(const Workspace& ws);

    SamplerMode mode_;
    std::mt19937_64 rng_;
    std::uint64_t halton_index_ = 0;
    std::vector<Neighborhood> neighborhoods_;
    static constexpr int kBudget = 10000;
};

struct RoadmapEdge {
    std::uint32_t to;
    std::uint64_t id;
    double cost;  // Euclidean length; sq_cost stays exact in the vertex store
};

class Roadmap {
  public:
    // G_0 = ({q0, q_star}, {}); both points must be free.
    Roadmap(Point q0, Point q_star, const GoalRegion& goal);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edge_endpoints_.size(); }
    const Point& vertex(std::uint32_t id) const { return vertices_[id]; }
    const std::vector<RoadmapEdge>& adjacency(std::uint32_t id) const { return adj_[id]; }
    std::uint32_t q0_id() const { return 0; }
    const std::vector<std::uint32_t>& goal_ids() const { return goal_ids_; }
    std::pair<std::uint32_t, std::uint32_t> edge_endpoints(std::uint64_t edge_id) const {
        return edge_endpoints_[edge_id];
    }
    double edge_cost(std::uint64_t edge_id) const { return edge_costs_[edge_id]; }

    // Adds q and every collision-free edge to vertices within radius r
    // (exact squared-distance compare). A point equal to an existing vertex
    // is a no-op. Returns the new vertex id.
    std::uint32_t grow(const Point& q, double r, const Workspace& ws, const GoalRegion& goal);

    // Re-checks every stored edge; used by audits and tests.
    bool audit_edges(const Workspace& ws) const;

  private:
    std::vector<Point> vertices_;
    std::vector<std::vector<RoadmapEdge>> adj_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_endpoints_;
    std::vector<double> edge_costs_;
    std::vector<std::uint32_t> goal_ids_;
};

// r_k = max(r_min, gamma (log(k+2)/(k+2))^(1/d)), gamma the bounds diameter.
double connection_radius(std::uint64_t k, std::size_t d, const Box& bounds, double r_min);

// Monte-Carlo lower bound on the dispersion of the vertex set in freespace.
double dispersion_estimate(const Roadmap& G, const Workspace& ws, int samples,
                           std::uint64_t seed);

}  // namespace cutplan
