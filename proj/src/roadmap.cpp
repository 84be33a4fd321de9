#include <cutplan/roadmap.hpp>

#include <cmath>
#include <limits>

namespace cutplan {

namespace {

const int kPrimes[6] = {2, 3, 5, 7, 11, 13};

double halton_value(std::uint64_t index, int base) {
    double f = 1.0, r = 0.0;
    std::uint64_t i = index;
    while (i > 0) {
        f /= base;
        r += f * static_cast<double>(i % base);
        i /= base;
    }
    return r;
}

Point snap_to_freespace(double* coords, std::size_t d) {
    Point p(d);
    for (std::size_t j = 0; j < d; ++j) p[j] = dyadic_approx(coords[j], 14);
    return p;
}

}  // namespace

Point Sampler::halton_next(const Workspace& ws) {
    const std::size_t d = ws.dim();
    if (d > 6) throw std::domain_error("halton sampler supports up to 6 dimensions");
    for (int attempt = 0; attempt < kBudget; ++attempt) {
        ++halton_index_;
        double coords[6];
        for (std::size_t j = 0; j < d; ++j) {
            double u = halton_value(halton_index_, kPrimes[j]);
            coords[j] = to_double(ws.bounds.lo[j]) +
                        u * (to_double(ws.bounds.hi[j]) - to_double(ws.bounds.lo[j]));
        }
        Point p = snap_to_freespace(coords, d);
        if (point_free(p, ws)) return p;
    }
    throw SamplerStarved();
}

Point Sampler::sample_undirected(const Workspace& ws) {
    if (mode_ == SamplerMode::halton) return halton_next(ws);
    const std::size_t d = ws.dim();
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double coords[16];
    for (int attempt = 0; attempt < kBudget; ++attempt) {
        for (std::size_t j = 0; j < d; ++j) {
            coords[j] = to_double(ws.bounds.lo[j]) +
                        unit(rng_) * (to_double(ws.bounds.hi[j]) - to_double(ws.bounds.lo[j]));
        }
        Point p = snap_to_freespace(coords, d);
        if (point_free(p, ws)) return p;
    }
    throw SamplerStarved();
}

Point Sampler::sample_directed(const Workspace& ws) {
    if (neighborhoods_.empty()) return sample_undirected(ws);
    std::uniform_int_distribution<std::size_t> pick(0, neighborhoods_.size() - 1);
    const Neighborhood& nb = neighborhoods_[pick(rng_)];
    const std::size_t d = ws.dim();
    std::uniform_real_distribution<double> offset(-nb.radius, nb.radius);
    double coords[16];
    for (int attempt = 0; attempt < kBudget; ++attempt) {
        double sq = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            coords[j] = offset(rng_);
            sq += coords[j] * coords[j];
        }
        if (sq > nb.radius * nb.radius) continue;
        for (std::size_t j = 0; j < d; ++j) coords[j] += to_double(nb.seed[j]);
        Point p = snap_to_freespace(coords, d);
        if (ws.bounds.contains(p) && point_free(p, ws)) return p;
    }
    // blocked neighborhood: fall back to an undirected draw
    return sample_undirected(ws);
}

Point Sampler::sample(const Workspace& ws) {
    if (neighborhoods_.empty()) return sample_undirected(ws);
    std::bernoulli_distribution coin(0.5);
    return coin(rng_) ? sample_directed(ws) : sample_undirected(ws);
}

Roadmap::Roadmap(Point q0, Point q_star, const GoalRegion& goal) {
    vertices_.push_back(std::move(q0));
    vertices_.push_back(std::move(q_star));
    adj_.resize(2);
    for (std::uint32_t id = 0; id < 2; ++id) {
        if (goal.box.contains(vertices_[id])) goal_ids_.push_back(id);
    }
}

std::uint32_t Roadmap::grow(const Point& q, double r, const Workspace& ws,
                            const GoalRegion& goal) {
    for (std::uint32_t id = 0; id < vertices_.size(); ++id) {
        if (vertices_[id] == q) return id;  // duplicate: no-op
    }
    auto new_id = static_cast<std::uint32_t>(vertices_.size());
    vertices_.push_back(q);
    adj_.emplace_back();
    if (goal.box.contains(q)) goal_ids_.push_back(new_id);

    Rational r_sq = rational_from_double(r) * rational_from_double(r);
    for (std::uint32_t id = 0; id < new_id; ++id) {
        Rational d_sq = sq_distance(vertices_[id], q);
        if (d_sq > r_sq) continue;
        if (!segment_free(vertices_[id], q, ws)) continue;
        double cost = std::sqrt(to_double(d_sq));
        std::uint64_t e1 = edge_endpoints_.size();
        edge_endpoints_.emplace_back(id, new_id);
        edge_costs_.push_back(cost);
        adj_[id].push_back({new_id, e1, cost});
        std::uint64_t e2 = edge_endpoints_.size();
        edge_endpoints_.emplace_back(new_id, id);
        edge_costs_.push_back(cost);
        adj_[new_id].push_back({id, e2, cost});
    }
    return new_id;
}

bool Roadmap::audit_edges(const Workspace& ws) const {
    for (const auto& [from, to] : edge_endpoints_) {
        if (!segment_free(vertices_[from], vertices_[to], ws)) return false;
    }
    return true;
}

double connection_radius(std::uint64_t k, std::size_t d, const Box& bounds, double r_min) {
    double diam_sq = 0.0;
    for (std::size_t j = 0; j < bounds.dim(); ++j) {
        double s = to_double(bounds.hi[j]) - to_double(bounds.lo[j]);
        diam_sq += s * s;
    }
    double gamma = std::sqrt(diam_sq);
    double kk = static_cast<double>(k) + 2.0;
    // log(x)/x peaks at x = e; clamp with the k = 0 value to keep the
    // schedule non-increasing
    double f = std::min(std::log(kk) / kk, std::log(2.0) / 2.0);
    double r = gamma * std::pow(f, 1.0 / static_cast<double>(d));
    return std::max(r_min, r);
}

double dispersion_estimate(const Roadmap& G, const Workspace& ws, int samples,
                           std::uint64_t seed) {
    if (samples < 1) throw std::domain_error("dispersion_estimate: samples < 1");
    Sampler s(SamplerMode::uniform, seed);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        Point p = s.sample_undirected(ws);
        double best = std::numeric_limits<double>::infinity();
        for (std::uint32_t id = 0; id < G.vertex_count(); ++id) {
            best = std::min(best, std::sqrt(to_double(sq_distance(p, G.vertex(id)))));
        }
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace cutplan
