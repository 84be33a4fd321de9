#pragma once

#include <cutplan/rational.hpp>

#include <cstdint>
#include <vector>

namespace cutplan {

// g(x) = a . x + b <= 0
struct AffineConstraint {
    std::vector<Rational> a;
    Rational b;
};

struct Polytope {
    std::vector<AffineConstraint> constraints;
    int id = -1;
};

struct Box {
    Point lo;
    Point hi;

    std::size_t dim() const { return lo.size(); }
    bool contains(const Point& p) const {
        for (std::size_t j = 0; j < lo.size(); ++j) {
            if (p[j] < lo[j] || p[j] > hi[j]) return false;
        }
        return true;
    }
    Point center() const {
        Point c(lo.size());
        for (std::size_t j = 0; j < lo.size(); ++j) c[j] = (lo[j] + hi[j]) / 2;
        return c;
    }
};

struct GoalRegion {
    Box box;
};

struct OccupancyGrid {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint8_t> cells;  // row-major, 1 = occupied

    std::uint8_t at(std::size_t r, std::size_t c) const { return cells[r * cols + c]; }
    std::uint8_t& at(std::size_t r, std::size_t c) { return cells[r * cols + c]; }
};

struct Workspace {
    Box bounds;
    std::vector<Polytope> obstacles;
    std::vector<Rational> clearance;  // per obstacle, delta_i >= 0

    std::size_t dim() const { return bounds.dim(); }
    const Rational& delta(std::size_t i) const { return clearance[i]; }
};

// h(x) = g(x) - delta * c with c the smallest k/2^14 upper bound on ||a||_2.
// The satisfaction region of h contains the delta-expansion of g's region.
AffineConstraint expand_constraint(const AffineConstraint& g, const Rational& delta);

Rational constraint_eval(const AffineConstraint& g, const Point& p);

// Exact: clips the segment parameter interval against every expanded
// constraint of each obstacle; free iff every clipped interval is empty.
bool segment_free(const Point& p, const Point& q, const Workspace& ws);

// Inside bounds and outside every clearance-expanded obstacle (obstacles are
// closed, so boundary contact is a collision).
bool point_free(const Point& p, const Workspace& ws);

// Greedy cover of occupied cells by axis-aligned rectangles: scan row-major
// for an uncovered occupied cell, grow width first then height, emit. Cell
// (r, c) spans [c, c+1] x [r, r+1] scaled by resolution.
std::vector<Polytope> grid_to_polytopes(const OccupancyGrid& grid, const Rational& resolution);

// Axis-aligned rectangle [x0,x1] x [y0,y1] as 4 affine constraints.
Polytope make_rect(const Rational& x0, const Rational& x1,
                   const Rational& y0, const Rational& y1, int id = -1);

}  // namespace cutplan
