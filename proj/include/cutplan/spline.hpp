#pragma once

#include <cutplan/polytrace.hpp>
#include <cutplan/rational.hpp>

#include <vector>

namespace cutplan {

// Waypoint path selected on the roadmap: q_0 .. q_N plus the ids of the N
// edges traversed.
struct GeometricPlan {
    std::vector<Point> waypoints;
    std::vector<std::uint64_t> edges;

    std::size_t piece_count() const { return waypoints.empty() ? 0 : waypoints.size() - 1; }
};

// Piecewise cubic, one CurvePiece per roadmap edge, C2-continuous at the
// junctions with zero boundary acceleration. Coefficients are exact.
struct SmoothPlan {
    std::vector<CurvePiece> pieces;
    GeometricPlan source;

    std::size_t piece_count() const { return pieces.size(); }
    std::size_t dim() const { return pieces.empty() ? 0 : pieces.front().dim(); }
};

// Exact rational solve of the per-dimension 4N x 4N linear system: endpoint
// interpolation, C1/C2 junction continuity, zero boundary acceleration.
SmoothPlan fit(const GeometricPlan& plan);

// Piece selection by ceil(N t); grid points evaluate through the left piece.
// order 0/1/2 gives value / first / second derivative with respect to the
// piece-local parameter.
Point eval(const SmoothPlan& plan, const Rational& t, int order = 0);

// Snaps cubic and quadratic coefficients to the 2^-14 dyadic grid and
// re-imposes endpoint interpolation exactly by re-solving the linear and
// constant coefficients per piece.
SmoothPlan rationalize(const SmoothPlan& plan);

}  // namespace cutplan
