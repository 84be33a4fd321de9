#pragma once

#include <cutplan/spline.hpp>

#include <vector>

namespace cutplan {

// Affine constraint over the stacked vector (rho, rho', rho'') in R^{3d}:
// coeff . (rho, rho', rho'') + offset <= 0.
struct DifferentialConstraint {
    std::vector<Rational> coeff;
    Rational offset;
};

struct DifferentialConstraintSet {
    std::vector<DifferentialConstraint> polynomial;
    double phi_max = 1.5707963267948966;  // steering-angle bound, radians
};

enum class ViolationKind { polynomial, curvature };

struct Violation {
    std::size_t piece;  // 0-based
    ViolationKind kind;
};

// Per piece, composes each constraint over (a_j, a_j', a_j'') and traces the
// atoms; a piece violates when some trace entry fails to satisfy every
// constraint simultaneously.
std::vector<Violation> check_polynomial_constraints(const SmoothPlan& plan,
                                                    const DifferentialConstraintSet& cs);

// Steering-angle check of the tangent over (0, 1/2) and (1/2, 1) per piece,
// planar only. Angles are compared through cosines; a tie at exactly phi_max
// is accepted. A vanishing tangent at a sample parameter is a violation.
std::vector<Violation> check_curvature(const SmoothPlan& plan, double phi_max);

// Edge indices {j-1, j, j+1} (1-based, clamped to [1, N]) around a violating
// piece; shared between kinematic and validity cuts.
std::vector<std::size_t> cut_edge_range(std::size_t j_one_based, std::size_t n_edges);

}  // namespace cutplan
