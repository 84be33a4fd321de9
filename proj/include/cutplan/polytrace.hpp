#pragma once

#include <cutplan/geometry.hpp>
#include <cutplan/polynomial.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace cutplan {

// One polynomial curve piece, d components over the shared domain [0, 1].
struct CurvePiece {
    std::vector<UniPoly> components;

    std::size_t dim() const { return components.size(); }
    Point eval(const Rational& t) const {
        Point p(components.size());
        for (std::size_t j = 0; j < components.size(); ++j) p[j] = components[j].eval(t);
        return p;
    }
};

// Atoms with no roots in open (0,1) keep a constant truth value there and
// need only one evaluation; the zero polynomial is inertial with sign 0.
struct InertialFilterResult {
    std::vector<std::pair<std::size_t, int>> inertial;  // (atom index, constant sign)
    std::vector<std::size_t> active;
};
InertialFilterResult inertial_filter(const std::vector<UniPoly>& atoms);

struct TraceEntry {
    bool is_breakpoint;
    std::optional<Interval> where;  // breakpoints only; degenerate for rational roots
    std::uint64_t members;          // bit l set iff atom l is satisfied here
};

struct Trace {
    std::size_t atom_count = 0;
    std::vector<TraceEntry> entries;

    std::uint64_t full_mask() const {
        return atom_count == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << atom_count) - 1);
    }
    bool visits_full_region() const {
        for (const auto& e : entries) {
            if (e.members == full_mask()) return true;
        }
        return false;
    }
    bool always_full_region() const {
        for (const auto& e : entries) {
            if (e.members != full_mask()) return false;
        }
        return true;
    }
};

// Trace of precomposed univariate atoms p_l over [0, 1]. Subinterval entries
// use strict satisfaction p_l < 0 at a rational sample (plus inertial with
// sign <= 0); breakpoint entries use p_l <= 0, so vanishing atoms count.
// Endpoints t = 0 and t = 1 always appear as breakpoint entries.
Trace trace_atoms(const std::vector<UniPoly>& atoms, bool use_inertial_filter = true);

// Composes every constraint with the curve and traces the resulting atoms.
Trace trace(const CurvePiece& curve, const std::vector<AffineConstraint>& constraints,
            bool use_inertial_filter = true);

// True iff the curve meets the delta-expanded obstacle, i.e. some trace
// entry satisfies every expanded constraint simultaneously. Grazing contact
// at a single parameter counts (obstacles are closed).
bool intersects_obstacle(const CurvePiece& curve, const Polytope& obstacle,
                         const Rational& delta, bool use_inertial_filter = true);

}  // namespace cutplan
