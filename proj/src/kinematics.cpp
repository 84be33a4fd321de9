#include <cutplan/kinematics.hpp>

#include <cmath>
#include <stdexcept>

namespace cutplan {

std::vector<Violation> check_polynomial_constraints(const SmoothPlan& plan,
                                                    const DifferentialConstraintSet& cs) {
    std::vector<Violation> out;
    if (cs.polynomial.empty()) return out;
    const std::size_t d = plan.dim();
    for (std::size_t i = 0; i < plan.piece_count(); ++i) {
        std::vector<UniPoly> stacked;  // (a, a', a'') components
        stacked.reserve(3 * d);
        for (const auto& c : plan.pieces[i].components) stacked.push_back(c);
        for (std::size_t j = 0; j < d; ++j) stacked.push_back(stacked[j].derivative());
        for (std::size_t j = 0; j < d; ++j) stacked.push_back(stacked[d + j].derivative());

        std::vector<UniPoly> atoms;
        atoms.reserve(cs.polynomial.size());
        for (const auto& g : cs.polynomial) {
            if (g.coeff.size() != 3 * d) {
                throw std::domain_error("check_polynomial_constraints: bad constraint arity");
            }
            atoms.push_back(compose_affine_with_curve(g.coeff, g.offset, stacked));
        }
        if (!trace_atoms(atoms).always_full_region()) {
            out.push_back({i, ViolationKind::polynomial});
        }
    }
    return out;
}

namespace {

// cos of the angle between exact rational tangents, in machine reals; only
// the final square root and division are floating.
bool tangent_turn_exceeds(const Point& u, const Point& v, double cos_phi_max) {
    Rational dot(0), nu(0), nv(0);
    for (std::size_t j = 0; j < u.size(); ++j) {
        dot += u[j] * v[j];
        nu += u[j] * u[j];
        nv += v[j] * v[j];
    }
    double denom = std::sqrt(to_double(nu) * to_double(nv));
    double cos_angle = to_double(dot) / denom;
    return cos_phi_max - cos_angle > 1e-12;
}

bool is_zero_vec(const Point& p) {
    for (const auto& x : p) {
        if (!x.is_zero()) return false;
    }
    return true;
}

}  // namespace

std::vector<Violation> check_curvature(const SmoothPlan& plan, double phi_max) {
    if (plan.dim() != 2) throw std::domain_error("check_curvature: planar plans only");
    const double cos_phi_max = std::cos(phi_max);
    const Rational samples[3] = {Rational(0), Rational(1, 2), Rational(1)};
    std::vector<Violation> out;
    for (std::size_t i = 0; i < plan.piece_count(); ++i) {
        Point tang[3];
        bool bad = false;
        for (int s = 0; s < 3; ++s) {
            Point t(2);
            for (std::size_t j = 0; j < 2; ++j) {
                t[j] = plan.pieces[i].components[j].derivative().eval(samples[s]);
            }
            if (is_zero_vec(t)) {  // cusp
                bad = true;
                break;
            }
            tang[s] = std::move(t);
        }
        if (!bad) {
            bad = tangent_turn_exceeds(tang[0], tang[1], cos_phi_max) ||
                  tangent_turn_exceeds(tang[1], tang[2], cos_phi_max);
        }
        if (bad) out.push_back({i, ViolationKind::curvature});
    }
    return out;
}

std::vector<std::size_t> cut_edge_range(std::size_t j, std::size_t n_edges) {
    if (j < 1 || j > n_edges) throw std::domain_error("cut_edge_range: index out of range");
    std::size_t lo = j > 1 ? j - 1 : 1;
    std::size_t hi = j + 1 < n_edges ? j + 1 : n_edges;
    std::vector<std::size_t> out;
    for (std::size_t l = lo; l <= hi; ++l) out.push_back(l);
    return out;
}

}  // namespace cutplan
