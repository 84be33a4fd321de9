#include <cutplan/polytrace.hpp>

#include <stdexcept>

namespace cutplan {

InertialFilterResult inertial_filter(const std::vector<UniPoly>& atoms) {
    InertialFilterResult res;
    Interval open01{Rational(0), Rational(1)};
    for (std::size_t l = 0; l < atoms.size(); ++l) {
        if (atoms[l].is_zero()) {
            res.inertial.emplace_back(l, 0);
            continue;
        }
        UniPoly sf = atoms[l].squarefree_part().primitive_part();
        if (descartes_bound(sf, open01) == 0) {
            res.inertial.emplace_back(l, atoms[l].sign_at(Rational(1, 2)));
        } else {
            res.active.push_back(l);
        }
    }
    return res;
}

namespace {

struct ActiveAtom {
    std::size_t index;
    const UniPoly* atom;
    UniPoly sf;  // squarefree primitive part, same roots
};

std::uint64_t bit(std::size_t l) { return std::uint64_t(1) << l; }

// Membership with p <= 0 semantics at an exact rational parameter.
std::uint64_t members_at_point(const std::vector<UniPoly>& atoms, const Rational& t) {
    std::uint64_t m = 0;
    for (std::size_t l = 0; l < atoms.size(); ++l) {
        if (atoms[l].sign_at(t) <= 0) m |= bit(l);
    }
    return m;
}

// Refine iv until each active atom either has no root in it (constant sign)
// or provably changes sign across it. Ties the breakpoint to the atoms that
// actually vanish at the enclosed root.
void attribute_breakpoint(const UniPoly& work, std::vector<ActiveAtom>& act, Interval& iv,
                          std::vector<bool>& vanishes) {
    vanishes.assign(act.size(), false);
    for (int round = 0; round < 256 && !iv.degenerate(); ++round) {
        bool settled = true;
        for (std::size_t i = 0; i < act.size(); ++i) {
            int slo = act[i].sf.sign_at(iv.lo);
            int shi = act[i].sf.sign_at(iv.hi);
            if (slo == 0 || shi == 0) {
                settled = false;
                break;
            }
            bool cross = slo != shi;
            vanishes[i] = cross;
            if (!cross && descartes_bound(act[i].sf, iv) > 0) {
                settled = false;
                break;
            }
        }
        if (settled) return;
        refine_interval(work, iv);
    }
    if (iv.degenerate()) {
        for (std::size_t i = 0; i < act.size(); ++i) {
            vanishes[i] = act[i].atom->eval(iv.lo).is_zero();
        }
    }
}

}  // namespace

Trace trace_atoms(const std::vector<UniPoly>& atoms, bool use_inertial_filter) {
    if (atoms.size() > 64) throw std::domain_error("trace_atoms: more than 64 constraints");
    Trace tr;
    tr.atom_count = atoms.size();

    std::uint64_t inertial_sat = 0;   // inertial atoms with constant sign <= 0
    std::vector<ActiveAtom> act;
    if (use_inertial_filter) {
        auto filt = inertial_filter(atoms);
        for (auto [l, s] : filt.inertial) {
            if (s <= 0) inertial_sat |= bit(l);
        }
        for (std::size_t l : filt.active) {
            act.push_back({l, &atoms[l], atoms[l].squarefree_part().primitive_part()});
        }
    } else {
        for (std::size_t l = 0; l < atoms.size(); ++l) {
            if (atoms[l].is_zero()) {
                inertial_sat |= bit(l);
            } else {
                act.push_back({l, &atoms[l], atoms[l].squarefree_part().primitive_part()});
            }
        }
    }

    auto subinterval_members = [&](const Rational& sample) {
        std::uint64_t m = inertial_sat;
        for (const auto& a : act) {
            if (a.atom->sign_at(sample) < 0) m |= bit(a.index);
        }
        return m;
    };

    tr.entries.push_back({true, Interval{Rational(0), Rational(0)},
                          members_at_point(atoms, Rational(0))});

    std::vector<Interval> roots;
    UniPoly work;
    if (!act.empty()) {
        UniPoly product = UniPoly::constant(Rational(1));
        for (const auto& a : act) product = (product * a.sf).primitive_part();
        auto iso = isolate_roots_ex(product, Interval{Rational(0), Rational(1)});
        work = std::move(iso.deflated);
        for (auto& iv : iso.intervals) {
            if (iv.degenerate() && (iv.lo.is_zero() || iv.lo == 1)) continue;  // endpoint entries
            while (!iv.degenerate() && (iv.lo.is_zero() || iv.hi == 1)) {
                refine_interval(work, iv);
            }
            roots.push_back(std::move(iv));
        }
    }

    Rational prev_hi(0);
    std::vector<bool> vanishes;
    for (auto& iv : roots) {
        Rational sample = (prev_hi + iv.lo) / 2;
        tr.entries.push_back({false, std::nullopt, subinterval_members(sample)});
        std::uint64_t m;
        if (iv.degenerate()) {
            m = members_at_point(atoms, iv.lo);
        } else {
            attribute_breakpoint(work, act, iv, vanishes);
            if (iv.degenerate()) {
                m = members_at_point(atoms, iv.lo);
            } else {
                m = inertial_sat;
                for (std::size_t i = 0; i < act.size(); ++i) {
                    if (vanishes[i] || act[i].atom->sign_at(iv.mid()) < 0) m |= bit(act[i].index);
                }
            }
        }
        tr.entries.push_back({true, iv, m});
        prev_hi = iv.hi;
    }
    tr.entries.push_back({false, std::nullopt, subinterval_members((prev_hi + 1) / 2)});
    tr.entries.push_back({true, Interval{Rational(1), Rational(1)},
                          members_at_point(atoms, Rational(1))});
    return tr;
}

Trace trace(const CurvePiece& curve, const std::vector<AffineConstraint>& constraints,
            bool use_inertial_filter) {
    if (constraints.empty()) throw std::domain_error("trace: no constraints");
    std::vector<UniPoly> atoms;
    atoms.reserve(constraints.size());
    for (const auto& g : constraints) {
        atoms.push_back(compose_affine_with_curve(g.a, g.b, curve.components));
    }
    return trace_atoms(atoms, use_inertial_filter);
}

bool intersects_obstacle(const CurvePiece& curve, const Polytope& obstacle,
                         const Rational& delta, bool use_inertial_filter) {
    if (delta.sign() < 0) throw std::domain_error("intersects_obstacle: negative delta");
    std::vector<AffineConstraint> expanded;
    expanded.reserve(obstacle.constraints.size());
    for (const auto& g : obstacle.constraints) {
        expanded.push_back(expand_constraint(g, delta));
    }
    return trace(curve, expanded, use_inertial_filter).visits_full_region();
}

}  // namespace cutplan
