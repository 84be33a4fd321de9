#include <cutplan/geometry.hpp>

#include <stdexcept>

namespace cutplan {

Rational constraint_eval(const AffineConstraint& g, const Point& p) {
    Rational acc = g.b;
    for (std::size_t j = 0; j < g.a.size(); ++j) acc += g.a[j] * p[j];
    return acc;
}

AffineConstraint expand_constraint(const AffineConstraint& g, const Rational& delta) {
    if (delta.sign() < 0) throw std::domain_error("expand_constraint: negative delta");
    if (delta.is_zero()) return g;
    Rational norm_sq(0);
    for (const auto& ai : g.a) norm_sq += ai * ai;
    Rational c = dyadic_sqrt_upper(norm_sq);
    return AffineConstraint{g.a, g.b - delta * c};
}

namespace {

// Clips [t0, t1] against A t + B <= 0. Returns false when the clipped
// interval becomes empty.
bool clip(const Rational& A, const Rational& B, Rational& t0, Rational& t1) {
    if (A.is_zero()) return B.sign() <= 0;
    Rational bound = -B / A;
    if (A.sign() > 0) {
        if (bound < t1) t1 = bound;
    } else {
        if (bound > t0) t0 = bound;
    }
    return t0 <= t1;
}

bool segment_hits(const Point& p, const Point& q, const Polytope& ob, const Rational& delta) {
    Rational t0(0), t1(1);
    for (const auto& g : ob.constraints) {
        AffineConstraint h = expand_constraint(g, delta);
        // h(p + t (q - p)) = A t + B
        Rational B = constraint_eval(h, p);
        Rational A(0);
        for (std::size_t j = 0; j < h.a.size(); ++j) A += h.a[j] * (q[j] - p[j]);
        if (!clip(A, B, t0, t1)) return false;
    }
    return true;
}

}  // namespace

bool segment_free(const Point& p, const Point& q, const Workspace& ws) {
    for (std::size_t i = 0; i < ws.obstacles.size(); ++i) {
        if (segment_hits(p, q, ws.obstacles[i], ws.delta(i))) return false;
    }
    return true;
}

bool point_free(const Point& p, const Workspace& ws) {
    if (!ws.bounds.contains(p)) return false;
    for (std::size_t i = 0; i < ws.obstacles.size(); ++i) {
        bool inside = true;
        for (const auto& g : ws.obstacles[i].constraints) {
            AffineConstraint h = expand_constraint(g, ws.delta(i));
            if (constraint_eval(h, p).sign() > 0) {
                inside = false;
                break;
            }
        }
        if (inside) return false;
    }
    return true;
}

Polytope make_rect(const Rational& x0, const Rational& x1,
                   const Rational& y0, const Rational& y1, int id) {
    Polytope p;
    p.id = id;
    p.constraints = {
        {{Rational(-1), Rational(0)}, x0},   // -x + x0 <= 0  (x >= x0)
        {{Rational(1), Rational(0)}, -x1},   //  x - x1 <= 0
        {{Rational(0), Rational(-1)}, y0},
        {{Rational(0), Rational(1)}, -y1},
    };
    return p;
}

std::vector<Polytope> grid_to_polytopes(const OccupancyGrid& grid, const Rational& resolution) {
    if (resolution.sign() <= 0) throw std::domain_error("grid_to_polytopes: resolution <= 0");
    std::vector<Polytope> out;
    if (grid.rows == 0 || grid.cols == 0) return out;
    std::vector<std::uint8_t> covered(grid.rows * grid.cols, 0);
    for (std::size_t r = 0; r < grid.rows; ++r) {
        for (std::size_t c = 0; c < grid.cols; ++c) {
            if (!grid.at(r, c) || covered[r * grid.cols + c]) continue;
            // grow width across row r
            std::size_t w = 1;
            while (c + w < grid.cols && grid.at(r, c + w)) ++w;
            // grow height while the whole row segment stays occupied
            std::size_t h = 1;
            while (r + h < grid.rows) {
                bool full = true;
                for (std::size_t k = 0; k < w; ++k) {
                    if (!grid.at(r + h, c + k)) {
                        full = false;
                        break;
                    }
                }
                if (!full) break;
                ++h;
            }
            for (std::size_t dr = 0; dr < h; ++dr) {
                for (std::size_t dc = 0; dc < w; ++dc) {
                    covered[(r + dr) * grid.cols + (c + dc)] = 1;
                }
            }
            Rational x0 = Rational(static_cast<long>(c)) * resolution;
            Rational x1 = Rational(static_cast<long>(c + w)) * resolution;
            Rational y0 = Rational(static_cast<long>(r)) * resolution;
            Rational y1 = Rational(static_cast<long>(r + h)) * resolution;
            out.push_back(make_rect(x0, x1, y0, y1, static_cast<int>(out.size())));
        }
    }
    return out;
}

}  // namespace cutplan
