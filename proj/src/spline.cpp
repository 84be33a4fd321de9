#include <cutplan/spline.hpp>

#include <stdexcept>

namespace cutplan {

namespace {

// Solves M x = rhs[k] for all right-hand sides by rational Gaussian
// elimination with partial (first-nonzero) pivoting.
std::vector<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> M,
                                                std::vector<std::vector<Rational>> rhs) {
    const std::size_t n = M.size();
    const std::size_t m = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && M[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::runtime_error("spline fit: singular system");
        if (piv != col) {
            std::swap(M[piv], M[col]);
            for (std::size_t k = 0; k < m; ++k) std::swap(rhs[k][piv], rhs[k][col]);
        }
        for (std::size_t row = col + 1; row < n; ++row) {
            if (M[row][col].is_zero()) continue;
            Rational f = M[row][col] / M[col][col];
            for (std::size_t j = col; j < n; ++j) M[row][j] -= f * M[col][j];
            for (std::size_t k = 0; k < m; ++k) rhs[k][row] -= f * rhs[k][col];
        }
    }
    std::vector<std::vector<Rational>> x(m, std::vector<Rational>(n));
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = n; i-- > 0;) {
            Rational acc = rhs[k][i];
            for (std::size_t j = i + 1; j < n; ++j) acc -= M[i][j] * x[k][j];
            x[k][i] = acc / M[i][i];
        }
    }
    return x;
}

}  // namespace

SmoothPlan fit(const GeometricPlan& plan) {
    const std::size_t N = plan.piece_count();
    if (N < 1) throw std::invalid_argument("fit: need at least two waypoints");
    const std::size_t d = plan.waypoints.front().size();
    for (std::size_t i = 0; i + 1 < plan.waypoints.size(); ++i) {
        if (plan.waypoints[i] == plan.waypoints[i + 1]) {
            throw std::invalid_argument("fit: consecutive waypoints coincide");
        }
    }

    // unknowns per piece i: alpha (4i), beta (4i+1), kappa (4i+2), delta (4i+3)
    const std::size_t n = 4 * N;
    std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n, Rational(0)));
    std::vector<std::vector<Rational>> rhs(d, std::vector<Rational>(n, Rational(0)));
    std::size_t row = 0;
    auto A = [&](std::size_t i) { return 4 * i; };
    for (std::size_t i = 0; i < N; ++i) {
        // a_i(0) = q_i
        M[row][A(i) + 3] = 1;
        for (std::size_t j = 0; j < d; ++j) rhs[j][row] = plan.waypoints[i][j];
        ++row;
        // a_i(1) = q_{i+1}
        for (int k = 0; k < 4; ++k) M[row][A(i) + k] = 1;
        for (std::size_t j = 0; j < d; ++j) rhs[j][row] = plan.waypoints[i + 1][j];
        ++row;
    }
    for (std::size_t i = 0; i + 1 < N; ++i) {
        // 3 alpha_i + 2 beta_i + kappa_i - kappa_{i+1} = 0
        M[row][A(i)] = 3;
        M[row][A(i) + 1] = 2;
        M[row][A(i) + 2] = 1;
        M[row][A(i + 1) + 2] = -1;
        ++row;
        // 6 alpha_i + 2 beta_i - 2 beta_{i+1} = 0
        M[row][A(i)] = 6;
        M[row][A(i) + 1] = 2;
        M[row][A(i + 1) + 1] = -2;
        ++row;
    }
    M[row][A(0) + 1] = 2;  // 2 beta_0 = 0
    ++row;
    M[row][A(N - 1)] = 6;  // 6 alpha_{N-1} + 2 beta_{N-1} = 0
    M[row][A(N - 1) + 1] = 2;
    ++row;
    if (row != n) throw std::logic_error("fit: constraint count mismatch");

    auto sol = solve_linear(std::move(M), std::move(rhs));

    SmoothPlan out;
    out.source = plan;
    out.pieces.resize(N);
    for (std::size_t i = 0; i < N; ++i) {
        out.pieces[i].components.resize(d);
        for (std::size_t j = 0; j < d; ++j) {
            out.pieces[i].components[j] = UniPoly(
                {sol[j][A(i) + 3], sol[j][A(i) + 2], sol[j][A(i) + 1], sol[j][A(i)]});
        }
    }
    return out;
}

Point eval(const SmoothPlan& plan, const Rational& t, int order) {
    if (t.sign() < 0 || t > 1) throw std::domain_error("eval: t outside [0,1]");
    const auto N = static_cast<long>(plan.piece_count());
    Rational scaled = t * Rational(N);
    // ceil(N t), with t = 0 evaluated through the first piece
    Integer idx = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
    if (Rational(idx) < scaled) ++idx;
    if (idx < 1) idx = 1;
    auto piece = static_cast<std::size_t>(idx.convert_to<long>());
    Rational local = scaled - Rational(Integer(piece - 1));
    const CurvePiece& c = plan.pieces[piece - 1];
    Point out(c.dim());
    for (std::size_t j = 0; j < c.dim(); ++j) {
        UniPoly p = c.components[j];
        for (int o = 0; o < order; ++o) p = p.derivative();
        out[j] = p.eval(local);
    }
    return out;
}

SmoothPlan rationalize(const SmoothPlan& plan) {
    SmoothPlan out = plan;
    for (std::size_t i = 0; i < plan.piece_count(); ++i) {
        for (std::size_t j = 0; j < plan.dim(); ++j) {
            const auto& c = plan.pieces[i].components[j];
            Rational alpha = dyadic_approx(c.coeff(3), 14);
            Rational beta = dyadic_approx(c.coeff(2), 14);
            const Rational& q0 = plan.source.waypoints[i][j];
            const Rational& q1 = plan.source.waypoints[i + 1][j];
            Rational delta = q0;
            Rational kappa = q1 - q0 - alpha - beta;
            out.pieces[i].components[j] = UniPoly({delta, kappa, beta, alpha});
        }
    }
    return out;
}

}  // namespace cutplan
