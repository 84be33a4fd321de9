#include <doctest.h>

#include <cutplan/spline.hpp>

#include <random>

using namespace cutplan;

namespace {

GeometricPlan line_plan(std::vector<std::pair<long, long>> pts) {
    GeometricPlan p;
    for (auto [x, y] : pts) p.waypoints.push_back({Rational(x), Rational(y)});
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) p.edges.push_back(i);
    return p;
}

// Exact check of every constraint family on a fitted plan; zero tolerance.
void check_all_constraints(const SmoothPlan& sp) {
    const std::size_t N = sp.piece_count();
    const std::size_t d = sp.dim();
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const auto& c = sp.pieces[i].components[j];
            CHECK(c.eval(Rational(0)) == sp.source.waypoints[i][j]);
            CHECK(c.eval(Rational(1)) == sp.source.waypoints[i + 1][j]);
        }
    }
    for (std::size_t i = 0; i + 1 < N; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const auto& a = sp.pieces[i].components[j];
            const auto& b = sp.pieces[i + 1].components[j];
            CHECK(a.derivative().eval(Rational(1)) == b.derivative().eval(Rational(0)));
            CHECK(a.derivative().derivative().eval(Rational(1)) ==
                  b.derivative().derivative().eval(Rational(0)));
        }
    }
    for (std::size_t j = 0; j < d; ++j) {
        CHECK(sp.pieces.front().components[j].derivative().derivative()
                  .eval(Rational(0)).is_zero());
        CHECK(sp.pieces.back().components[j].derivative().derivative()
                  .eval(Rational(1)).is_zero());
    }
}

GeometricPlan random_plan(std::mt19937_64& rng, std::size_t n_pieces, std::size_t d = 2) {
    std::uniform_int_distribution<int> num(-40, 40);
    std::uniform_int_distribution<int> den(1, 16);
    GeometricPlan p;
    while (p.waypoints.size() < n_pieces + 1) {
        Point q(d);
        for (std::size_t j = 0; j < d; ++j) q[j] = Rational(num(rng), den(rng));
        if (!p.waypoints.empty() && q == p.waypoints.back()) continue;
        p.waypoints.push_back(std::move(q));
    }
    for (std::size_t i = 0; i < n_pieces; ++i) p.edges.push_back(i);
    return p;
}

}  // namespace

TEST_CASE("single segment fit is the straight line") {
    auto sp = fit(line_plan({{0, 0}, {1, 0}}));
    REQUIRE(sp.piece_count() == 1);
    CHECK(sp.pieces[0].components[0] == UniPoly({Rational(0), Rational(1)}));
    CHECK(sp.pieces[0].components[1].is_zero());
    check_all_constraints(sp);
}

TEST_CASE("collinear equally spaced waypoints stay linear") {
    auto sp = fit(line_plan({{0, 0}, {1, 0}, {2, 0}}));
    for (const auto& piece : sp.pieces) {
        CHECK(piece.components[0].degree() <= 1);
        CHECK(piece.components[1].degree() <= 1);
    }
    check_all_constraints(sp);

    auto sp3 = fit(line_plan({{0, 0}, {1, 1}, {2, 2}, {3, 3}}));
    for (const auto& piece : sp3.pieces) {
        for (const auto& c : piece.components) CHECK(c.degree() <= 1);
    }
}

TEST_CASE("all constraint families hold exactly on random fits") {
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<std::size_t> np(1, 9);
    for (int iter = 0; iter < 40; ++iter) {
        auto sp = fit(random_plan(rng, np(rng)));
        check_all_constraints(sp);
    }
}

TEST_CASE("fit is dimension permutation equivariant") {
    std::mt19937_64 rng(53);
    auto plan = random_plan(rng, 4);
    GeometricPlan swapped = plan;
    for (auto& q : swapped.waypoints) std::swap(q[0], q[1]);
    auto a = fit(plan);
    auto b = fit(swapped);
    for (std::size_t i = 0; i < a.piece_count(); ++i) {
        CHECK(a.pieces[i].components[0] == b.pieces[i].components[1]);
        CHECK(a.pieces[i].components[1] == b.pieces[i].components[0]);
    }
}

TEST_CASE("fit rejects degenerate inputs") {
    GeometricPlan empty;
    CHECK_THROWS_AS(fit(empty), std::invalid_argument);
    GeometricPlan dup;
    dup.waypoints = {{Rational(0), Rational(0)}, {Rational(0), Rational(0)}};
    dup.edges = {0};
    CHECK_THROWS_AS(fit(dup), std::invalid_argument);
}

TEST_CASE("eval piece selection and continuity at grid points") {
    std::mt19937_64 rng(59);
    auto sp = fit(random_plan(rng, 5));
    const std::size_t N = 5;
    CHECK(eval(sp, Rational(0)) == sp.source.waypoints.front());
    CHECK(eval(sp, Rational(1)) == sp.source.waypoints.back());
    for (auto v : eval(sp, Rational(1), 2)) CHECK(v.is_zero());
    for (std::size_t i = 1; i < N; ++i) {
        Rational t(static_cast<long>(i), static_cast<long>(N));
        CHECK(eval(sp, t) == sp.source.waypoints[i]);
        // derivative approached through either piece agrees
        for (int order = 0; order <= 2; ++order) {
            Point left(2), right(2);
            for (std::size_t j = 0; j < 2; ++j) {
                UniPoly pl = sp.pieces[i - 1].components[j];
                UniPoly pr = sp.pieces[i].components[j];
                for (int o = 0; o < order; ++o) {
                    pl = pl.derivative();
                    pr = pr.derivative();
                }
                left[j] = pl.eval(Rational(1));
                right[j] = pr.eval(Rational(0));
            }
            CHECK(left == right);
        }
    }
    CHECK_THROWS_AS(eval(sp, Rational(3, 2)), std::domain_error);
    CHECK_THROWS_AS(eval(sp, Rational(-1, 2)), std::domain_error);
}

TEST_CASE("rationalize") {
    // exact dyadic input is unchanged
    auto sp = fit(line_plan({{0, 0}, {1, 0}}));
    auto r = rationalize(sp);
    CHECK(r.pieces[0].components[0] == sp.pieces[0].components[0]);

    // a linear piece with a non-dyadic slope gets snapped, endpoints exact
    SmoothPlan lin;
    lin.source.waypoints = {{Rational(0)}, {Rational(3, 10)}};
    lin.source.edges = {0};
    lin.pieces.resize(1);
    lin.pieces[0].components = {UniPoly({Rational(0), Rational(3, 10)})};
    auto rr = rationalize(lin);
    CHECK(rr.pieces[0].components[0].eval(Rational(0)) == Rational(0));
    CHECK(rr.pieces[0].components[0].eval(Rational(1)) == Rational(3, 10));

    // zero spline stays zero
    SmoothPlan z;
    z.source.waypoints = {{Rational(0)}, {Rational(0)}};
    z.source.edges = {0};
    z.pieces.resize(1);
    z.pieces[0].components = {UniPoly()};
    CHECK(rationalize(z).pieces[0].components[0].is_zero());
}
