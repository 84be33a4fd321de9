#include <cutplan/generator.hpp>

#include <queue>
#include <random>
#include <stdexcept>

namespace cutplan {

namespace {

int occupied_neighbors(const OccupancyGrid& g, std::size_t r, std::size_t c) {
    int n = 0;
    for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
            if (dr == 0 && dc == 0) continue;
            long rr = static_cast<long>(r) + dr;
            long cc = static_cast<long>(c) + dc;
            if (rr < 0 || cc < 0 || rr >= static_cast<long>(g.rows) ||
                cc >= static_cast<long>(g.cols)) {
                continue;  // outside counts as free: no walls at the border
            }
            n += g.at(rr, cc);
        }
    }
    return n;
}

OccupancyGrid rough_grid(const GeneratorConfig& cfg, std::uint64_t seed) {
    OccupancyGrid g;
    g.rows = cfg.rows;
    g.cols = cfg.cols;
    g.cells.assign(g.rows * g.cols, 0);
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution fill(cfg.fill);
    for (auto& c : g.cells) c = fill(rng) ? 1 : 0;
    for (int round = 0; round < cfg.smoothing_rounds; ++round) {
        OccupancyGrid next = g;
        for (std::size_t r = 0; r < g.rows; ++r) {
            for (std::size_t c = 0; c < g.cols; ++c) {
                int n = occupied_neighbors(g, r, c);
                next.at(r, c) = (n >= 5 || (g.at(r, c) && n >= 4)) ? 1 : 0;
            }
        }
        g = std::move(next);
    }
    return g;
}

void clear_block(OccupancyGrid& g, std::size_t r0, std::size_t r1, std::size_t c0,
                 std::size_t c1) {
    for (std::size_t r = r0; r <= r1; ++r) {
        for (std::size_t c = c0; c <= c1; ++c) g.at(r, c) = 0;
    }
}

}  // namespace

bool grid_connected(const OccupancyGrid& grid, std::size_t r0, std::size_t c0,
                    std::size_t r1, std::size_t c1) {
    if (grid.at(r0, c0) || grid.at(r1, c1)) return false;
    std::vector<std::uint8_t> seen(grid.rows * grid.cols, 0);
    std::queue<std::pair<std::size_t, std::size_t>> q;
    q.push({r0, c0});
    seen[r0 * grid.cols + c0] = 1;
    const int dr[4] = {1, -1, 0, 0};
    const int dc[4] = {0, 0, 1, -1};
    while (!q.empty()) {
        auto [r, c] = q.front();
        q.pop();
        if (r == r1 && c == c1) return true;
        for (int k = 0; k < 4; ++k) {
            long rr = static_cast<long>(r) + dr[k];
            long cc = static_cast<long>(c) + dc[k];
            if (rr < 0 || cc < 0 || rr >= static_cast<long>(grid.rows) ||
                cc >= static_cast<long>(grid.cols)) {
                continue;
            }
            std::size_t idx = rr * grid.cols + cc;
            if (seen[idx] || grid.cells[idx]) continue;
            seen[idx] = 1;
            q.push({static_cast<std::size_t>(rr), static_cast<std::size_t>(cc)});
        }
    }
    return false;
}

Instance generate_instance(const GeneratorConfig& cfg) {
    if (cfg.rows < 4 || cfg.cols < 4) throw std::invalid_argument("grid too small");
    std::size_t mid = cfg.cols / 2;
    for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
        OccupancyGrid g = rough_grid(cfg, cfg.seed + attempt);
        // start pocket at the bottom center, goal pocket at the top center
        clear_block(g, 0, 1, mid - 1, mid + 1);
        clear_block(g, cfg.rows - 2, cfg.rows - 1, mid - 1, mid + 1);
        if (!grid_connected(g, 0, mid, cfg.rows - 1, mid)) continue;

        Instance inst;
        const Rational& res = cfg.resolution;
        inst.ws.bounds = Box{{Rational(0), Rational(0)},
                             {Rational(static_cast<long>(cfg.cols)) * res,
                              Rational(static_cast<long>(cfg.rows)) * res}};
        inst.ws.obstacles = grid_to_polytopes(g, res);
        inst.ws.clearance.assign(inst.ws.obstacles.size(), cfg.clearance);
        inst.q0 = {(Rational(static_cast<long>(mid)) + Rational(1, 2)) * res,
                   Rational(1, 2) * res};
        inst.goal.box =
            Box{{Rational(static_cast<long>(mid - 1)) * res,
                 Rational(static_cast<long>(cfg.rows - 2)) * res},
                {Rational(static_cast<long>(mid + 2)) * res,
                 Rational(static_cast<long>(cfg.rows)) * res}};
        if (!point_free(inst.q0, inst.ws)) continue;  // clearance squeezed the pocket shut
        return inst;
    }
    throw std::runtime_error("no connected instance found in 1000 attempts");
}

}  // namespace cutplan
