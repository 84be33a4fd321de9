#pragma once

#include <cutplan/instance_io.hpp>

namespace cutplan {

struct GeneratorConfig {
    std::uint64_t seed = 1;
    std::size_t rows = 30;
    std::size_t cols = 30;
    double fill = 0.35;          // initial occupancy probability
    int smoothing_rounds = 3;    // cellular-automaton majority smoothing
    Rational resolution = Rational(1, 30);
    Rational clearance = Rational(1, 256);
};

// Random cluttered 2D instance on a smoothed occupancy grid: start at the
// bottom center, goal box at the top center, regenerated (seed + 1, ...)
// until a flood fill connects start to goal through free cells.
Instance generate_instance(const GeneratorConfig& cfg);

// Free-cell flood fill between the cells containing p and q.
bool grid_connected(const OccupancyGrid& grid, std::size_t r0, std::size_t c0,
                    std::size_t r1, std::size_t c1);

}  // namespace cutplan
