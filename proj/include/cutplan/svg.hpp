#pragma once

#include <cutplan/instance_io.hpp>

#include <string>

namespace cutplan {

// 2D only: bounds, obstacles with their clearance-expanded outlines, the
// roadmap if given, waypoints, and the smooth plan sampled at 64 points per
// piece.
std::string render_svg(const Instance& inst, const Roadmap* roadmap,
                       const SmoothPlan* plan);

void write_svg(const std::string& path, const Instance& inst, const Roadmap* roadmap,
               const SmoothPlan* plan);

}  // namespace cutplan
