#pragma once

#include <cutplan/planner.hpp>

#include <iosfwd>
#include <string>

namespace cutplan {

struct Instance {
    Workspace ws;
    Point q0;
    GoalRegion goal;
    DifferentialConstraintSet constraints;
};

// JSON schema: { "d": int, "bounds": {"lo": [..], "hi": [..]},
//   "grid": {"rows": r, "cols": c, "cells": "row-major 0/1 string", "resolution": rat}?,
//   "polytopes": [ {"constraints": [{"a": [..], "b": rat}]} ]?,
//   "q0": [..], "goal_box": {"lo": [..], "hi": [..]}, "clearance": rat }
// Rationals are ints, "a/b" strings, or exact decimal strings.
Instance load_instance(const std::string& path);
Instance parse_instance(const std::string& json_text);
std::string instance_to_json(const Instance& inst);

// Deterministic result document; timing fields are the only nondeterminism.
std::string result_to_json(const Instance& inst, const PlannerResult& res,
                           std::uint64_t seed);

std::string roadmap_to_json(const Roadmap& G);

}  // namespace cutplan
