#pragma once

#include <array>
#include <iosfwd>

#include "aawa/spline.hpp"
#include "aawa/terrain.hpp"

namespace aawa {

/// Objective vector: [0] path length in world units, [1] threat degree.
using Objectives = std::array<double, 2>;

inline constexpr std::size_t kLength = 0;
inline constexpr std::size_t kThreat = 1;

/// Raw violation counts per constraint class plus their normalized values.
/// `total` is the sum of the normalized terms; a path is feasible iff it is
/// exactly zero.
struct ViolationReport {
    int altitude_raw = 0; // path points too close to the terrain
    int turn_raw = 0;     // horizontal turning angles beyond the limit
    int slope_raw = 0;    // climb/descent slopes beyond the limit
    double altitude = 0.0;
    double turn = 0.0;
    double slope = 0.0;
    double total = 0.0;

    bool feasible() const { return total == 0.0; }
};

struct ProblemConfig {
    double r_safe = 1.0;
    double max_turn = 0.25 * 3.14159265358979323846;  // 45 degrees
    double max_slope = 0.25 * 3.14159265358979323846; // 45 degrees
    PathEndpoints endpoints;
    SplineConfig spline;
    Bounds3 bounds; // decision-variable box for every interior control point
    int dop = 2;    // number of interior control points
};

/// Sum of segment lengths.
double path_length(const PathSample& sample);

/// Accumulated (r_safe / r)^2 over every (path point, in-range grid node)
/// pair, with r the 3-D distance. A coincident pair yields +infinity.
double threat_degree(const PathSample& sample, const TerrainGrid& grid, double r_safe);

ViolationReport check_constraints(const PathSample& sample, const TerrainGrid& grid,
                                  const ProblemConfig& cfg);

struct Evaluation {
    Objectives objectives{0.0, 0.0};
    ViolationReport violation;
};

/// Full scoring of a genome against a terrain: spline sampling, objectives
/// and constraint violations. Pure and deterministic.
Evaluation evaluate(const ControlGenome& genome, const TerrainGrid& grid,
                    const ProblemConfig& cfg);

/// Debug trace: one CSV row per path point with elevation, angles and threat.
void write_eval_trace_csv(std::ostream& out, const PathSample& sample, const TerrainGrid& grid,
                          const ProblemConfig& cfg);

} // namespace aawa
