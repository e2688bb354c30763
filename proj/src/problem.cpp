#include "aawa/problem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "aawa/errors.hpp"

namespace aawa {

namespace {

constexpr double kPi = 3.14159265358979323846;

double turning_angle(const Vec3& prev_delta, const Vec3& next_delta) {
    const double na = prev_delta.norm_xy();
    const double nb = next_delta.norm_xy();
    if (na == 0.0 || nb == 0.0) return 0.0; // degenerate horizontal segment
    const double dot = prev_delta.x * next_delta.x + prev_delta.y * next_delta.y;
    const double c = std::clamp(dot / (na * nb), -1.0, 1.0);
    return std::acos(c);
}

double climb_slope(const Vec3& delta) {
    const double horiz = delta.norm_xy();
    const double vert = std::abs(delta.z);
    if (horiz == 0.0) return vert == 0.0 ? 0.0 : 0.5 * kPi;
    return std::atan(vert / horiz);
}

} // namespace

double path_length(const PathSample& sample) {
    double len = 0.0;
    for (std::size_t i = 0; i < sample.segments(); ++i) len += sample.delta(i).norm();
    return len;
}

double threat_degree(const PathSample& sample, const TerrainGrid& grid, double r_safe) {
    double threat = 0.0;
    for (const auto& p : sample.points) {
        for (const auto& g : grid_points_within(grid, p, r_safe)) {
            const double r = distance(p, g);
            if (r == 0.0) return std::numeric_limits<double>::infinity();
            const double ratio = r_safe / r;
            threat += ratio * ratio;
        }
    }
    return threat;
}

ViolationReport check_constraints(const PathSample& sample, const TerrainGrid& grid,
                                  const ProblemConfig& cfg) {
    const std::size_t s = sample.segments();
    ViolationReport rep;

    for (const auto& p : sample.points) {
        if (p.z - grid.elevation_at(p.x, p.y) <= cfg.r_safe) ++rep.altitude_raw;
    }
    for (std::size_t i = 1; i < s; ++i) {
        if (turning_angle(sample.delta(i - 1), sample.delta(i)) > cfg.max_turn) ++rep.turn_raw;
    }
    for (std::size_t i = 0; i < s; ++i) {
        if (climb_slope(sample.delta(i)) > cfg.max_slope) ++rep.slope_raw;
    }

    // each raw count is normalized by its own number of checks
    rep.altitude = static_cast<double>(rep.altitude_raw) / static_cast<double>(s + 1);
    rep.turn = s >= 2 ? static_cast<double>(rep.turn_raw) / static_cast<double>(s - 1) : 0.0;
    rep.slope = static_cast<double>(rep.slope_raw) / static_cast<double>(s);
    rep.total = rep.altitude + rep.turn + rep.slope;
    return rep;
}

Evaluation evaluate(const ControlGenome& genome, const TerrainGrid& grid,
                    const ProblemConfig& cfg) {
    if (static_cast<int>(genome.points.size()) != cfg.dop)
        throw ValidationError("genome length does not match configured control-point count");
    const PathSample sample = sample_path(genome, cfg.endpoints, cfg.spline);
    Evaluation ev;
    ev.objectives[kLength] = path_length(sample);
    ev.objectives[kThreat] = threat_degree(sample, grid, cfg.r_safe);
    ev.violation = check_constraints(sample, grid, cfg);
    return ev;
}

void write_eval_trace_csv(std::ostream& out, const PathSample& sample, const TerrainGrid& grid,
                          const ProblemConfig& cfg) {
    const std::size_t s = sample.segments();
    out << "index,x,y,z,terrain_z,turn_angle,climb_slope,threat\n";
    for (std::size_t i = 0; i < sample.points.size(); ++i) {
        const auto& p = sample.points[i];
        const double tz = grid.elevation_at(p.x, p.y);
        const double alpha =
            (i >= 1 && i < s) ? turning_angle(sample.delta(i - 1), sample.delta(i)) : 0.0;
        const double beta = i >= 1 ? climb_slope(sample.delta(i - 1)) : 0.0;
        double threat = 0.0;
        for (const auto& g : grid_points_within(grid, p, cfg.r_safe)) {
            const double r = distance(p, g);
            if (r == 0.0) {
                threat = std::numeric_limits<double>::infinity();
                break;
            }
            threat += (cfg.r_safe / r) * (cfg.r_safe / r);
        }
        out << i << ',' << p.x << ',' << p.y << ',' << p.z << ',' << tz << ',' << alpha << ','
            << beta << ',' << threat << '\n';
    }
}

} // namespace aawa
