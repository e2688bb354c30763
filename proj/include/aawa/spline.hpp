#pragma once

#include <span>
#include <vector>

#include "aawa/geom.hpp"

namespace aawa {

/// Fixed start and target of a flight path.
struct PathEndpoints {
    Vec3 start;
    Vec3 target;
};

/// Curve degree and the number of sampled segments. A path sample holds
/// samples+1 points.
struct SplineConfig {
    int degree = 3;
    int samples = 150;
};

/// Decision vector: the interior control points between the fixed endpoints,
/// together with the per-dimension search box they must stay inside.
struct ControlGenome {
    std::vector<Vec3> points;
    Bounds3 bounds;
};

/// Sampled path. points.front() is the start, points.back() the target.
struct PathSample {
    std::vector<Vec3> points;

    std::size_t segments() const { return points.empty() ? 0 : points.size() - 1; }
    Vec3 delta(std::size_t i) const { return points[i + 1] - points[i]; }
};

/// Clamped uniform knot vector for `n_ctrl` control points of the given
/// degree: end knots repeated degree+1 times, interior knots 1, 2, ...
std::vector<double> clamped_knots(std::size_t n_ctrl, int degree);

/// B-spline blending function defined by the standard recursion on `knots`.
/// `order` counts from 1: order 1 is the indicator of [u_i, u_{i+1}), and a
/// curve of degree d uses order d+1. At the right end of the knot domain the
/// basis takes its left-limit value, so clamped curves interpolate the last
/// control point. 0/0 terms are treated as 0.
double bspline_basis(std::size_t i, int order, double t, std::span<const double> knots);

/// Evaluates the curve defined by [start, interior points..., target] at
/// samples+1 uniformly spaced parameters across the knot domain.
PathSample sample_path(const ControlGenome& genome, const PathEndpoints& ends,
                       const SplineConfig& cfg);

} // namespace aawa
