#include "aawa/spline.hpp"

#include <cmath>

#include "aawa/errors.hpp"

namespace aawa {

std::vector<double> clamped_knots(std::size_t n_ctrl, int degree) {
    if (degree < 1) throw ValidationError("spline degree must be >= 1");
    if (n_ctrl < static_cast<std::size_t>(degree) + 1)
        throw ValidationError("need at least degree+1 control points");
    const std::size_t reps = static_cast<std::size_t>(degree) + 1;
    const std::size_t interior = n_ctrl - reps; // knots strictly inside the domain
    std::vector<double> knots;
    knots.reserve(n_ctrl + reps);
    for (std::size_t i = 0; i < reps; ++i) knots.push_back(0.0);
    for (std::size_t i = 1; i <= interior; ++i) knots.push_back(static_cast<double>(i));
    const double end = static_cast<double>(interior + 1);
    for (std::size_t i = 0; i < reps; ++i) knots.push_back(end);
    return knots;
}

double bspline_basis(std::size_t i, int order, double t, std::span<const double> knots) {
    if (order == 1) {
        const double end = knots.back();
        if (knots[i] <= t && t < knots[i + 1]) return 1.0;
        // left-limit convention: the last non-degenerate span is closed at
        // the right end of the domain
        if (t == end && knots[i] < knots[i + 1] && knots[i + 1] == end) return 1.0;
        return 0.0;
    }
    double value = 0.0;
    const double den_a = knots[i + order - 1] - knots[i];
    if (den_a > 0.0) {
        const double left = bspline_basis(i, order - 1, t, knots);
        if (left != 0.0) value += (t - knots[i]) / den_a * left;
    }
    const double den_b = knots[i + order] - knots[i + 1];
    if (den_b > 0.0) {
        const double right = bspline_basis(i + 1, order - 1, t, knots);
        if (right != 0.0) value += (knots[i + order] - t) / den_b * right;
    }
    return value;
}

PathSample sample_path(const ControlGenome& genome, const PathEndpoints& ends,
                       const SplineConfig& cfg) {
    if (cfg.degree < 1) throw ValidationError("spline degree must be >= 1");
    if (cfg.samples < cfg.degree + 1) throw ValidationError("sample count must be >= degree+1");

    std::vector<Vec3> ctrl;
    ctrl.reserve(genome.points.size() + 2);
    ctrl.push_back(ends.start);
    for (const auto& p : genome.points) ctrl.push_back(p);
    ctrl.push_back(ends.target);
    if (ctrl.size() < static_cast<std::size_t>(cfg.degree) + 1)
        throw ValidationError("genome too short for configured spline degree");

    const auto knots = clamped_knots(ctrl.size(), cfg.degree);
    const int order = cfg.degree + 1;
    const double t_end = knots.back();

    PathSample sample;
    sample.points.reserve(static_cast<std::size_t>(cfg.samples) + 1);
    for (int j = 0; j <= cfg.samples; ++j) {
        const double t = t_end * static_cast<double>(j) / static_cast<double>(cfg.samples);
        Vec3 p;
        for (std::size_t i = 0; i < ctrl.size(); ++i) {
            const double w = bspline_basis(i, order, t, knots);
            if (w != 0.0) p += ctrl[i] * w;
        }
        sample.points.push_back(p);
    }
    return sample;
}

} // namespace aawa
