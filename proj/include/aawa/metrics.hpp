#pragma once

#include <span>
#include <vector>

#include "aawa/problem.hpp"

namespace aawa {

/// Exact dominated area of a 2-D front against the reference point
/// (minimization; sort-and-sweep). Points beyond the reference contribute
/// nothing; an empty front scores 0.
double hypervolume_2d(std::span<const Objectives> front, const Objectives& reference = {1.0, 1.0});

/// Dissimilarity used by pure diversity: the 0.1-norm of the coordinate
/// differences.
double pd_dissimilarity(const Objectives& a, const Objectives& b);

/// Pure diversity: the best achievable sum of nearest-neighbor
/// dissimilarities over all accumulation orders, computed greedily
/// (farthest-first from every seed). 0 for empty or singleton sets.
double pure_diversity(std::span<const Objectives> front);

struct NormBounds {
    Objectives lo{0.0, 0.0};
    Objectives hi{1.0, 1.0};
};

/// Componentwise min/max over every point of every front.
NormBounds pooled_bounds(std::span<const std::vector<Objectives>> fronts);

/// Affine map of each front onto [0,1]^2 using shared pooled bounds. A
/// degenerate dimension (max == min) maps to 0.
std::vector<std::vector<Objectives>> normalize_fronts(
    std::span<const std::vector<Objectives>> fronts, NormBounds* bounds_out = nullptr);

/// 1-based ranks of values where larger is better; equal values share the
/// lower rank and the next rank is skipped.
std::vector<int> rank_descending(std::span<const double> values);

} // namespace aawa
