#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "aawa/problem.hpp"
#include "aawa/rng.hpp"
#include "aawa/spline.hpp"

namespace aawa {

/// Weight vector of a scalar subproblem; non-negative, sums to 1.
using Weight = std::array<double, 2>;

/// Decision vector with its cached evaluation.
struct Individual {
    ControlGenome genome;
    Objectives objectives{0.0, 0.0};
    ViolationReport violation;

    bool feasible() const { return violation.feasible(); }
};

/// max_i w_i * (f_i - z_i). Requires f > z componentwise, which the
/// reference-point maintenance guarantees.
double tchebycheff(const Objectives& f, const Weight& w, const Objectives& zref);

/// Reciprocal-normalization map from a solution-mapping vector to a weight.
/// Components below 1e-6 are floored before reciprocation so boundary
/// directions produce finite, boundary-dominant weights. Throws on an
/// all-zero input.
Weight ws_transform(const std::array<double, 2>& mapping);

/// N weights obtained by applying ws_transform to the uniform lattice of
/// solution-mapping vectors (i/(N-1), 1-i/(N-1)).
std::vector<Weight> init_weights(std::size_t n);

/// For each subproblem, the indices of the T nearest weights (Euclidean,
/// ties by lower index). Each list contains the subproblem itself.
std::vector<std::vector<std::size_t>> build_neighborhoods(std::span<const Weight> weights,
                                                          std::size_t t);

/// Simulated binary crossover; produces one child. Each coordinate draws its
/// own spread factor.
ControlGenome sbx_crossover(const ControlGenome& a, const ControlGenome& b, double eta_c,
                            Rng& rng);

/// Polynomial mutation: each coordinate mutated with probability p_mut, the
/// perturbation scaled by that coordinate's bound width. The result is not
/// repaired here.
ControlGenome polynomial_mutation(const ControlGenome& y, double eta_m, double p_mut, Rng& rng,
                                  const Bounds3& bounds);

/// Out-of-bounds coordinates are resampled uniformly inside their interval.
void repair_in_bounds(ControlGenome& genome, Rng& rng);

/// Strict Pareto dominance for minimization.
bool dominates(const Objectives& a, const Objectives& b);

enum class Cdp { first, second, neither };

/// Constraint-domination: feasibility first, then total violation, then
/// Pareto dominance among feasible solutions.
Cdp cdp_compare(const Individual& a, const Individual& b);

/// Componentwise reference update: any improved objective moves the reference
/// to the new value minus 1e-7.
void update_reference(Objectives& zref, const Objectives& f);

/// Population update scheme: visits `scope` in random order and replaces an
/// incumbent when the offspring has strictly smaller total violation, or both
/// are feasible and the offspring has a strictly better aggregation value at
/// that subproblem's weight. Stops after `replace_cap` replacements. Returns
/// the number of replacements.
std::size_t update_population(std::vector<Individual>& pop, const Individual& y,
                              std::span<const std::size_t> scope, std::size_t replace_cap,
                              std::span<const Weight> weights, const Objectives& zref, Rng& rng);

} // namespace aawa
