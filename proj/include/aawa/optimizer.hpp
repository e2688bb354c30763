#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aawa/moead.hpp"
#include "aawa/weight_adjust.hpp"

namespace aawa {

enum class Algorithm { aawa, awa, cmoead };

std::string algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);

struct RunConfig {
    std::size_t population = 20;    // N
    std::size_t neighbors = 2;      // T
    double mating_prob = 0.9;       // delta: neighborhood mating-scope probability
    std::size_t replace_cap = 2;    // n_r
    double r_evol = 0.8;            // budget fraction evolved before adjustment
    double r_pop = 0.2;             // fraction of subproblems evolved per generation
    std::size_t nus = 2;            // subproblems swapped per adjustment
    std::size_t alloc_interval = 50;   // g_r
    std::size_t adjust_interval = 100; // g_w
    std::size_t eval_budget = 10000;
    double eta_c = 20.0;
    double eta_m = 1.0;
    std::uint64_t seed = 0;
    Algorithm algorithm = Algorithm::aawa;

    void validate() const;
};

/// Per-subproblem utility values plus the aggregation values remembered from
/// the previous allocation.
struct UtilityState {
    std::vector<double> utility;
    std::vector<double> last_value;
};

/// Utility update and subproblem selection: the boundary-weight subproblems
/// are always selected; the remaining slots (up to n_select total) are filled
/// by 2-tournament on utility. `current` holds each subproblem's aggregation
/// value at its own weight.
std::vector<std::size_t> allocate_resources(UtilityState& state,
                                            const std::vector<double>& current,
                                            std::span<const Weight> weights,
                                            std::size_t n_select, Rng& rng);

/// Evaluation handle binding a terrain to a problem configuration.
class UavProblem {
  public:
    UavProblem(const TerrainGrid& grid, const ProblemConfig& cfg) : grid_(&grid), cfg_(cfg) {}

    Evaluation operator()(const ControlGenome& genome) const {
        return evaluate(genome, *grid_, cfg_);
    }
    const ProblemConfig& config() const { return cfg_; }
    const TerrainGrid& grid() const { return *grid_; }

    ControlGenome random_genome(Rng& rng) const;

  private:
    const TerrainGrid* grid_;
    ProblemConfig cfg_;
};

struct RunResult {
    std::vector<Individual> population;
    std::vector<Individual> archive;
    std::vector<Individual> front; // feasible nondominated, deduplicated
    std::size_t evaluations = 0;
    std::size_t generations = 0;
};

/// Feasible, mutually nondominated individuals with duplicate objective
/// vectors removed. Input order is preserved.
std::vector<Individual> front_of(std::span<const Individual> pool);

/// One full optimizer run. Deterministic: identical config (including seed)
/// gives an identical result.
RunResult run(const UavProblem& problem, const RunConfig& cfg);

} // namespace aawa
