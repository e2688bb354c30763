#include "aawa/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "aawa/errors.hpp"

namespace aawa {

std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::aawa: return "aawa";
        case Algorithm::awa: return "awa";
        case Algorithm::cmoead: return "cmoead";
    }
    return "aawa";
}

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "aawa") return Algorithm::aawa;
    if (name == "awa") return Algorithm::awa;
    if (name == "cmoead") return Algorithm::cmoead;
    throw ValidationError("unknown algorithm: " + name);
}

void RunConfig::validate() const {
    if (population < 2) throw ValidationError("population must be >= 2");
    if (neighbors < 1 || neighbors > population)
        throw ValidationError("neighborhood size must be in [1, N]");
    if (r_evol <= 0.0 || r_evol > 1.0) throw ValidationError("r_evol must be in (0, 1]");
    if (r_pop <= 0.0 || r_pop > 1.0) throw ValidationError("r_pop must be in (0, 1]");
    if (nus > population / 2) throw ValidationError("nus must be <= N/2");
    if (alloc_interval == 0 || adjust_interval == 0)
        throw ValidationError("intervals must be positive");
    if (eval_budget < population) throw ValidationError("budget must cover initialization");
    const std::size_t n_select = static_cast<std::size_t>(
        std::floor(static_cast<double>(population) * r_pop));
    if (n_select < 2) throw ValidationError("N*r_pop must select at least m subproblems");
}

std::vector<std::size_t> allocate_resources(UtilityState& state,
                                            const std::vector<double>& current,
                                            std::span<const Weight> weights,
                                            std::size_t n_select, Rng& rng) {
    const std::size_t n = current.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double old = state.last_value[i];
        double delta = 0.0;
        if (old > 0.0 && old > current[i]) delta = (old - current[i]) / old;
        if (delta > 0.001) {
            state.utility[i] = 1.0;
        } else {
            state.utility[i] *= 0.95 + 0.05 * delta / 0.001;
        }
        state.last_value[i] = current[i];
    }

    // the two boundary-weight subproblems are always evolved
    std::vector<std::size_t> selected;
    for (std::size_t dim = 0; dim < 2; ++dim) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (weights[i][dim] > weights[best][dim]) best = i;
        }
        if (std::find(selected.begin(), selected.end(), best) == selected.end())
            selected.push_back(best);
    }

    std::size_t attempts = 0;
    while (selected.size() < n_select) {
        const std::size_t a = rng.index(n);
        const std::size_t b = rng.index(n);
        const std::size_t winner = state.utility[b] > state.utility[a] ? b : a;
        if (std::find(selected.begin(), selected.end(), winner) == selected.end()) {
            selected.push_back(winner);
        } else if (++attempts > 100 * n) {
            // pathological utility ties cannot stall the selection
            for (std::size_t i = 0; i < n && selected.size() < n_select; ++i) {
                if (std::find(selected.begin(), selected.end(), i) == selected.end())
                    selected.push_back(i);
            }
        }
    }
    return selected;
}

ControlGenome UavProblem::random_genome(Rng& rng) const {
    ControlGenome g;
    g.bounds = cfg_.bounds;
    g.points.reserve(static_cast<std::size_t>(cfg_.dop));
    for (int i = 0; i < cfg_.dop; ++i) {
        Vec3 p;
        p.x = rng.uniform(cfg_.bounds.lo[0], cfg_.bounds.hi[0]);
        p.y = rng.uniform(cfg_.bounds.lo[1], cfg_.bounds.hi[1]);
        p.z = rng.uniform(cfg_.bounds.lo[2], cfg_.bounds.hi[2]);
        g.points.push_back(p);
    }
    return g;
}

std::vector<Individual> front_of(std::span<const Individual> pool) {
    std::vector<Individual> front;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        const auto& cand = pool[i];
        if (!cand.feasible()) continue;
        if (!std::isfinite(cand.objectives[0]) || !std::isfinite(cand.objectives[1])) continue;
        bool keep = true;
        for (std::size_t j = 0; j < pool.size() && keep; ++j) {
            if (j != i && pool[j].feasible() && dominates(pool[j].objectives, cand.objectives))
                keep = false;
        }
        if (keep) {
            for (const auto& f : front) {
                if (f.objectives == cand.objectives) {
                    keep = false;
                    break;
                }
            }
        }
        if (keep) front.push_back(cand);
    }
    return front;
}

namespace {

struct MatingDraw {
    std::size_t r1;
    std::size_t r2;
};

MatingDraw draw_parents(std::span<const std::size_t> scope, std::size_t pop_size, Rng& rng) {
    if (scope.size() >= 2) {
        const std::size_t a = rng.index(scope.size());
        std::size_t b = rng.index(scope.size() - 1);
        if (b >= a) ++b;
        return {scope[a], scope[b]};
    }
    // degenerate mating pool: second parent comes from the whole population
    const std::size_t r1 = scope[0];
    std::size_t r2 = rng.index(pop_size - 1);
    if (r2 >= r1) ++r2;
    return {r1, r2};
}

} // namespace

RunResult run(const UavProblem& problem, const RunConfig& cfg) {
    cfg.validate();
    Rng rng(cfg.seed);
    const std::size_t n = cfg.population;
    const std::size_t genome_len = 3 * static_cast<std::size_t>(problem.config().dop);
    const double p_mut = 1.0 / static_cast<double>(genome_len);

    std::vector<Weight> weights = init_weights(n);
    auto hoods = build_neighborhoods(weights, cfg.neighbors);

    std::vector<Individual> pop;
    pop.reserve(n);
    std::size_t evals = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Individual ind;
        ind.genome = problem.random_genome(rng);
        const Evaluation ev = problem(ind.genome);
        ind.objectives = ev.objectives;
        ind.violation = ev.violation;
        ++evals;
        pop.push_back(std::move(ind));
    }

    Objectives zref{std::numeric_limits<double>::infinity(),
                    std::numeric_limits<double>::infinity()};
    for (const auto& ind : pop) {
        zref[0] = std::min(zref[0], ind.objectives[0]);
        zref[1] = std::min(zref[1], ind.objectives[1]);
    }
    zref[0] -= 1e-7;
    zref[1] -= 1e-7;

    EliteArchive archive(static_cast<std::size_t>(1.5 * static_cast<double>(n)));

    UtilityState util;
    util.utility.assign(n, 1.0);
    util.last_value.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        util.last_value[i] = tchebycheff(pop[i].objectives, weights[i], zref);

    const std::size_t n_select = static_cast<std::size_t>(
        std::floor(static_cast<double>(n) * cfg.r_pop));
    const std::size_t g_max = static_cast<std::size_t>(std::ceil(
        static_cast<double>(cfg.eval_budget - n) / static_cast<double>(n_select)));
    // r_evol = 1 means the whole budget evolves without adjustment
    const std::size_t adjust_start =
        cfg.r_evol >= 1.0 ? std::numeric_limits<std::size_t>::max()
                          : static_cast<std::size_t>(std::ceil(
                                cfg.r_evol * static_cast<double>(g_max)));

    std::vector<std::size_t> evolving;
    std::vector<std::size_t> all_indices(n);
    std::iota(all_indices.begin(), all_indices.end(), std::size_t{0});

    std::size_t g = 1;
    while (evals < cfg.eval_budget) {
        if (g == 1 || g % cfg.alloc_interval == 0) {
            std::vector<double> current(pop.size());
            for (std::size_t i = 0; i < pop.size(); ++i)
                current[i] = tchebycheff(pop[i].objectives, weights[i], zref);
            evolving = allocate_resources(util, current, weights, n_select, rng);
        }

        std::vector<Individual> offspring_batch;
        offspring_batch.reserve(evolving.size());
        for (std::size_t i : evolving) {
            if (evals >= cfg.eval_budget) break;
            const bool local = rng.uniform() < cfg.mating_prob;
            std::span<const std::size_t> scope =
                local ? std::span<const std::size_t>(hoods[i])
                      : std::span<const std::size_t>(all_indices);

            const MatingDraw parents = draw_parents(scope, pop.size(), rng);
            Individual y;
            y.genome = sbx_crossover(pop[parents.r1].genome, pop[parents.r2].genome, cfg.eta_c, rng);
            y.genome = polynomial_mutation(y.genome, cfg.eta_m, p_mut, rng, y.genome.bounds);
            repair_in_bounds(y.genome, rng);

            const Evaluation ev = problem(y.genome);
            y.objectives = ev.objectives;
            y.violation = ev.violation;
            ++evals;

            update_reference(zref, y.objectives);
            update_population(pop, y, scope, cfg.replace_cap, weights, zref, rng);
            offspring_batch.push_back(std::move(y));
        }

        if (cfg.algorithm != Algorithm::cmoead && g >= adjust_start) {
            archive.update(offspring_batch);
            if (g % cfg.adjust_interval == 0) {
                const WeightRule rule =
                    cfg.algorithm == Algorithm::awa ? WeightRule::awa : WeightRule::areal;
                const AdjustLog log = adjust(pop, weights, archive, cfg.nus, zref, rule);

                // mirror the structural edits onto the utility arrays
                std::vector<double> saved_u, saved_v;
                for (std::size_t pos : log.erase_positions) {
                    saved_u.push_back(util.utility[pos]);
                    saved_v.push_back(util.last_value[pos]);
                    util.utility.erase(util.utility.begin() + static_cast<std::ptrdiff_t>(pos));
                    util.last_value.erase(util.last_value.begin() + static_cast<std::ptrdiff_t>(pos));
                }
                for (std::size_t k = 0; k < log.added; ++k) {
                    const std::size_t idx = util.utility.size();
                    util.utility.push_back(1.0);
                    util.last_value.push_back(
                        tchebycheff(pop[idx].objectives, weights[idx], zref));
                }
                for (std::size_t k = log.added; k < log.erase_positions.size(); ++k) {
                    util.utility.push_back(saved_u[k]);
                    util.last_value.push_back(saved_v[k]);
                }
                hoods = build_neighborhoods(weights, cfg.neighbors);
            }
        }
        ++g;
    }

    RunResult result;
    result.population = std::move(pop);
    result.archive.assign(archive.members().begin(), archive.members().end());
    std::vector<Individual> pool = result.population;
    pool.insert(pool.end(), result.archive.begin(), result.archive.end());
    result.front = front_of(pool);
    result.evaluations = evals;
    result.generations = g - 1;
    return result;
}

} // namespace aawa
