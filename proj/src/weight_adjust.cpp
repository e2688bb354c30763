#include "aawa/weight_adjust.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "aawa/errors.hpp"

namespace aawa {

namespace {

double obj_distance(const Objectives& a, const Objectives& b) {
    return std::hypot(a[0] - b[0], a[1] - b[1]);
}

double product_of_k_smallest(std::vector<double>& dists, std::size_t k) {
    std::partial_sort(dists.begin(), dists.begin() + static_cast<std::ptrdiff_t>(k), dists.end());
    double prod = 1.0;
    for (std::size_t i = 0; i < k; ++i) prod *= dists[i];
    return prod;
}

std::vector<Objectives> objectives_of(std::span<const Individual> pop) {
    std::vector<Objectives> objs;
    objs.reserve(pop.size());
    for (const auto& ind : pop) objs.push_back(ind.objectives);
    return objs;
}

} // namespace

double sparsity_of_member(std::span<const Objectives> objectives, std::size_t idx, std::size_t k) {
    if (objectives.size() < k + 1)
        throw ValidationError("population too small for vicinity distance");
    std::vector<double> dists;
    dists.reserve(objectives.size() - 1);
    for (std::size_t j = 0; j < objectives.size(); ++j) {
        if (j == idx) continue;
        dists.push_back(obj_distance(objectives[idx], objectives[j]));
    }
    return product_of_k_smallest(dists, k);
}

double sparsity_of_point(std::span<const Objectives> objectives, const Objectives& point,
                         std::size_t k) {
    if (objectives.size() < k) throw ValidationError("population too small for vicinity distance");
    std::vector<double> dists;
    dists.reserve(objectives.size());
    for (const auto& o : objectives) dists.push_back(obj_distance(point, o));
    return product_of_k_smallest(dists, k);
}

void EliteArchive::update(std::span<const Individual> offspring) {
    for (const auto& y : offspring) {
        if (y.feasible()) members_.push_back(y);
    }

    // keep only mutually nondominated members (duplicates stay)
    std::vector<Individual> kept;
    kept.reserve(members_.size());
    for (std::size_t i = 0; i < members_.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < members_.size() && !dominated; ++j) {
            if (j != i && dominates(members_[j].objectives, members_[i].objectives))
                dominated = true;
        }
        if (!dominated) kept.push_back(members_[i]);
    }
    members_ = std::move(kept);

    while (members_.size() > capacity_) {
        const auto objs = objectives_of(members_);
        std::size_t worst = 0;
        double worst_sl = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < members_.size(); ++i) {
            const double sl = sparsity_of_member(objs, i);
            if (sl < worst_sl) {
                worst_sl = sl;
                worst = i;
            }
        }
        members_.erase(members_.begin() + static_cast<std::ptrdiff_t>(worst));
    }
}

void EliteArchive::prune_against(std::span<const Individual> pop) {
    std::erase_if(members_, [&](const Individual& e) {
        for (const auto& x : pop) {
            if (x.feasible() && dominates(x.objectives, e.objectives)) return true;
        }
        return false;
    });
}

Weight awa_weight(const Objectives& f, const Objectives& zref) {
    return ws_transform({f[0] - zref[0], f[1] - zref[1]});
}

Weight areal_weight(const Objectives& f_added, std::span<const Objectives> pop_objectives,
                    const Objectives& zref) {
    constexpr std::size_t k = 2;
    if (pop_objectives.size() < k)
        throw ValidationError("population too small for areal weight construction");

    std::vector<std::size_t> order(pop_objectives.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return obj_distance(f_added, pop_objectives[a]) < obj_distance(f_added, pop_objectives[b]);
    });

    Objectives centroid{0.0, 0.0};
    for (std::size_t i = 0; i < k; ++i) {
        centroid[0] += pop_objectives[order[i]][0];
        centroid[1] += pop_objectives[order[i]][1];
    }
    centroid[0] /= static_cast<double>(k);
    centroid[1] /= static_cast<double>(k);
    return ws_transform({centroid[0] - zref[0], centroid[1] - zref[1]});
}

std::vector<std::pair<Individual, Weight>> delete_crowded(std::vector<Individual>& pop,
                                                          std::vector<Weight>& weights,
                                                          std::size_t nus,
                                                          std::vector<std::size_t>* positions) {
    if (nus >= pop.size()) throw ValidationError("cannot delete that many subproblems");
    std::vector<std::pair<Individual, Weight>> removed;
    removed.reserve(nus);
    for (std::size_t round = 0; round < nus; ++round) {
        const auto objs = objectives_of(pop);
        std::size_t worst = 0;
        double worst_sl = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < pop.size(); ++i) {
            const double sl = sparsity_of_member(objs, i);
            if (sl < worst_sl) {
                worst_sl = sl;
                worst = i;
            }
        }
        removed.emplace_back(std::move(pop[worst]), weights[worst]);
        pop.erase(pop.begin() + static_cast<std::ptrdiff_t>(worst));
        weights.erase(weights.begin() + static_cast<std::ptrdiff_t>(worst));
        if (positions) positions->push_back(worst);
    }
    return removed;
}

std::size_t add_sparse(std::vector<Individual>& pop, std::vector<Weight>& weights,
                       const EliteArchive& archive, std::size_t nus, const Objectives& zref,
                       WeightRule rule) {
    std::size_t added = 0;
    for (; added < nus; ++added) {
        if (archive.empty()) break;
        const auto pop_objs = objectives_of(pop);
        std::size_t best = 0;
        double best_sl = -1.0;
        for (std::size_t i = 0; i < archive.size(); ++i) {
            const double sl = sparsity_of_point(pop_objs, archive.members()[i].objectives);
            if (sl > best_sl) {
                best_sl = sl;
                best = i;
            }
        }
        // a zero score means every candidate duplicates a population point
        if (best_sl <= 0.0) break;

        const Individual& chosen = archive.members()[best];
        const Weight w = rule == WeightRule::areal
                             ? areal_weight(chosen.objectives, pop_objs, zref)
                             : awa_weight(chosen.objectives, zref);
        pop.push_back(chosen);
        weights.push_back(w);
    }
    return added;
}

AdjustLog adjust(std::vector<Individual>& pop, std::vector<Weight>& weights, EliteArchive& archive,
                 std::size_t nus, const Objectives& zref, WeightRule rule) {
    AdjustLog log;
    if (pop.empty() || nus == 0) return log;

    // incumbent refresh: best aggregation value over population and archive,
    // against a snapshot of the candidates
    std::vector<Individual> candidates = pop;
    candidates.insert(candidates.end(), archive.members().begin(), archive.members().end());
    for (std::size_t i = 0; i < pop.size(); ++i) {
        const bool incumbent_feasible = pop[i].feasible();
        double best_value = tchebycheff(pop[i].objectives, weights[i], zref);
        const Individual* best = nullptr;
        for (const auto& cand : candidates) {
            if (incumbent_feasible && !cand.feasible()) continue;
            const double v = tchebycheff(cand.objectives, weights[i], zref);
            if (v < best_value) {
                best_value = v;
                best = &cand;
            }
        }
        if (best) pop[i] = *best;
    }

    auto removed = delete_crowded(pop, weights, nus, &log.erase_positions);
    archive.prune_against(pop);
    log.added = add_sparse(pop, weights, archive, nus, zref, rule);

    // size conservation: deletions whose paired addition never happened are
    // put back
    for (std::size_t k = log.added; k < removed.size(); ++k) {
        pop.push_back(std::move(removed[k].first));
        weights.push_back(removed[k].second);
        ++log.restored;
    }
    return log;
}

} // namespace aawa
