#pragma once

#include <span>
#include <vector>

#include "aawa/moead.hpp"

namespace aawa {

/// Product of Euclidean distances from objectives[idx] to its k nearest
/// neighbors within `objectives` (self excluded). Zero when a neighbor
/// coincides with the point.
double sparsity_of_member(std::span<const Objectives> objectives, std::size_t idx,
                          std::size_t k = 2);

/// Product of distances from an external point to its k nearest members of
/// `objectives`.
double sparsity_of_point(std::span<const Objectives> objectives, const Objectives& point,
                         std::size_t k = 2);

/// Bounded store of feasible, mutually nondominated individuals.
class EliteArchive {
  public:
    explicit EliteArchive(std::size_t capacity) : capacity_(capacity) {}

    std::size_t capacity() const { return capacity_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<Individual>& members() const { return members_; }

    /// Inserts the feasible offspring, drops dominated members, then while
    /// over capacity repeatedly drops the member with the smallest vicinity
    /// distance inside the archive.
    void update(std::span<const Individual> offspring);

    /// Removes members dominated by any feasible member of `pop`.
    void prune_against(std::span<const Individual> pop);

  private:
    std::size_t capacity_;
    std::vector<Individual> members_;
};

/// Weight built from the added individual's own objective vector.
Weight awa_weight(const Objectives& f, const Objectives& zref);

/// Weight built from the centroid of the k nearest population members in
/// objective space (k = 2). Independent of the added individual's own value.
Weight areal_weight(const Objectives& f_added, std::span<const Objectives> pop_objectives,
                    const Objectives& zref);

enum class WeightRule { areal, awa };

/// Removes `nus` (individual, weight) pairs, each time recomputing sparsity
/// over the shrinking population and dropping the argmin (ties to the lower
/// index). Returns the removed pairs in removal order.
std::vector<std::pair<Individual, Weight>> delete_crowded(std::vector<Individual>& pop,
                                                          std::vector<Weight>& weights,
                                                          std::size_t nus,
                                                          std::vector<std::size_t>* positions = nullptr);

/// Appends up to `nus` archive members chosen by maximum sparsity against the
/// current population, each with a weight built by `rule`. Stops early when
/// the archive is exhausted or only duplicates of population points remain.
/// Returns the number of additions.
std::size_t add_sparse(std::vector<Individual>& pop, std::vector<Weight>& weights,
                       const EliteArchive& archive, std::size_t nus, const Objectives& zref,
                       WeightRule rule);

/// Record of the structural edits one adjustment made, so callers can mirror
/// them onto parallel per-subproblem arrays.
struct AdjustLog {
    std::vector<std::size_t> erase_positions; // positions at erase time, in order
    std::size_t added = 0;                    // archive members appended
    std::size_t restored = 0;                 // deleted pairs appended back
};

/// Full adjustment pass: incumbent refresh over population and archive,
/// paired subproblem deletion/addition, and archive pruning. Population and
/// weight sizes are conserved: when the archive cannot fund all `nus`
/// additions, the unfunded deletions are put back. Deterministic.
AdjustLog adjust(std::vector<Individual>& pop, std::vector<Weight>& weights, EliteArchive& archive,
                 std::size_t nus, const Objectives& zref, WeightRule rule);

} // namespace aawa
