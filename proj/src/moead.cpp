#include "aawa/moead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "aawa/errors.hpp"

namespace aawa {

namespace {

constexpr double kWsFloor = 1e-6;

double* coord(ControlGenome& g, std::size_t k) {
    Vec3& p = g.points[k / 3];
    switch (k % 3) {
        case 0: return &p.x;
        case 1: return &p.y;
        default: return &p.z;
    }
}

double coord(const ControlGenome& g, std::size_t k) {
    const Vec3& p = g.points[k / 3];
    switch (k % 3) {
        case 0: return p.x;
        case 1: return p.y;
        default: return p.z;
    }
}

} // namespace

double tchebycheff(const Objectives& f, const Weight& w, const Objectives& zref) {
    return std::max(w[0] * (f[0] - zref[0]), w[1] * (f[1] - zref[1]));
}

Weight ws_transform(const std::array<double, 2>& mapping) {
    if (mapping[0] < 0.0 || mapping[1] < 0.0)
        throw ValidationError("solution-mapping vector must be non-negative");
    if (mapping[0] == 0.0 && mapping[1] == 0.0)
        throw ValidationError("solution-mapping vector must not be all zero");
    const double a = 1.0 / std::max(mapping[0], kWsFloor);
    const double b = 1.0 / std::max(mapping[1], kWsFloor);
    return {a / (a + b), b / (a + b)};
}

std::vector<Weight> init_weights(std::size_t n) {
    if (n < 2) throw ValidationError("need at least 2 subproblems");
    std::vector<Weight> weights;
    weights.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n - 1);
        weights.push_back(ws_transform({t, 1.0 - t}));
    }
    return weights;
}

std::vector<std::vector<std::size_t>> build_neighborhoods(std::span<const Weight> weights,
                                                          std::size_t t) {
    const std::size_t n = weights.size();
    if (t > n) throw ValidationError("neighborhood size exceeds population size");
    std::vector<std::vector<std::size_t>> hoods(n);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            const double da = std::hypot(weights[a][0] - weights[i][0], weights[a][1] - weights[i][1]);
            const double db = std::hypot(weights[b][0] - weights[i][0], weights[b][1] - weights[i][1]);
            return da < db;
        });
        hoods[i].assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(t));
    }
    return hoods;
}

ControlGenome sbx_crossover(const ControlGenome& a, const ControlGenome& b, double eta_c,
                            Rng& rng) {
    if (a.points.size() != b.points.size())
        throw ValidationError("sbx parents must have equal genome length");
    ControlGenome child = a;
    const std::size_t len = 3 * a.points.size();
    for (std::size_t k = 0; k < len; ++k) {
        const double r = rng.uniform();
        const double beta = r <= 0.5 ? std::pow(2.0 * r, 1.0 / (1.0 + eta_c))
                                     : std::pow(1.0 / (2.0 - 2.0 * r), 1.0 / (1.0 + eta_c));
        *coord(child, k) = 0.5 * ((1.0 + beta) * coord(a, k) + (1.0 - beta) * coord(b, k));
    }
    return child;
}

ControlGenome polynomial_mutation(const ControlGenome& y, double eta_m, double p_mut, Rng& rng,
                                  const Bounds3& bounds) {
    if (p_mut < 0.0 || p_mut > 1.0) throw ValidationError("mutation probability must be in [0,1]");
    ControlGenome out = y;
    const std::size_t len = 3 * y.points.size();
    for (std::size_t k = 0; k < len; ++k) {
        if (rng.uniform() >= p_mut) continue;
        const double r = rng.uniform();
        const double delta = r <= 0.5 ? std::pow(2.0 * r, 1.0 / (eta_m + 1.0)) - 1.0
                                      : 1.0 - std::pow(2.0 * (1.0 - r), 1.0 / (eta_m + 1.0));
        *coord(out, k) += delta * bounds.width(k % 3);
    }
    return out;
}

void repair_in_bounds(ControlGenome& genome, Rng& rng) {
    const std::size_t len = 3 * genome.points.size();
    for (std::size_t k = 0; k < len; ++k) {
        double* v = coord(genome, k);
        const double lo = genome.bounds.lo[k % 3];
        const double hi = genome.bounds.hi[k % 3];
        if (*v < lo || *v > hi) *v = rng.uniform(lo, hi);
    }
}

bool dominates(const Objectives& a, const Objectives& b) {
    return a[0] <= b[0] && a[1] <= b[1] && (a[0] < b[0] || a[1] < b[1]);
}

Cdp cdp_compare(const Individual& a, const Individual& b) {
    const bool fa = a.feasible();
    const bool fb = b.feasible();
    if (fa != fb) return fa ? Cdp::first : Cdp::second;
    if (!fa) {
        if (a.violation.total < b.violation.total) return Cdp::first;
        if (b.violation.total < a.violation.total) return Cdp::second;
        return Cdp::neither;
    }
    if (dominates(a.objectives, b.objectives)) return Cdp::first;
    if (dominates(b.objectives, a.objectives)) return Cdp::second;
    return Cdp::neither;
}

void update_reference(Objectives& zref, const Objectives& f) {
    for (std::size_t i = 0; i < 2; ++i) {
        if (zref[i] > f[i]) zref[i] = f[i] - 1e-7;
    }
}

std::size_t update_population(std::vector<Individual>& pop, const Individual& y,
                              std::span<const std::size_t> scope, std::size_t replace_cap,
                              std::span<const Weight> weights, const Objectives& zref, Rng& rng) {
    std::vector<std::size_t> visit(scope.begin(), scope.end());
    for (std::size_t i = visit.size(); i > 1; --i)
        std::swap(visit[i - 1], visit[rng.index(i)]);

    std::size_t replaced = 0;
    for (std::size_t j : visit) {
        if (replaced >= replace_cap) break;
        Individual& inc = pop[j];
        bool accept = false;
        if (y.violation.total < inc.violation.total) {
            accept = true;
        } else if (y.violation.total == 0.0 && inc.violation.total == 0.0) {
            accept = tchebycheff(y.objectives, weights[j], zref) <
                     tchebycheff(inc.objectives, weights[j], zref);
        }
        if (accept) {
            inc = y;
            ++replaced;
        }
    }
    return replaced;
}

} // namespace aawa
