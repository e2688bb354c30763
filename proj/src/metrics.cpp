#include "aawa/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace aawa {

double hypervolume_2d(std::span<const Objectives> front, const Objectives& reference) {
    std::vector<Objectives> pts;
    pts.reserve(front.size());
    for (const auto& p : front) {
        if (p[0] < reference[0] && p[1] < reference[1]) pts.push_back(p);
    }
    if (pts.empty()) return 0.0;
    std::sort(pts.begin(), pts.end());

    // staircase of nondominated points: x strictly increasing, y strictly
    // decreasing
    std::vector<Objectives> stair;
    for (const auto& p : pts) {
        if (stair.empty() || p[1] < stair.back()[1]) stair.push_back(p);
    }

    double area = 0.0;
    for (std::size_t i = 0; i < stair.size(); ++i) {
        const double next_x = i + 1 < stair.size() ? stair[i + 1][0] : reference[0];
        area += (next_x - stair[i][0]) * (reference[1] - stair[i][1]);
    }
    return area;
}

double pd_dissimilarity(const Objectives& a, const Objectives& b) {
    const double s = std::pow(std::abs(a[0] - b[0]), 0.1) + std::pow(std::abs(a[1] - b[1]), 0.1);
    return std::pow(s, 10.0);
}

namespace {

// exact value of the accumulation recursion, O(2^n * n^2)
double pd_exact(std::span<const double> d, std::size_t n) {
    std::vector<double> pd(std::size_t{1} << n, 0.0);
    for (std::uint32_t set = 1; set < (std::uint32_t{1} << n); ++set) {
        if (std::popcount(set) < 2) continue;
        double best = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            if (!(set >> v & 1u)) continue;
            const std::uint32_t rest = set & ~(std::uint32_t{1} << v);
            double dmin = std::numeric_limits<double>::infinity();
            for (std::size_t u = 0; u < n; ++u) {
                if (rest >> u & 1u) dmin = std::min(dmin, d[v * n + u]);
            }
            best = std::max(best, pd[rest] + dmin);
        }
        pd[set] = best;
    }
    return pd[(std::uint32_t{1} << n) - 1];
}

// farthest-first accumulation tried from every seed; a lower bound on the
// recursion value, used where the exact computation is intractable
double pd_greedy(std::span<const double> d, std::size_t n) {
    double best = 0.0;
    std::vector<double> min_dist(n);
    for (std::size_t seed = 0; seed < n; ++seed) {
        for (std::size_t i = 0; i < n; ++i) min_dist[i] = d[i * n + seed];
        min_dist[seed] = -1.0; // marks membership
        double total = 0.0;
        for (std::size_t step = 1; step < n; ++step) {
            std::size_t pick = 0;
            double pick_d = -1.0;
            for (std::size_t i = 0; i < n; ++i) {
                if (min_dist[i] > pick_d) {
                    pick_d = min_dist[i];
                    pick = i;
                }
            }
            total += pick_d;
            min_dist[pick] = -1.0;
            for (std::size_t i = 0; i < n; ++i) {
                if (min_dist[i] >= 0.0) min_dist[i] = std::min(min_dist[i], d[i * n + pick]);
            }
        }
        best = std::max(best, total);
    }
    return best;
}

} // namespace

double pure_diversity(std::span<const Objectives> front) {
    const std::size_t n = front.size();
    if (n < 2) return 0.0;

    std::vector<double> d(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = pd_dissimilarity(front[i], front[j]);
            d[i * n + j] = v;
            d[j * n + i] = v;
        }
    }
    return n <= 16 ? pd_exact(d, n) : pd_greedy(d, n);
}

NormBounds pooled_bounds(std::span<const std::vector<Objectives>> fronts) {
    NormBounds b;
    b.lo = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    b.hi = {-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    bool any = false;
    for (const auto& front : fronts) {
        for (const auto& p : front) {
            any = true;
            for (std::size_t d = 0; d < 2; ++d) {
                b.lo[d] = std::min(b.lo[d], p[d]);
                b.hi[d] = std::max(b.hi[d], p[d]);
            }
        }
    }
    if (!any) return NormBounds{};
    return b;
}

std::vector<std::vector<Objectives>> normalize_fronts(
    std::span<const std::vector<Objectives>> fronts, NormBounds* bounds_out) {
    const NormBounds b = pooled_bounds(fronts);
    if (bounds_out) *bounds_out = b;
    std::vector<std::vector<Objectives>> out;
    out.reserve(fronts.size());
    for (const auto& front : fronts) {
        std::vector<Objectives> nf;
        nf.reserve(front.size());
        for (const auto& p : front) {
            Objectives q{0.0, 0.0};
            for (std::size_t d = 0; d < 2; ++d) {
                const double range = b.hi[d] - b.lo[d];
                q[d] = range > 0.0 ? (p[d] - b.lo[d]) / range : 0.0;
            }
            nf.push_back(q);
        }
        out.push_back(std::move(nf));
    }
    return out;
}

std::vector<int> rank_descending(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    std::vector<int> ranks(n, 0);
    for (std::size_t pos = 0; pos < n; ++pos) {
        if (pos > 0 && values[order[pos]] == values[order[pos - 1]])
            ranks[order[pos]] = ranks[order[pos - 1]];
        else
            ranks[order[pos]] = static_cast<int>(pos) + 1;
    }
    return ranks;
}

} // namespace aawa
