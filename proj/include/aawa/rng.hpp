#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace aawa {

/// Seeded random stream. All draws go through explicit helpers instead of
/// std distributions, so the exact value sequence is pinned by the engine
/// alone and reproduces across standard libraries and platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform index in [0, n). n must be positive.
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }

  private:
    std::mt19937_64 eng_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

/// Stable seed derivation: mixes the base seed with a list of string tags and
/// an integer, independent of platform. Used for run seeds and terrain seeds.
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag_a,
                                 std::string_view tag_b = {}, std::uint64_t n = 0) {
    std::uint64_t h = splitmix64(base);
    h = splitmix64(h ^ fnv1a64(tag_a));
    if (!tag_b.empty()) h = splitmix64(h ^ fnv1a64(tag_b));
    return splitmix64(h ^ n);
}

} // namespace aawa
