#ifndef MCGS_RNG_HPP
#define MCGS_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace mcgs {

/// Seeded 64-bit generator with hand-rolled bounded draws so sequences do not
/// depend on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, n), unbiased via rejection.
    std::uint64_t uniform_index(std::uint64_t n) {
        if (n == 0) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t r;
        do {
            r = gen_();
        } while (r >= limit);
        return r % n;
    }

    /// Uniform in [0, 1).
    double uniform_real() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform_real() < p; }

    /// Index drawn proportionally to the given non-negative weights.
    std::size_t weighted_index(const std::vector<double>& weights) {
        double total = 0.0;
        for (double w : weights) total += w;
        double x = uniform_real() * total;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            x -= weights[i];
            if (x < 0.0) return i;
        }
        return weights.size() - 1;
    }

    /// First k elements of a Fisher-Yates shuffle; `items` is reordered so
    /// that [0, k) holds the chosen elements.
    template <typename T>
    void partial_shuffle(std::vector<T>& items, std::size_t k) {
        if (k > items.size()) k = items.size();
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t j = i + static_cast<std::size_t>(uniform_index(items.size() - i));
            std::swap(items[i], items[j]);
        }
    }

private:
    std::mt19937_64 gen_;
};

/// Deterministic seed mixing (splitmix64 over the concatenated words), used to
/// derive independent per-trial seeds from a base seed and cell coordinates.
inline std::uint64_t mix_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> words) {
    auto split = [](std::uint64_t& s) {
        s += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    std::uint64_t state = seed;
    std::uint64_t out = split(state);
    for (std::uint64_t w : words) {
        state ^= w + 0x9e3779b97f4a7c15ULL + (state << 6) + (state >> 2);
        out ^= split(state);
    }
    return out;
}

} // namespace mcgs

#endif
