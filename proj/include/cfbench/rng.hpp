#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cfbench {

// Deterministic, platform-independent RNG. std::uniform_int_distribution is
// not guaranteed to produce the same stream across standard libraries, so all
// seeded choices in the toolkit go through this splitmix64 generator instead.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, bound) via rejection sampling.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % bound;
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[below(i)]);
        }
    }

    template <typename T>
    std::vector<T> sample(const std::vector<T>& pool, std::size_t n) {
        std::vector<T> copy = pool;
        shuffle(copy);
        if (n < copy.size()) copy.resize(n);
        return copy;
    }

private:
    std::uint64_t state_;
};

// FNV-1a, used to fold string labels into substream seeds and trial keys.
inline std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

// Derives an independent child seed for a named substream, so that e.g. the
// board target-square draw does not perturb the sudoku digit draw.
inline std::uint64_t subseed(std::uint64_t seed, std::string_view label) {
    SplitMix64 mix(seed ^ fnv1a(label));
    return mix.next();
}

} // namespace cfbench
