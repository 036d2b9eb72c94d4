#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Pinned hashing and RNG primitives. Every random decision in the pipeline
// derives from these two functions, so independent implementations can
// reproduce outputs bit-for-bit. Do not swap in std::hash or std::shuffle:
// neither is specified across platforms.

namespace medalforge {

// FNV-1a, 64-bit.
inline constexpr uint64_t kFnvOffsetBasis = 0xcbf29ce484222325ull;
inline constexpr uint64_t kFnvPrime = 0x100000001b3ull;

constexpr uint64_t fnv1a64(std::string_view data, uint64_t h = kFnvOffsetBasis) {
    for (unsigned char c : data) {
        h ^= c;
        h *= kFnvPrime;
    }
    return h;
}

// One application of the splitmix64 output function (state = x, one step).
constexpr uint64_t splitmix64(uint64_t x) {
    uint64_t z = x + 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// splitmix64 as a stream generator.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform draw in [0, 1): next() / 2^64.
    double next_unit() { return static_cast<double>(next()) * 0x1p-64; }

    // Uniform draw in [0, bound). bound must be > 0. Modulo draw, pinned.
    uint64_t next_below(uint64_t bound) { return next() % bound; }

private:
    uint64_t state_;
};

// Seed for a keyed sub-stream: splitmix64(seed XOR fnv1a64(key)).
inline uint64_t keyed_seed(uint64_t seed, std::string_view key) {
    return splitmix64(seed ^ fnv1a64(key));
}

// In-place Fisher-Yates, high index down to 1, j = next() % (i + 1).
template <typename T>
void seeded_shuffle(std::vector<T>& items, SplitMix64& gen) {
    for (size_t i = items.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(gen.next_below(i));
        std::swap(items[i - 1], items[j]);
    }
}

template <typename T>
void seeded_shuffle(std::vector<T>& items, uint64_t seed) {
    SplitMix64 gen(seed);
    seeded_shuffle(items, gen);
}

}  // namespace medalforge
