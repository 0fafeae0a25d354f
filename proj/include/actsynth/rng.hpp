#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace actsynth {

// 64-bit FNV-1a over a byte string.
uint64_t fnv1a64(std::string_view s, uint64_t h = 14695981039346656037ull);

// Derives a child seed from (seed, tag, index). Used everywhere a stage of a
// pipeline needs its own reproducible stream: the same (seed, tag, index)
// always yields the same child stream, independent of call order.
uint64_t seed_mix(uint64_t seed, std::string_view tag, uint64_t index = 0);

// Deterministic RNG. All distributions are implemented here on top of the raw
// mt19937_64 output so results are identical across standard libraries and
// platforms (std:: distributions are implementation-defined).
class Rng {
public:
    explicit Rng(uint64_t seed) : seed_(seed), gen_(seed) {}

    uint64_t seed() const { return seed_; }
    uint64_t next_u64() { return gen_(); }

    // [0, 1)
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    // [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // [lo, hi], inclusive, unbiased
    int64_t uniform_int(int64_t lo, int64_t hi);

    bool bernoulli(double p) { return uniform() < p; }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[size_t(uniform_int(0, int64_t(v.size()) - 1))];
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = size_t(uniform_int(0, int64_t(i) - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

    // Independent substream derived from this generator's seed (not its
    // current state), so forks are re-derivable after the fact.
    Rng fork(std::string_view tag, uint64_t index = 0) const {
        return Rng(seed_mix(seed_, tag, index));
    }

private:
    uint64_t seed_;
    std::mt19937_64 gen_;
};

}  // namespace actsynth
