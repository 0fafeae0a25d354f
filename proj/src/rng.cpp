#include "actsynth/rng.hpp"

namespace actsynth {

uint64_t fnv1a64(std::string_view s, uint64_t h) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

uint64_t seed_mix(uint64_t seed, std::string_view tag, uint64_t index) {
    char buf[16];
    for (int i = 0; i < 8; ++i) buf[i] = char(seed >> (8 * i));
    for (int i = 0; i < 8; ++i) buf[8 + i] = char(index >> (8 * i));
    uint64_t h = fnv1a64(std::string_view(buf, 16));
    h = fnv1a64(tag, h);
    // splitmix64 finalizer to spread low-entropy tags
    h += 0x9e3779b97f4a7c15ull;
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ull;
    h = (h ^ (h >> 27)) * 0x94d049bb133111ebull;
    return h ^ (h >> 31);
}

int64_t Rng::uniform_int(int64_t lo, int64_t hi) {
    uint64_t range = uint64_t(hi - lo) + 1;
    if (range == 0) return int64_t(next_u64());  // full 64-bit range
    uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return lo + int64_t(x % range);
}

}  // namespace actsynth
