#ifndef lcllab_rng_hpp
#define lcllab_rng_hpp

#include <cstdint>

namespace lcllab {

// splitmix64 finalizer; good avalanche, cheap, reproducible across platforms
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/*
 * Counter-based generator keyed by (seed, stream coordinates). Two generators
 * with different keys produce independent-looking streams, which is how
 * per-node randomness is derived from a single run seed.
 */
class KeyedRng {
public:
    explicit KeyedRng(uint64_t seed, uint64_t a = 0, uint64_t b = 0, uint64_t c = 0)
        : key_(mix64(mix64(mix64(mix64(seed) ^ a) ^ b) ^ c)) {}

    uint64_t next_u64() { return mix64(key_ ^ mix64(counter_++)); }

    uint32_t next_u32() { return static_cast<uint32_t>(next_u64() >> 32); }

    bool next_bit() { return (next_u64() >> 63) != 0; }

    // uniform in [0, n), n >= 1
    uint64_t uniform(uint64_t n) {
        // rejection sampling to avoid modulo bias
        uint64_t limit = n * (~0ull / n);
        uint64_t x;
        do { x = next_u64(); } while (x >= limit);
        return x % n;
    }

    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    uint64_t key_;
    uint64_t counter_ = 0;
};

} // namespace lcllab

#endif
