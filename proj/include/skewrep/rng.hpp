#pragma once

#include <cstdint>

namespace skewrep {

// Counter-based deterministic generator (splitmix64 over seed and counter).
// Every randomized operation in the library draws from one of these with an
// explicit seed, so identical seeds give identical results.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), counter_(0) {}

    std::uint64_t next_u64() {
        std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL * ++counter_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound), bound > 0
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % bound;
    }

    // independent stream seeded from this one
    Rng fork() { return Rng(next_u64()); }

private:
    std::uint64_t seed_;
    std::uint64_t counter_;
};

} // namespace skewrep
