#ifndef CIM_RANDOM_HPP
#define CIM_RANDOM_HPP

#include <cstdint>

namespace cim {

// splitmix64; identical streams across platforms for seeded tests.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); n > 0.
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

    bool coin() { return (next() & 1) != 0; }
};

} // namespace cim

#endif
