#ifndef SOFTTOPO_RNG_HPP
#define SOFTTOPO_RNG_HPP

#include <cstdint>

namespace softtopo {

/// Deterministic 64-bit generator (splitmix64 finalizer). The std::
/// distributions are implementation-defined, so all randomized suites
/// draw through this class to keep reports byte-identical everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Draw in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// Draw in [lo, hi] inclusive.
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
        return lo + below(hi - lo + 1);
    }

    bool coin() { return (next() & 1u) != 0; }

private:
    std::uint64_t state_;
};

/// Per-trial seed so trials stay independent of execution order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t trial) {
    SplitMix64 mix(seed ^ (trial * 0x9e3779b97f4a7c15ULL) ^ 0x5851f42d4c957f2dULL);
    mix.next();
    return mix.next();
}

}  // namespace softtopo

#endif
