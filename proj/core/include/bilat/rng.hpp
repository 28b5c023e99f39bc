#ifndef BILAT_RNG_HPP
#define BILAT_RNG_HPP

#include <array>
#include <cstdint>

namespace bilat {

/// Deterministic PRNG pinned for reproducible instance streams:
/// xoshiro256** with the state seeded by splitmix64. Standard-library
/// distributions are avoided because they are not portable across
/// implementations; see docs/file-format.md.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next();

    /// Uniform in [0, n), n >= 1; debiased by rejection.
    std::uint64_t below(std::uint64_t n);

    /// Uniform in [lo, hi] inclusive.
    int range(int lo, int hi);

    /// Uniform in [0,1) with 53 bits.
    double unit();

    /// True with probability p.
    bool chance(double p) { return unit() < p; }

    /// Independent child stream; deterministic in (parent state, tag).
    Rng fork(std::uint64_t tag);

private:
    std::array<std::uint64_t, 4> state_;
};

std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace bilat

#endif
