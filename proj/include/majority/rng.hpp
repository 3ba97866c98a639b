#pragma once

#include <cstdint>

namespace majority {

/// Counter-based uniform draws: every value is a pure function of
/// (seed, trial, stream, index), so any split of trials over workers
/// reproduces the serial run bit for bit.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t bits(std::uint64_t trial, std::uint64_t stream, std::uint64_t index) const noexcept
    {
        std::uint64_t h = mix(seed_ ^ 0x6a09e667f3bcc909ULL);
        h = mix(h ^ trial);
        h = mix(h ^ (stream * 0x9e3779b97f4a7c15ULL));
        return mix(h ^ index);
    }

    /// Uniform double in [0,1).
    double uniform(std::uint64_t trial, std::uint64_t stream, std::uint64_t index) const noexcept
    {
        return static_cast<double>(bits(trial, stream, index) >> 11) * 0x1.0p-53;
    }

    std::uint64_t seed() const noexcept { return seed_; }

private:
    // splitmix64 finaliser
    static std::uint64_t mix(std::uint64_t z) noexcept
    {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
};

} // namespace majority
