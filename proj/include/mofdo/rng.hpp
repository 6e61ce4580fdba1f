#ifndef MOFDO_RNG_HPP
#define MOFDO_RNG_HPP

#include <cstdint>
#include <random>

namespace mofdo {

// Seeded random source. Draws are built directly from the 64-bit engine
// output, so a given seed yields the same stream on every standard library
// (std::uniform_real_distribution is implementation-defined).
class Rng {
public:
    using Engine = std::mt19937_64;

    explicit Rng(std::uint64_t seed) : engine_(seed) { }

    // Uniform in [0, 1).
    auto uniform() -> double
    {
        return static_cast<double>(engine_() >> 11U) * 0x1.0p-53;
    }

    // Uniform in [lo, hi).
    auto uniform(double lo, double hi) -> double { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n). n must be positive.
    auto index(std::uint64_t n) -> std::uint64_t
    {
        // rejection sampling to avoid modulo bias
        auto const limit = Engine::max() - Engine::max() % n;
        std::uint64_t v = 0;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

    auto bernoulli(double p) -> bool { return uniform() < p; }

private:
    Engine engine_;
};

} // namespace mofdo

#endif
