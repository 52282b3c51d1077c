#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace ordpat {

/// Seeded deterministic stream. mt19937_64 output is fully specified by
/// the standard; the scalers below avoid the implementation-defined
/// std::*_distribution, so identical seeds give identical results on any
/// platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_unit() < p; }

    /// Uniform integer in [0, n), rejection-sampled.
    uint64_t below(uint64_t n) {
        if (n == 0) throw std::invalid_argument("rng: empty range");
        const uint64_t rem = (UINT64_MAX % n + 1) % n;  // 2^64 mod n
        uint64_t r = engine_();
        if (rem != 0) {
            const uint64_t bound = UINT64_MAX - rem + 1;  // accept r < bound
            while (r >= bound) r = engine_();
        }
        return r % n;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace ordpat
