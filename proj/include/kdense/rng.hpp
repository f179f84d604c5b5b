#pragma once

#include <cstdint>
#include <random>

namespace kdense {

// Seedable pseudo-random stream. Bounded draws use rejection sampling on the
// raw 64-bit output, so sequences depend only on the mt19937_64 state and are
// identical across standard library implementations. Substreams for ensemble
// instance i are seeded as seed+i.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return gen_(); }

    // Uniform integer in [0, n).
    std::uint64_t uniform_index(std::uint64_t n) {
        if (n == 0) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % n;
    }

    // Uniform double in [0, 1) with 53-bit resolution.
    double uniform_real() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    bool coin() { return (gen_() & 1u) != 0; }

    RandomStream substream(std::uint64_t i) const { return RandomStream(seed_ + i); }

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

}  // namespace kdense
