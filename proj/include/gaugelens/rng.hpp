#pragma once

#include <cmath>
#include <cstdint>

namespace gaugelens {

// Seeded, bit-stable random source. std::normal_distribution and friends
// are implementation-defined, so every stochastic operation in this
// library draws from this generator instead: xoshiro256++ seeded through
// splitmix64, with a fixed Box-Muller for normals. Identical seeds give
// identical streams on every platform and thread count.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& s : state_) s = splitmix64(x);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller. Each call consumes exactly two
    // uniforms so the stream position does not depend on past output.
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        while (u1 == 0.0) u1 = uniform(); // log(0) guard, probability 2^-53
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    // Deterministic sub-stream derivation; mixes the base seed with any
    // number of stream indices so (kappa index, gauge seed) pairs map to
    // independent generators.
    static std::uint64_t derive(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) {
        std::uint64_t x = base;
        x = splitmix64(x) ^ (a + 0x9e3779b97f4a7c15ULL);
        x = splitmix64(x) ^ (b + 0xbf58476d1ce4e5b9ULL);
        return splitmix64(x);
    }

private:
    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    static std::uint64_t splitmix64(std::uint64_t&& x) {
        std::uint64_t y = x;
        return splitmix64(y);
    }
    static std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }

    std::uint64_t state_[4];
};

} // namespace gaugelens
