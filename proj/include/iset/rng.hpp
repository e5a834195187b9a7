#ifndef ISET_RNG_HPP
#define ISET_RNG_HPP

// Deterministic, stream-splittable random source.
//
// A 64-bit master seed and a 64-bit stream index (typically the trial number)
// are expanded through SplitMix64 into the 256-bit state of a xoshiro256++
// engine.  Every consumer draws from its own (seed, stream) pair, so results
// are bit-for-bit reproducible regardless of thread scheduling, platform, or
// standard library.  Scheme identifier: kRngScheme (bump on any change).

#include <cstdint>
#include <cstddef>
#include <vector>
#include <stdexcept>

namespace iset {

inline constexpr const char* kRngScheme = "splitmix64/xoshiro256++ v1";

// Fixed-increment SplitMix64 (Steele, Lea, Flood 2014); used only for seeding.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t s) : state(s) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

class Rng {
public:
    // Stream derivation: mix the master seed, then fold in the stream index
    // with a second SplitMix64 chain.  Streams with distinct indices are
    // statistically independent for any fixed master seed.
    Rng(std::uint64_t master_seed, std::uint64_t stream = 0) {
        SplitMix64 outer(master_seed);
        std::uint64_t root = outer.next();
        SplitMix64 inner(root ^ (stream * 0xd2b74407b1ce6e93ULL + 0x8bb84b93962eacc9ULL));
        for (auto& w : s_) w = inner.next();
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;  // xoshiro forbids all-zero
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Unbiased integer in [0, bound) via Lemire's multiply-shift rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
        std::uint64_t x = next_u64();
        __uint128_t m = static_cast<__uint128_t>(x) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (lo < threshold) {
                x = next_u64();
                m = static_cast<__uint128_t>(x) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_double() < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4];
};

}  // namespace iset

#endif  // ISET_RNG_HPP
