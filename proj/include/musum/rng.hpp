#ifndef MUSUM_RNG_HPP
#define MUSUM_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <utility>

// Counter-based random numbers (Philox 4x32-10, Salmon et al. SC 2011).
// Every draw is a pure function of (seed, stream, item, index), so sample
// sets never depend on how work is sharded across threads.

namespace musum {

namespace detail {

inline void philox_mulhilo(uint32_t a, uint32_t b, uint32_t& lo, uint32_t& hi) {
    uint64_t p = static_cast<uint64_t>(a) * b;
    lo = static_cast<uint32_t>(p);
    hi = static_cast<uint32_t>(p >> 32);
}

} // namespace detail

struct PhiloxBlock {
    std::array<uint32_t, 4> w{};
    uint64_t lane(int i) const {
        return (static_cast<uint64_t>(w[2 * i + 1]) << 32) | w[2 * i];
    }
};

// One 128-bit Philox block keyed by `seed`, counter (item, index, stream).
inline PhiloxBlock philox4x32(uint64_t seed, uint32_t stream, uint64_t item, uint32_t index) {
    constexpr uint32_t kWeylA = 0x9E3779B9u, kWeylB = 0xBB67AE85u;
    constexpr uint32_t kMulA = 0xD2511F53u, kMulB = 0xCD9E8D57u;

    uint32_t c0 = static_cast<uint32_t>(item);
    uint32_t c1 = static_cast<uint32_t>(item >> 32);
    uint32_t c2 = index;
    uint32_t c3 = stream;
    uint32_t k0 = static_cast<uint32_t>(seed);
    uint32_t k1 = static_cast<uint32_t>(seed >> 32);

    for (int round = 0; round < 10; ++round) {
        uint32_t lo0, hi0, lo1, hi1;
        detail::philox_mulhilo(kMulA, c0, lo0, hi0);
        detail::philox_mulhilo(kMulB, c2, lo1, hi1);
        uint32_t n0 = hi1 ^ c1 ^ k0;
        uint32_t n1 = lo1;
        uint32_t n2 = hi0 ^ c3 ^ k1;
        uint32_t n3 = lo0;
        c0 = n0; c1 = n1; c2 = n2; c3 = n3;
        k0 += kWeylA;
        k1 += kWeylB;
    }
    return PhiloxBlock{{c0, c1, c2, c3}};
}

// Deterministic seed derivation for independent sub-experiments
// (per-N jobs, restarts, bootstrap draws). SplitMix64 finalizer chain.
inline uint64_t derive_seed(uint64_t seed, uint64_t tag) {
    uint64_t z = seed + 0x9E3779B97F4A7C15ull * (tag + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Sequential uniform/exponential/gaussian draws for one logical item
// (e.g. one Monte Carlo sample). Consumption order is part of the
// deterministic layout; a cursor caches the current 128-bit block.
class SampleCursor {
  public:
    SampleCursor(uint64_t seed, uint32_t stream, uint64_t item)
        : seed_(seed), stream_(stream), item_(item) {}

    // Uniform on the open interval (0, 1).
    double uniform() {
        uint64_t bits = next_u64();
        return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
    }

    double exponential() { return -std::log(uniform()); }

    // Box-Muller; both coordinates of the pair, two uniforms consumed.
    std::pair<double, double> gaussian_pair() {
        double u1 = uniform();
        double u2 = uniform();
        double rad = std::sqrt(-2.0 * std::log(u1));
        double ang = 6.283185307179586476925286766559 * u2;
        return {rad * std::cos(ang), rad * std::sin(ang)};
    }

    double gaussian() { return gaussian_pair().first; }

  private:
    uint64_t next_u64() {
        uint32_t block = idx_ >> 1;
        int lane = static_cast<int>(idx_ & 1u);
        if (block != cached_block_ || !valid_) {
            cache_ = philox4x32(seed_, stream_, item_, block);
            cached_block_ = block;
            valid_ = true;
        }
        ++idx_;
        return cache_.lane(lane);
    }

    uint64_t seed_;
    uint32_t stream_;
    uint64_t item_;
    uint32_t idx_ = 0;
    uint32_t cached_block_ = 0;
    bool valid_ = false;
    PhiloxBlock cache_{};
};

} // namespace musum

#endif
