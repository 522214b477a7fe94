#pragma once

#include <cstdint>
#include <string_view>

namespace torlim {

// Deterministic PRNG used everywhere a seed appears in the public API.
//
// The scheme is splitmix64 (Steele/Lea/Flood): state advances by the golden
// 64-bit constant and each output is a finalizer of the state. It is fixed
// here, rather than delegated to <random>, because std::uniform_int_distribution
// is implementation-defined and would break the bit-identical-output contract
// across standard libraries.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); n = 0 yields 0. Plain modulo: the tiny bias is
    // irrelevant here and the reduction is fully specified.
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    // Uniform integer in [lo, hi] inclusive.
    long range(long lo, long hi) {
        if (hi <= lo) return lo;
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::uint64_t state_;
};

// Combines a user-facing seed with a context value into a fresh stream seed.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// FNV-1a, used for input digests in reports and presentation-derived seeds.
inline std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace torlim
