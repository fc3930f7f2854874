#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace svsec {

inline constexpr std::uint64_t MERSENNE31 = (1ull << 31) - 1;
inline constexpr std::uint64_t MERSENNE61 = (1ull << 61) - 1;

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Prime field with word-size modulus.  Elements are canonical
/// representatives in [0, p).  Reduction strategy is picked once from p:
/// dedicated folds for the two Mersenne primes we use by default, plain
/// 64-bit remainder below 2^31, and 128-bit remainder otherwise.
struct PrimeField {
    enum class Reduction { Mersenne31, Mersenne61, Small, Wide };

    std::uint64_t p = MERSENNE31;
    Reduction red = Reduction::Mersenne31;

    PrimeField() = default;
    explicit PrimeField(std::uint64_t modulus);

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;  // p < 2^62 so no overflow
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
};

/// splitmix64: tiny, fully specified generator so that samples are a pure
/// function of the seed on every platform.
struct SeedStream {
    std::uint64_t state;

    explicit SeedStream(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) by rejection (no modulo bias).
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % bound;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }
};

/// Fold a value into a seed; chains of absorb() derive per-path seeds.
inline std::uint64_t absorb_seed(std::uint64_t seed, std::uint64_t value) {
    SeedStream s(seed ^ (value + 0x9e3779b97f4a7c15ull));
    return s.next();
}

inline std::uint64_t absorb_seed(std::uint64_t seed, const std::vector<int>& values) {
    for (int v : values) seed = absorb_seed(seed, static_cast<std::uint64_t>(v));
    return absorb_seed(seed, values.size());
}

}  // namespace svsec
