#include "svsec/primefield.hpp"

namespace svsec {

namespace {

std::uint64_t mulmod_wide(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_wide(r, a, p);
        a = mulmod_wide(a, a, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is known to be exact below 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_wide(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t modulus) : p(modulus) {
    if (!is_prime_u64(p))
        throw std::invalid_argument("modulus is not prime");
    if (p == MERSENNE31)
        red = Reduction::Mersenne31;
    else if (p == MERSENNE61)
        red = Reduction::Mersenne61;
    else if (p < (1ull << 31))
        red = Reduction::Small;
    else if (p < (1ull << 62))
        red = Reduction::Wide;
    else
        throw std::invalid_argument("modulus too large (need p < 2^62)");
}

std::uint64_t PrimeField::mul(std::uint64_t a, std::uint64_t b) const {
    switch (red) {
        case Reduction::Mersenne31: {
            std::uint64_t t = a * b;  // both < 2^31, product < 2^62
            t = (t & MERSENNE31) + (t >> 31);
            t = (t & MERSENNE31) + (t >> 31);
            if (t >= MERSENNE31) t -= MERSENNE31;
            return t;
        }
        case Reduction::Mersenne61: {
            unsigned __int128 w = static_cast<unsigned __int128>(a) * b;
            std::uint64_t t = static_cast<std::uint64_t>(w & MERSENNE61) +
                              static_cast<std::uint64_t>(w >> 61);
            if (t >= MERSENNE61) t -= MERSENNE61;
            return t;
        }
        case Reduction::Small:
            return (a * b) % p;
        case Reduction::Wide:
            return mulmod_wide(a, b, p);
    }
    return 0;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    // Extended Euclid in signed 128-bit; p < 2^62 keeps everything in range.
    __int128 t = 0, newt = 1;
    __int128 r = static_cast<__int128>(p), newr = static_cast<__int128>(a);
    while (newr != 0) {
        __int128 q = r / newr;
        __int128 tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += static_cast<__int128>(p);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

}  // namespace svsec
