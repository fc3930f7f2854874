#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace svsec {

/// Arbitrary-precision integer; all counting in this library is exact.
using Int = mpz_class;
/// Arbitrary-precision rational.
using Rat = mpq_class;

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Floor division, exact for negative numerators as well.
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool fits_u64(const Int& v) {
    return v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Int& v) {
    static_assert(sizeof(unsigned long) == 8, "LP64 platform assumed");
    if (!fits_u64(v))
        throw std::overflow_error("value does not fit in 64 bits: " + v.get_str());
    return mpz_get_ui(v.get_mpz_t());
}

}  // namespace svsec
