#include "svsec/fpmatrix.hpp"

#include <algorithm>
#include <ostream>

namespace svsec {

namespace {

// Fused r + c*v mod p kernels.  Inputs are canonical representatives; the
// per-reduction preconditions on intermediate widths are noted inline.
struct FmaM31 {
    static std::uint64_t fma(std::uint64_t r, std::uint64_t c, std::uint64_t v, std::uint64_t) {
        std::uint64_t t = r + c * v;  // < 2^31 + 2^62 < 2^63
        t = (t & MERSENNE31) + (t >> 31);
        t = (t & MERSENNE31) + (t >> 31);
        if (t >= MERSENNE31) t -= MERSENNE31;
        return t;
    }
};

struct FmaM61 {
    static std::uint64_t fma(std::uint64_t r, std::uint64_t c, std::uint64_t v, std::uint64_t) {
        unsigned __int128 w = static_cast<unsigned __int128>(c) * v + r;
        std::uint64_t t = static_cast<std::uint64_t>(w & MERSENNE61) +
                          static_cast<std::uint64_t>(w >> 61);
        if (t >= MERSENNE61) t -= MERSENNE61;
        return t;
    }
};

struct FmaSmall {
    static std::uint64_t fma(std::uint64_t r, std::uint64_t c, std::uint64_t v, std::uint64_t p) {
        return (r + c * v) % p;  // p < 2^31 keeps the sum below 2^63
    }
};

struct FmaWide {
    static std::uint64_t fma(std::uint64_t r, std::uint64_t c, std::uint64_t v, std::uint64_t p) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(c) * v + r) % p);
    }
};

template <class Fma>
std::size_t rank_kernel(FpMatrix& m) {
    const PrimeField& F = m.field;
    const std::uint64_t p = F.p;
    std::size_t rk = 0;
    for (std::size_t col = 0; col < m.cols && rk < m.rows; ++col) {
        std::size_t piv = rk;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != rk)
            std::swap_ranges(m.row(piv) + col, m.row(piv) + m.cols, m.row(rk) + col);
        std::uint64_t* prow = m.row(rk);
        std::uint64_t pinv = F.inv(prow[col]);
        for (std::size_t x = col; x < m.cols; ++x)
            prow[x] = F.mul(prow[x], pinv);
        for (std::size_t r = rk + 1; r < m.rows; ++r) {
            std::uint64_t* trow = m.row(r);
            std::uint64_t c = trow[col];
            if (c == 0) continue;
            std::uint64_t cneg = p - c;
            trow[col] = 0;
            for (std::size_t x = col + 1; x < m.cols; ++x)
                trow[x] = Fma::fma(trow[x], cneg, prow[x], p);
        }
        ++rk;
    }
    return rk;
}

}  // namespace

std::size_t rank_in_place(FpMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    switch (m.field.red) {
        case PrimeField::Reduction::Mersenne31: return rank_kernel<FmaM31>(m);
        case PrimeField::Reduction::Mersenne61: return rank_kernel<FmaM61>(m);
        case PrimeField::Reduction::Small: return rank_kernel<FmaSmall>(m);
        case PrimeField::Reduction::Wide: return rank_kernel<FmaWide>(m);
    }
    return 0;
}

std::size_t rank(const FpMatrix& m) {
    FpMatrix copy = m;
    return rank_in_place(copy);
}

void write_sms(const FpMatrix& m, std::ostream& os) {
    os << m.rows << ' ' << m.cols << ' ' << m.field.p << '\n';
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0)
                os << i + 1 << ' ' << j + 1 << ' ' << m.at(i, j) << '\n';
    os << "0 0 0\n";
}

}  // namespace svsec
