#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "svsec/primefield.hpp"

namespace svsec {

/// Dense row-major matrix over F_p.  Matrices at the scale this library
/// targets (<= a few thousand columns) are dense, so no sparse storage.
struct FpMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    PrimeField field;
    std::vector<std::uint64_t> a;

    FpMatrix() = default;
    FpMatrix(std::size_t r, std::size_t c, PrimeField f)
        : rows(r), cols(c), field(f), a(r * c, 0) {}

    std::uint64_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    std::uint64_t* row(std::size_t i) { return a.data() + i * cols; }
    const std::uint64_t* row(std::size_t i) const { return a.data() + i * cols; }
};

/// Exact rank by in-place fraction-free row reduction; deterministic.
std::size_t rank_in_place(FpMatrix& m);

/// Rank of a copy (the input is not modified).
std::size_t rank(const FpMatrix& m);

/// SMS-style sparse text: header "rows cols modulus", one "i j value"
/// triple per nonzero entry (1-based), terminated by "0 0 0".
void write_sms(const FpMatrix& m, std::ostream& os);

}  // namespace svsec
