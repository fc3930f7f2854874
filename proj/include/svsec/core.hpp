#pragma once

#include <utility>

#include "svsec/multiindex.hpp"

namespace svsec {

/// N_{n,d} = prod_i C(n_i + d_i, d_i), the number of multihomogeneous
/// monomials of multidegree d, i.e. the affine ambient dimension of the
/// Segre-Veronese embedding (projective dimension is N - 1).
Int ambient_count(const MultiIndex& n, const MultiIndex& d);

/// min(N_{n,d}, m(|n|+1)): the expected affine dimension of the m-th
/// secant cone.  Expected projective dimension is this value - 1.
Int expected_rank(const MultiIndex& n, const MultiIndex& d, const Int& m);

struct CriticalValues {
    Int lower;  // r_* = floor(N / (|n|+1))
    Int upper;  // r^* = ceil (N / (|n|+1))
};

CriticalValues critical_values(const MultiIndex& n, const MultiIndex& d);

AbundanceClass abundance(const MultiIndex& n, const MultiIndex& d, const Int& m);

/// Split numbers of the differential Horace step.  Requires d_1 >= 1 and
/// (|n|+1) r >= N_{n,d(1)}; throws std::domain_error ("Horace step
/// inapplicable") when s_r would be negative.
HoraceNumbers horace_numbers(const MultiIndex& n, const MultiIndex& d, const Int& r);

/// True iff m <= r_* - |n| - 1 or m >= r^* + |n| + 1, the range where
/// non-defectivity follows from Blomenhofer-Casarotti, Theorem 4.8.
bool bc_window(const MultiIndex& n, const MultiIndex& d, const Int& m);

/// Sort the factors as pairs (n_i, d_i), ascending in n_i, ties broken
/// ascending in d_i.  Defectivity is invariant under this permutation.
std::pair<MultiIndex, MultiIndex> normalize(const MultiIndex& n, const MultiIndex& d);

}  // namespace svsec
