#pragma once

#include <optional>
#include <utility>

#include "svsec/horace.hpp"

namespace svsec {

/// Property-T triple (n0, m, t) with its context: x = dim X and
/// alpha_plus_1 = N_{n,d}, for Y = P^{n0} x X in P(V (x) W).
struct TTriple {
    int n0 = 0;
    Int m;
    Int t;
    int x = 0;
    Int alpha_plus_1;
};

struct Thresholds {
    Int lower;  // a_* = floor((alpha+1) / (n0 + x + 1))
    Int upper;  // a^* = ceil ((alpha+1) / (n0 + x + 1))
};

Thresholds thresholds(int n0, int x, const Int& alpha_plus_1);

/// The two sub-triples of the splitting step:
/// ((n', m', t + m - m'), (n0 - n' - 1, m - m', t + m')).
std::pair<TTriple, TTriple> split_reduce(const TTriple& tri, int n_prime, const Int& m_prime);

/// Compares m(n0 + x + 1) + t(n0 + 1) with (n0 + 1)(alpha + 1).
AbundanceClass triple_abundance(const TTriple& tri);

/// Certificate for property T(n0, m, t) on Y = P^{n0} x SV_n^d.  For t = 0
/// and m <= (n0+1) a_* or m >= (n0+1) a^* the proof is the splitting chain
/// with n' = 0 and m' = a at every step, closed by rank checks of the base
/// triples (0, a, n0 a); other inputs go straight to the rank oracle.
Certificate certify_T(int n0, const MultiIndex& n, const MultiIndex& d, const Int& m,
                      const Int& t, const CertifyConfig& cfg = {});

/// Certified non-defectivity range of SV_{(n0,n)}^{(1,d)} (pre: all
/// d_i >= 3): every m <= first or m >= second is non-defective; the gap is
/// at most n0 + 1.
std::pair<Int, Int> theorem12_range(int n0, const MultiIndex& n, const MultiIndex& d);

/// Largest m for which generic (m-1)-identifiability follows (numeric
/// bound only; the implication itself is cited, not verified).  Without n0
/// this is the largest m with m(|n|+1) <= N; with n0 it is (n0+1) a_*.
Int identifiability_bound(const MultiIndex& n, const MultiIndex& d,
                          std::optional<int> n0 = std::nullopt);

}  // namespace svsec
