#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "svsec/core.hpp"
#include "svsec/fpmatrix.hpp"
#include "svsec/monomials.hpp"

namespace svsec {

/// Thrown when a requested matrix would exceed the configured entry cap.
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class RankVerdict { CertifiedNondefective, RankDeficitObserved };

inline const char* to_string(RankVerdict v) {
    return v == RankVerdict::CertifiedNondefective ? "certified_nondefective"
                                                   : "rank_deficit_observed";
}

/// Result of a rank experiment.  certified_nondefective means some trial
/// attained the expected rank, which is a proof of non-defectivity (a rank
/// over F_p at special points lower-bounds the generic rank in
/// characteristic zero).  rank_deficit_observed is evidence only; before
/// it is reported the experiment is repeated over extra_primes.
struct RankOutcome {
    std::size_t observed_rank = 0;
    std::size_t expected = 0;
    RankVerdict verdict = RankVerdict::RankDeficitObserved;
    int trials = 0;  // trials actually performed at the certifying/primary prime
    std::uint64_t prime = MERSENNE31;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> extra_primes;

    bool certified() const { return verdict == RankVerdict::CertifiedNondefective; }
};

struct OracleOptions {
    std::uint64_t prime = MERSENNE31;
    std::uint64_t seed = 0;
    int trials = 3;
    std::size_t matrix_cap = 10'000'000;  // max rows*cols entries
    bool recheck_deficit = true;
};

/// Primes a deficit is re-run over before being reported.
inline const std::vector<std::uint64_t>& deficit_recheck_primes() {
    static const std::vector<std::uint64_t> ps = {MERSENNE31, MERSENNE61, 65521};
    return ps;
}

/// One sample point of P^{n_1} x ... x P^{n_k}: an affine representative
/// per factor, each a nonzero vector of length n_i + 1 over F_p.
struct PointSample {
    std::vector<std::vector<std::uint64_t>> u;
};

/// Uniform coordinates in F_p; an all-zero representative is resampled.
PointSample sample_point(const MultiIndex& n, const PrimeField& F, SeedStream& rng);

/// Evaluation vector of the Segre-Veronese at the point, i.e. the tensor
/// product of the per-factor monomial evaluation vectors, laid out in the
/// factor-major / reverse-lex column order.
std::vector<std::uint64_t> point_row(const MultiIndex& n, const MultiIndex& d,
                                     const PointSample& pt, const PrimeField& F);

/// Affine tangent cone block at the point: |n|+1 rows.  Row 0 is the point
/// itself; then, per factor i, the n_i derivative rows d/dx_j with the
/// coordinate j of largest representative dropped (it is recoverable from
/// the Euler relation as long as p > d_i, which PrimeField users enforce).
FpMatrix tangent_block(const MultiIndex& n, const MultiIndex& d, const PointSample& pt,
                       const PrimeField& F);

/// Full Terracini matrix: m tangent blocks stacked, plus, when t > 0,
/// t*(n_1+1) rows of the form e_j (x) w' with w' a random point on the cone
/// over the factors 2..k.  t > 0 requires d_1 = 1.
FpMatrix terracini_matrix(const MultiIndex& n, const MultiIndex& d, std::size_t m,
                          std::size_t t, const PrimeField& F, std::uint64_t seed,
                          std::size_t matrix_cap = 10'000'000);

/// Rank experiment for sigma_m(SV_n^d) against expected_rank(n, d, m).
RankOutcome check_nondefective(const MultiIndex& n, const MultiIndex& d, const Int& m,
                               const OracleOptions& opt = {});

/// Rank experiment for the extended property T(n0, m, t) on
/// P^{n0} x SV_n^d, realized as the problem ((n0, n), (1, d)); the target
/// rank is min((n0+1) N_{n,d}, m (n0+|n|+1) + t (n0+1)).
RankOutcome check_T_property(int n0, const MultiIndex& n, const MultiIndex& d, const Int& m,
                             const Int& t, const OracleOptions& opt = {});

/// Expected value used by check_T_property.
Int t_property_expected(int n0, const MultiIndex& n, const MultiIndex& d, const Int& m,
                        const Int& t);

/// Seed a matrix build deterministically from the query parameters.
std::uint64_t derive_matrix_seed(std::uint64_t seed, std::uint64_t prime, const MultiIndex& n,
                                 const MultiIndex& d, std::size_t m, std::size_t t);

}  // namespace svsec
