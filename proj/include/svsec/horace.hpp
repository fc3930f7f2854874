#pragma once

#include <optional>

#include "svsec/certificate.hpp"
#include "svsec/registry.hpp"

namespace svsec {

struct CertifyConfig {
    OracleOptions oracle;
    int depth_cap = 64;
    std::size_t node_cap = 100000;
    bool oracle_fallback = true;           // try a direct rank check when induction fails
    bool attach_defective_evidence = true;  // cross-check registry defects within the cap
};

/// The three child problems and side conditions of one differential Horace
/// step applied at the first factor (callers arrange the pivot in front).
/// Throws std::domain_error when d_1 < 3, when the split numbers do not
/// exist, or when a side condition fails.
struct HoraceStep {
    HoraceNumbers nums;
    SecantProblem child_dim;   // (n(1), d, s_r), P^0 factors dropped
    SecantProblem child_deg1;  // (n, d(1), r - s_r)
    SecantProblem child_deg2;  // (n, d(2), r - s_r - eps_r)
    Int d2_lhs, d2_rhs;        // (r - s - eps)(|n|+1) >= N_{n,d(2)}
};

HoraceStep horace_step(const MultiIndex& n, const MultiIndex& d, const Int& r);

/// Numeric trace of the factor-addition route for P^1 x X.
struct BallicoTrace {
    bool applicable = false;
    std::string route;  // "ballico" or "p1-products"
    int dim_x = 0;
    Int ambient_x;   // N_{n',d'}
    Int ineq_rhs;    // (n_2 + ... + n_k)^2
    Int discharge_r;
    std::optional<Certificate> discharge;
};

/// Checks the hypotheses for adding a degree-d1 P^1 factor to X = SV_n'^d':
/// all d' >= 3, d1 >= 2, dim X >= 3, N > dim(X)^2, and X not r-defective
/// for r = floor(N / dim X) (discharged recursively).  The P^1-only case
/// n' = (1,...,1) is routed to the P^1-products rule instead.
BallicoTrace ballico_applicable(const MultiIndex& n_x, const MultiIndex& d_x, int d1,
                                const CertifyConfig& cfg = {});

/// Certificate for the (normalized) problem (n, d, m).  Strategy order:
/// normalize, registry rules, BC window, monotone reduction to a critical
/// value, Horace step, rank-oracle fallback, unknown.
Certificate certify(const MultiIndex& n, const MultiIndex& d, const Int& m,
                    const CertifyConfig& cfg = {});

/// Certificates at both critical values; by the abundance monotonicity this
/// covers every secant index (pre: all d_i >= 3).
struct CriticalCertificates {
    CriticalValues cv;
    Certificate lower;
    Certificate upper;

    bool nondefective() const { return lower.nondefective() && upper.nondefective(); }
};

CriticalCertificates theorem11_schedule(const MultiIndex& n, const MultiIndex& d,
                                        const CertifyConfig& cfg = {});

}  // namespace svsec
