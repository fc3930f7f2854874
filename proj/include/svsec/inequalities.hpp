#pragma once

#include <optional>
#include <string>
#include <vector>

#include "svsec/core.hpp"
#include "svsec/rational_poly.hpp"

namespace svsec {

/// Named expansions of the appendix, recomputed from first principles
/// (binomial products and the cubic right-hand sides).  Known ids:
///   A1-base   in Q[n1][n3]      A1-n1eq2  in Q[n2][n3]
///   A1-step   in Q[np][nk]      A3-base   in Q[n1][n3]
///   A3-step   in Q[np][nk]      (np stands for |n'|)
RationalPoly expand_named(const std::string& id);

/// Main variable of a named expansion (the one the polynomial is presented
/// as univariate in): n3 or nk.
std::string expansion_main_variable(const std::string& id);

/// Sufficient one-sided test: substitute x = a + t and check that every
/// coefficient of t has the requested sign (>= 0 when nonneg, <= 0
/// otherwise).  A false return means "not proved", not "false".
bool prove_sign_on_ray(const RationalPoly& univariate, const Int& a, bool nonneg);

/// Smallest integer shift point in [0, limit] at which the ray test
/// succeeds, when one exists.
std::optional<Int> minimal_proving_shift(const RationalPoly& univariate, bool nonneg,
                                         int limit = 64);

/// Number of sign changes in the nonzero coefficient sequence (an upper
/// bound for the number of positive real roots).  Throws on all-zero input.
int descartes_bound(const std::vector<Rat>& coeffs);

struct ScanBox {
    int k_min = 3, k_max = 5;
    int n_min = 2, n_max = 6;
    int d_min = 3, d_max = 5;
};

struct ScanCounterexample {
    MultiIndex n;
    MultiIndex d;
    Int r;
    std::string detail;
};

struct ScanReport {
    std::string lemma;
    ScanBox box;
    long long instances = 0;
    std::vector<ScanCounterexample> counterexamples;

    bool clean() const { return counterexamples.empty(); }
};

/// Exhaustive scan of one numeric lemma over the box: sorted n tuples with
/// n_1 >= box.n_min, full d box, r in {r_*, r^*}.  Ids: A1 (the subabundant
/// window bound), A2 (s_r >= eps_r), A3 (the superabundant window bound),
/// ineq31 (the factor-addition inequality; n plays the role of n', no r).
ScanReport scan_lemma(const std::string& id, const ScanBox& box);

ScanBox default_box(const std::string& id);

struct AppendixCheck {
    std::string id;
    std::string what;
    bool pass = false;
    std::string detail;
};

struct AppendixReport {
    std::vector<AppendixCheck> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Compare a stored expectation against the recomputed polynomial; on
/// mismatch names the first differing term.
std::optional<std::string> first_table_mismatch(const RationalPoly& expected,
                                                const RationalPoly& recomputed);

/// Full appendix verification: every expansion against its stored table in
/// data_dir, every sign claim by shift proof (with evaluation fallback on a
/// finite range), the Descartes count, and the lemma scans over the default
/// box (or the override).
AppendixReport verify_appendix(const std::string& data_dir,
                               const std::optional<ScanBox>& box_override = std::nullopt);

}  // namespace svsec
