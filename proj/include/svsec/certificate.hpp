#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "svsec/core.hpp"
#include "svsec/terracini.hpp"

namespace svsec {

inline constexpr const char* CERT_SCHEMA_VERSION = "svsec-cert/1";

enum class CertVerdict { Nondefective, Defective, Unknown };

inline const char* to_string(CertVerdict v) {
    switch (v) {
        case CertVerdict::Nondefective: return "nondefective";
        case CertVerdict::Defective: return "defective";
        case CertVerdict::Unknown: return "unknown";
    }
    return "?";
}

/// Rank witness.  For extended property T checks n0 >= 0 and t records the
/// number of extra V (x) w' spaces; plain secant checks have n0 = -1, t = 0.
struct TerraciniJ {
    RankOutcome outcome;
    int n0 = -1;
    Int t = 0;
};

/// One application of the differential Horace step at r = m, pivot factor
/// moved to the front.  Children: (n(1), d, s), (n, d(1), r-s),
/// (n, d(2), r-s-eps).
struct HoraceStepJ {
    int pivot = 0;  // factor index in the node problem moved to front
    HoraceNumbers nums;
    bool s_ge_eps = false;
    Int d2_lhs, d2_rhs;  // (r-s-eps)(|n|+1) >= N_{n,d(2)}
    bool d2_holds = false;
    // Bounds guaranteed by the appendix lemmas; recorded (and required)
    // whenever the instance lies in the lemma regime: d >= 3 everywhere,
    // n sorted with n_1 >= 2, r critical.
    bool lemma_regime = false;
    Int a1_lhs, a1_rhs;
    bool a1_holds = false;
    Int a3_lhs, a3_rhs;
    bool a3_holds = false;
};

struct BcWindowJ {
    CriticalValues cv;
    std::string side;  // "low" (m <= r_* - |n| - 1) or "high" (m >= r^* + |n| + 1)
    Int bound;
};

/// Closure by a registry rule.  The ballico rule carries its numeric trace
/// and one child certificate discharging the r-non-defectivity hypothesis.
struct BaseJ {
    std::string name;
    std::string citation;
    int peel = -1;     // ballico: index of the P^1 factor that was added
    int dim_x = 0;     // ballico: dim X = |n'|
    Int ineq_lhs = 0;  // ballico: N_{n',d'}
    Int ineq_rhs = 0;  // ballico: (n_2 + ... + n_k)^2
    Int discharge_r = 0;
};

/// Reduction to a critical value: non-defectivity at `from` implies it at
/// the node's m (subabundant side downwards, superabundant side upwards).
struct MonotoneJ {
    SecantProblem from;
    std::string direction;  // "subabundant" or "superabundant"
};

/// One splitting step on the T-property triple (n0, m, t) with context
/// x = dim X and alpha_plus_1 = N_X; children carry the two sub-triples.
struct SplittingJ {
    int n0 = 0;
    Int m, t;
    int x = 0;
    Int alpha_plus_1;
    int n_prime = 0;
    Int m_prime;
    std::string note;
};

struct KnownDefectiveJ {
    std::string name;
    std::string citation;
    std::optional<RankOutcome> evidence;
};

/// Caps ran out or no strategy applied; the verdict stays unknown.
struct UnresolvedJ {
    std::string reason;
};

using Justification = std::variant<TerraciniJ, HoraceStepJ, BcWindowJ, BaseJ, MonotoneJ,
                                   SplittingJ, KnownDefectiveJ, UnresolvedJ>;

const char* justification_type(const Justification& j);

struct Certificate {
    SecantProblem problem;
    CertVerdict verdict = CertVerdict::Unknown;
    Justification just;
    std::vector<Certificate> children;

    bool nondefective() const { return verdict == CertVerdict::Nondefective; }
};

/// Stable-field-order JSON per the svsec-cert/1 schema.  Integers that fit
/// in 64 bits are emitted as JSON numbers, larger ones as decimal strings.
nlohmann::ordered_json certificate_to_json(const Certificate& c, bool root = true);
Certificate certificate_from_json(const nlohmann::json& j);

/// Independent checker: re-verifies the arithmetic of every node (split
/// numbers, child shapes, side conditions, windows, registry preconditions,
/// verdict propagation).  Returns human-readable problems; empty == sound.
std::vector<std::string> verify_certificate(const Certificate& c);

nlohmann::ordered_json int_to_json(const Int& v);
Int int_from_json(const nlohmann::json& j);

}  // namespace svsec
