#pragma once

#include <optional>
#include <string>
#include <vector>

#include "svsec/multiindex.hpp"

namespace svsec {

// Citation keys carried verbatim into certificates.
inline constexpr const char* CITE_AH = "[AH]";
inline constexpr const char* CITE_GO = "[GO, Theorem 1.2]";
inline constexpr const char* CITE_P1 = "[P1P1P1, Theorem 3.1]";
inline constexpr const char* CITE_BALLICO = "[ballico, Theorem 2]";
inline constexpr const char* CITE_BC = "[blomenhofer2023nondefectivity, Theorem 4.8]";
inline constexpr const char* CITE_HORACE = "[AboBra13, Theorem 1.1]";
inline constexpr const char* CITE_IDENT = "[MMidentifiability, Theorem 1.5]";

/// A secant variety known to be defective, stored with normalized tuples.
struct KnownDefectiveCase {
    MultiIndex n;
    MultiIndex d;
    Int m;
    std::string name;
    std::string citation;
};

/// Sporadic Veronese exceptions (k = 1, d >= 3): (2,4,5), (3,4,9), (4,3,7),
/// (4,4,14).  The quadric family (d = 2, 2 <= m <= n) is a predicate, not a
/// list.  Every entry is re-verified by the rank oracle in the test suite.
const std::vector<KnownDefectiveCase>& ah_sporadic_cases();

/// Defective Segre-Veronese products of projective lines, the exceptional
/// list of the classification of secant varieties of (P^1)^k.  Re-verified
/// by the rank oracle in the test suite.
const std::vector<KnownDefectiveCase>& p1_defective_cases();

/// k = 1 classification: is sigma_m of the degree-d Veronese of P^n
/// defective?  Fills *hit with the matching case name when it is.
bool veronese_defective(int n, int d, const Int& m, std::string* hit = nullptr);

/// all-P^1 classification: is sigma_m of SV_{(1..1)}^d defective?
/// Expects (n, d) normalized.
bool p1_product_defective(const MultiIndex& n, const MultiIndex& d, const Int& m,
                          std::string* hit = nullptr);

}  // namespace svsec
