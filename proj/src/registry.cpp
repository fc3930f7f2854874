#include "svsec/registry.hpp"

namespace svsec {

const std::vector<KnownDefectiveCase>& ah_sporadic_cases() {
    static const std::vector<KnownDefectiveCase> cases = {
        {{2}, {4}, 5, "veronese (2,4) sigma_5", CITE_AH},
        {{3}, {4}, 9, "veronese (3,4) sigma_9", CITE_AH},
        {{4}, {3}, 7, "veronese (4,3) sigma_7", CITE_AH},
        {{4}, {4}, 14, "veronese (4,4) sigma_14", CITE_AH},
    };
    return cases;
}

const std::vector<KnownDefectiveCase>& p1_defective_cases() {
    static const std::vector<KnownDefectiveCase> cases = {
        {{1, 1}, {2, 2}, 3, "p1-products (2,2) sigma_3", CITE_P1},
        {{1, 1, 1}, {1, 1, 2}, 3, "p1-products (1,1,2) sigma_3", CITE_P1},
        {{1, 1, 1}, {2, 2, 2}, 7, "p1-products (2,2,2) sigma_7", CITE_P1},
        {{1, 1, 1, 1}, {1, 1, 1, 1}, 3, "p1-products (1,1,1,1) sigma_3", CITE_P1},
    };
    return cases;
}

bool veronese_defective(int n, int d, const Int& m, std::string* hit) {
    if (d == 2 && m >= 2 && m <= n) {
        if (hit) *hit = "veronese quadric (n," + std::to_string(d) + ") sigma_m, 2 <= m <= n";
        return true;
    }
    for (const auto& c : ah_sporadic_cases()) {
        if (c.n[0] == n && c.d[0] == d && c.m == m) {
            if (hit) *hit = c.name;
            return true;
        }
    }
    return false;
}

bool p1_product_defective(const MultiIndex& n, const MultiIndex& d, const Int& m,
                          std::string* hit) {
    for (const auto& c : p1_defective_cases()) {
        if (c.n == n && c.d == d && c.m == m) {
            if (hit) *hit = c.name;
            return true;
        }
    }
    return false;
}

}  // namespace svsec
