#include "svsec/core.hpp"

#include <algorithm>

namespace svsec {

Int ambient_count(const MultiIndex& n, const MultiIndex& d) {
    if (n.size() != d.size())
        throw std::invalid_argument("ambient_count: tuple length mismatch");
    if (n.size() == 0)
        throw std::invalid_argument("ambient_count: empty tuples");
    Int prod = 1;
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] < 0 || d[i] < 0)
            throw std::invalid_argument("ambient_count: negative entry");
        prod *= binomial(static_cast<unsigned long>(n[i]) + static_cast<unsigned long>(d[i]),
                         static_cast<unsigned long>(d[i]));
    }
    return prod;
}

Int expected_rank(const MultiIndex& n, const MultiIndex& d, const Int& m) {
    Int N = ambient_count(n, d);
    Int param = m * (n.sum() + 1);
    return std::min(N, param);
}

CriticalValues critical_values(const MultiIndex& n, const MultiIndex& d) {
    Int N = ambient_count(n, d);
    Int x1 = n.sum() + 1;
    return {floor_div(N, x1), ceil_div(N, x1)};
}

AbundanceClass abundance(const MultiIndex& n, const MultiIndex& d, const Int& m) {
    Int N = ambient_count(n, d);
    Int param = m * (n.sum() + 1);
    int c = cmp(param, N);
    if (c < 0) return AbundanceClass::Subabundant;
    if (c > 0) return AbundanceClass::Superabundant;
    return AbundanceClass::Equiabundant;
}

HoraceNumbers horace_numbers(const MultiIndex& n, const MultiIndex& d, const Int& r) {
    validate_tuples(n, d);
    Int N1 = ambient_count(n, d.reduced(1));
    Int x = n.sum();
    Int numer = (x + 1) * r - N1;
    if (numer < 0)
        throw std::domain_error("Horace step inapplicable: s_r would be negative");
    HoraceNumbers h;
    h.s = floor_div(numer, x);
    h.eps = numer - x * h.s;
    return h;
}

bool bc_window(const MultiIndex& n, const MultiIndex& d, const Int& m) {
    CriticalValues cv = critical_values(n, d);
    Int x1 = n.sum() + 1;
    return m <= cv.lower - x1 || m >= cv.upper + x1;
}

std::pair<MultiIndex, MultiIndex> normalize(const MultiIndex& n, const MultiIndex& d) {
    validate_tuples(n, d);
    std::vector<std::pair<int, int>> pairs(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) pairs[i] = {n[i], d[i]};
    std::sort(pairs.begin(), pairs.end());
    MultiIndex ns, ds;
    ns.e.reserve(pairs.size());
    ds.e.reserve(pairs.size());
    for (auto& [ni, di] : pairs) {
        ns.e.push_back(ni);
        ds.e.push_back(di);
    }
    return {ns, ds};
}

}  // namespace svsec
