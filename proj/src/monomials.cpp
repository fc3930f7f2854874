#include "svsec/monomials.hpp"

#include <algorithm>
#include <stdexcept>

namespace svsec {

namespace {

// Reverse-lex order equals lex-ascending order on the reversed vectors, so
// we enumerate reversed compositions lexicographically and flip each.
void emit(std::vector<int>& rev, int pos, int remaining, std::vector<std::vector<int>>& out) {
    if (pos == static_cast<int>(rev.size()) - 1) {
        rev[pos] = remaining;
        out.emplace_back(rev.rbegin(), rev.rend());
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        rev[pos] = e;
        emit(rev, pos + 1, remaining - e, out);
    }
}

}  // namespace

std::vector<std::vector<int>> exponent_table(int n, int d) {
    if (n < 0 || d < 0) throw std::invalid_argument("exponent_table: negative parameter");
    std::vector<std::vector<int>> out;
    out.reserve(monomial_count(n, d));
    std::vector<int> rev(n + 1, 0);
    emit(rev, 0, d, out);
    return out;
}

std::size_t monomial_count(int n, int d) {
    std::size_t r = 1;
    for (int i = 1; i <= n; ++i) {
        r = r * (d + i) / i;  // exact: r is C(d+i-1, i-1) * (d+i) before the division
    }
    return r;
}

}  // namespace svsec
