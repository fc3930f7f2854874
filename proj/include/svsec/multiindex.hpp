#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "svsec/ints.hpp"

namespace svsec {

/// Tuple of per-factor integers (dimensions or degrees).
struct MultiIndex {
    std::vector<int> e;

    MultiIndex() = default;
    MultiIndex(std::initializer_list<int> init) : e(init) {}
    explicit MultiIndex(std::vector<int> v) : e(std::move(v)) {}

    std::size_t size() const { return e.size(); }
    int operator[](std::size_t i) const { return e[i]; }
    int& operator[](std::size_t i) { return e[i]; }

    int sum() const { return std::accumulate(e.begin(), e.end(), 0); }

    /// a(j) = (a_1 - j, a_2, ..., a_k); defined only when a_1 - j >= 0.
    MultiIndex reduced(int j) const {
        if (e.empty() || e[0] - j < 0)
            throw std::invalid_argument("reduction a(j) undefined: first entry would be negative");
        MultiIndex r(*this);
        r.e[0] -= j;
        return r;
    }

    bool operator==(const MultiIndex&) const = default;

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(e[i]);
        }
        return s + ")";
    }
};

/// a >= b componentwise.
inline bool dominates(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

inline bool all_at_least(const MultiIndex& a, int c) {
    return std::all_of(a.e.begin(), a.e.end(), [c](int x) { return x >= c; });
}

/// Query object: is sigma_m of the Segre-Veronese of P^n embedded in
/// multidegree d defective?  Factor dimensions of 0 are legal (a point
/// factor, harmless but useful internally); degrees must be positive.
struct SecantProblem {
    MultiIndex n;
    MultiIndex d;
    Int m;

    SecantProblem() = default;
    SecantProblem(MultiIndex n_, MultiIndex d_, Int m_)
        : n(std::move(n_)), d(std::move(d_)), m(std::move(m_)) {}

    bool operator==(const SecantProblem&) const = default;
};

inline void validate_tuples(const MultiIndex& n, const MultiIndex& d) {
    if (n.size() == 0)
        throw std::invalid_argument("empty factor list");
    if (n.size() != d.size())
        throw std::invalid_argument("dimension tuple and degree tuple have different lengths");
    for (int ni : n.e)
        if (ni < 0) throw std::invalid_argument("factor dimension must be >= 0");
    for (int di : d.e)
        if (di < 1) throw std::invalid_argument("factor degree must be >= 1");
}

inline void validate_problem(const SecantProblem& p) {
    validate_tuples(p.n, p.d);
    if (p.m < 0)
        throw std::invalid_argument("secant index m must be >= 0");
}

enum class AbundanceClass { Subabundant, Equiabundant, Superabundant };

inline const char* to_string(AbundanceClass a) {
    switch (a) {
        case AbundanceClass::Subabundant: return "subabundant";
        case AbundanceClass::Equiabundant: return "equiabundant";
        case AbundanceClass::Superabundant: return "superabundant";
    }
    return "?";
}

/// m(|n|+1) <= N holds (with equality allowed).
inline bool is_subabundant(AbundanceClass a) { return a != AbundanceClass::Superabundant; }
inline bool is_superabundant(AbundanceClass a) { return a != AbundanceClass::Subabundant; }

/// Split numbers of the differential Horace step at secant index r:
/// (|n|+1) r = N_{n,d(1)} + |n| s_r + eps_r with 0 <= eps_r <= |n|-1.
struct HoraceNumbers {
    Int s;
    Int eps;
};

}  // namespace svsec
