#pragma once

#include <cstddef>
#include <vector>

namespace svsec {

/// Exponent vectors of the degree-d monomials in n+1 variables, i.e. all
/// (n+1)-part compositions of d.  Order is reverse-lexicographic: alpha
/// precedes beta iff alpha_j < beta_j at the largest index j where they
/// differ.  For n=1, d=2 this lists (2,0), (1,1), (0,2).
std::vector<std::vector<int>> exponent_table(int n, int d);

/// C(n+d, d) without big integers; callers guard against overflow by
/// checking ambient_count first.
std::size_t monomial_count(int n, int d);

}  // namespace svsec
