#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "svsec/ints.hpp"

namespace svsec {

/// Sparse multivariate polynomial with exact rational coefficients.
/// Monomials are maps variable name -> positive exponent; no zero
/// coefficients are stored.  The canonical term order used for printing
/// and table files is graded reverse-lex, highest term first (variables
/// ordered by name).
class RationalPoly {
public:
    using Monomial = std::map<std::string, int>;
    using Terms = std::map<Monomial, Rat>;

    RationalPoly() = default;
    explicit RationalPoly(const Rat& c) { add_term({}, c); }
    explicit RationalPoly(long c) { add_term({}, Rat(c)); }

    static RationalPoly variable(const std::string& name) {
        RationalPoly p;
        p.add_term({{name, 1}}, Rat(1));
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Monomial m, Rat c);

    RationalPoly& operator+=(const RationalPoly& o);
    RationalPoly& operator-=(const RationalPoly& o);
    RationalPoly operator+(const RationalPoly& o) const;
    RationalPoly operator-(const RationalPoly& o) const;
    RationalPoly operator-() const;
    RationalPoly operator*(const RationalPoly& o) const;
    RationalPoly operator*(const Rat& c) const;
    bool operator==(const RationalPoly& o) const { return terms_ == o.terms_; }

    /// Variables that actually occur, sorted by name.
    std::vector<std::string> variables() const;

    /// Exact evaluation; every occurring variable needs a value.
    Rat eval(const std::map<std::string, Rat>& point) const;

    /// Replace a variable by a polynomial.
    RationalPoly substitute(const std::string& var, const RationalPoly& repl) const;

    int degree_in(const std::string& var) const;
    int total_degree() const;

    /// View as a univariate polynomial in `var`: degree -> coefficient
    /// polynomial in the remaining variables.
    std::map<int, RationalPoly> coefficients_in(const std::string& var) const;

    /// Terms in canonical order (total degree descending, then reverse-lex
    /// descending over the name-sorted variable universe of this poly).
    std::vector<std::pair<Monomial, Rat>> canonical_terms() const;

    std::string str() const;

    static std::string monomial_str(const Monomial& m);
    static Monomial parse_monomial(const std::string& s);

private:
    Terms terms_;
};

/// The degree-c polynomial (x+1)(x+2)...(x+c)/c! = C(x+c, c).
RationalPoly binomial_poly(int c, const std::string& var);

/// C(P+c, c) for an arbitrary polynomial argument P.
RationalPoly binomial_poly_at(const RationalPoly& base, int c);

/// Table file format: one term per line, "monomial<TAB>numerator/denominator"
/// (denominator omitted when 1), UTF-8, canonical term order; monomials are
/// "1" or products like "n1^6*n3^3" with variables in name order.
void write_coefficient_table(const RationalPoly& p, std::ostream& os);
RationalPoly read_coefficient_table(std::istream& is);

}  // namespace svsec
