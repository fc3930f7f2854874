#include "svsec/rational_poly.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace svsec {

void RationalPoly::add_term(Monomial m, Rat c) {
    for (auto it = m.begin(); it != m.end();) {
        if (it->second == 0)
            it = m.erase(it);
        else if (it->second < 0)
            throw std::invalid_argument("negative exponent");
        else
            ++it;
    }
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        it->second.canonicalize();
        if (it->second == 0) terms_.erase(it);
    } else {
        it->second.canonicalize();
        if (it->second == 0) terms_.erase(it);
    }
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
    RationalPoly r(*this);
    r += o;
    return r;
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const {
    RationalPoly r(*this);
    r -= o;
    return r;
}

RationalPoly RationalPoly::operator-() const {
    RationalPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
    RationalPoly r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma;
            for (const auto& [v, e] : mb) m[v] += e;
            r.add_term(std::move(m), ca * cb);
        }
    }
    return r;
}

RationalPoly RationalPoly::operator*(const Rat& c) const {
    RationalPoly r;
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) {
        Rat v = k * c;
        v.canonicalize();
        r.terms_.emplace(m, v);
    }
    return r;
}

std::vector<std::string> RationalPoly::variables() const {
    std::set<std::string> vs;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m) vs.insert(v);
    return {vs.begin(), vs.end()};
}

Rat RationalPoly::eval(const std::map<std::string, Rat>& point) const {
    Rat total = 0;
    for (const auto& [m, c] : terms_) {
        Rat term = c;
        for (const auto& [v, e] : m) {
            auto it = point.find(v);
            if (it == point.end())
                throw std::invalid_argument("eval: no value for variable " + v);
            for (int i = 0; i < e; ++i) term *= it->second;
        }
        total += term;
    }
    total.canonicalize();
    return total;
}

RationalPoly RationalPoly::substitute(const std::string& var, const RationalPoly& repl) const {
    RationalPoly out;
    for (const auto& [m, c] : terms_) {
        RationalPoly term(c);
        RationalPoly power(Rat(1));
        auto it = m.find(var);
        if (it != m.end())
            for (int i = 0; i < it->second; ++i) power = power * repl;
        Monomial rest = m;
        rest.erase(var);
        RationalPoly restpoly;
        restpoly.add_term(std::move(rest), Rat(1));
        out += term * power * restpoly;
    }
    return out;
}

int RationalPoly::degree_in(const std::string& var) const {
    int deg = 0;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(var);
        if (it != m.end()) deg = std::max(deg, it->second);
    }
    return deg;
}

int RationalPoly::total_degree() const {
    int deg = 0;
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (const auto& [v, e] : m) d += e;
        deg = std::max(deg, d);
    }
    return deg;
}

std::map<int, RationalPoly> RationalPoly::coefficients_in(const std::string& var) const {
    std::map<int, RationalPoly> out;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(var);
        int e = it == m.end() ? 0 : it->second;
        Monomial rest = m;
        rest.erase(var);
        out[e].add_term(std::move(rest), c);
    }
    return out;
}

std::vector<std::pair<RationalPoly::Monomial, Rat>> RationalPoly::canonical_terms() const {
    std::vector<std::string> vars = variables();
    auto expvec = [&](const Monomial& m) {
        std::vector<int> e(vars.size(), 0);
        for (std::size_t i = 0; i < vars.size(); ++i) {
            auto it = m.find(vars[i]);
            if (it != m.end()) e[i] = it->second;
        }
        return e;
    };
    std::vector<std::pair<Monomial, Rat>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        std::vector<int> ea = expvec(a.first), eb = expvec(b.first);
        int da = 0, db = 0;
        for (int v : ea) da += v;
        for (int v : eb) db += v;
        if (da != db) return da > db;
        // reverse-lex, highest first: larger at the rightmost difference wins
        for (int j = static_cast<int>(ea.size()) - 1; j >= 0; --j)
            if (ea[j] != eb[j]) return ea[j] > eb[j];
        return false;
    });
    return out;
}

std::string RationalPoly::monomial_str(const Monomial& m) {
    if (m.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : m) {
        if (!s.empty()) s += "*";
        s += v;
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

RationalPoly::Monomial RationalPoly::parse_monomial(const std::string& s) {
    Monomial m;
    if (s == "1") return m;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, '*')) {
        auto caret = part.find('^');
        std::string var = part.substr(0, caret);
        int e = 1;
        if (caret != std::string::npos) e = std::stoi(part.substr(caret + 1));
        if (var.empty() || e < 1) throw std::invalid_argument("bad monomial: " + s);
        m[var] += e;
    }
    return m;
}

std::string RationalPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : canonical_terms()) {
        std::string cs = c.get_str();
        if (s.empty()) {
            s = cs;
        } else if (cs[0] == '-') {
            s += " - " + cs.substr(1);
        } else {
            s += " + " + cs;
        }
        if (!m.empty()) s += "*" + monomial_str(m);
    }
    return s;
}

RationalPoly binomial_poly(int c, const std::string& var) {
    return binomial_poly_at(RationalPoly::variable(var), c);
}

RationalPoly binomial_poly_at(const RationalPoly& base, int c) {
    if (c < 0) throw std::invalid_argument("binomial_poly: c must be >= 0");
    RationalPoly r(Rat(1));
    Int fact = 1;
    for (int i = 1; i <= c; ++i) {
        r = r * (base + RationalPoly(Rat(i)));
        fact *= i;
    }
    return r * Rat(Int(1), fact);
}

void write_coefficient_table(const RationalPoly& p, std::ostream& os) {
    for (const auto& [m, c] : p.canonical_terms())
        os << RationalPoly::monomial_str(m) << '\t' << c.get_str() << '\n';
}

RationalPoly read_coefficient_table(std::istream& is) {
    RationalPoly p;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw std::invalid_argument("table line without tab: " + line);
        auto mono = RationalPoly::parse_monomial(line.substr(0, tab));
        Rat c(line.substr(tab + 1));
        c.canonicalize();
        p.add_term(std::move(mono), c);
    }
    return p;
}

}  // namespace svsec
