#include "svsec/splitting.hpp"

namespace svsec {

Thresholds thresholds(int n0, int x, const Int& alpha_plus_1) {
    if (n0 < 0 || x < 1 || alpha_plus_1 < 1)
        throw std::invalid_argument("thresholds: need n0 >= 0, x >= 1, alpha+1 >= 1");
    Int den = n0 + x + 1;
    return {floor_div(alpha_plus_1, den), ceil_div(alpha_plus_1, den)};
}

std::pair<TTriple, TTriple> split_reduce(const TTriple& tri, int n_prime, const Int& m_prime) {
    if (n_prime < 0 || n_prime > tri.n0 - 1)
        throw std::invalid_argument("split_reduce: n' must lie in [0, n0-1]");
    if (m_prime < 0 || m_prime > tri.m)
        throw std::invalid_argument("split_reduce: m' must lie in [0, m]");
    TTriple left{n_prime, m_prime, tri.t + tri.m - m_prime, tri.x, tri.alpha_plus_1};
    TTriple right{tri.n0 - n_prime - 1, tri.m - m_prime, tri.t + m_prime, tri.x,
                  tri.alpha_plus_1};
    return {left, right};
}

AbundanceClass triple_abundance(const TTriple& tri) {
    Int lhs = tri.m * (tri.n0 + tri.x + 1) + tri.t * (tri.n0 + 1);
    Int rhs = Int(tri.n0 + 1) * tri.alpha_plus_1;
    int c = cmp(lhs, rhs);
    if (c < 0) return AbundanceClass::Subabundant;
    if (c > 0) return AbundanceClass::Superabundant;
    return AbundanceClass::Equiabundant;
}

namespace {

SecantProblem realized_problem(int n0, const MultiIndex& n, const MultiIndex& d, const Int& m) {
    MultiIndex nr, dr;
    nr.e.push_back(n0);
    nr.e.insert(nr.e.end(), n.e.begin(), n.e.end());
    dr.e.push_back(1);
    dr.e.insert(dr.e.end(), d.e.begin(), d.e.end());
    return {nr, dr, m};
}

struct ChainBuilder {
    int n0;
    const MultiIndex& n;
    const MultiIndex& d;
    Int a;        // a_* on the subabundant branch, a^* on the superabundant one
    int x;
    Int alpha_plus_1;
    std::string note;
    const CertifyConfig& cfg;
    std::optional<Certificate> base_leaf;  // all base triples coincide: (0, a, n0 a)

    Certificate base(std::uint64_t path_seed) {
        if (base_leaf) return *base_leaf;
        OracleOptions opt = cfg.oracle;
        opt.seed = path_seed;
        Certificate c;
        c.problem = realized_problem(0, n, d, a);
        Int t_rows = Int(n0) * a;
        RankOutcome out = check_T_property(0, n, d, a, t_rows, opt);
        c.just = TerraciniJ{out, 0, t_rows};
        c.verdict = out.certified() ? CertVerdict::Nondefective : CertVerdict::Unknown;
        base_leaf = c;
        return c;
    }

    // certificate for the chain triple (level, (level+1) a, (n0-level) a)
    Certificate level_cert(int level, std::uint64_t path_seed) {
        if (level == 0) return base(absorb_seed(path_seed, 0));
        TTriple tri{level, Int(level + 1) * a, Int(n0 - level) * a, x, alpha_plus_1};
        auto [left, right] = split_reduce(tri, 0, a);
        Certificate c;
        c.problem = realized_problem(level, n, d, tri.m);
        c.just = SplittingJ{tri.n0, tri.m, tri.t, tri.x, tri.alpha_plus_1, 0, a, note};
        c.children.push_back(base(absorb_seed(path_seed, 0)));
        c.children.push_back(level_cert(level - 1, absorb_seed(path_seed, 1)));
        bool ok = c.children[0].nondefective() && c.children[1].nondefective();
        c.verdict = ok ? CertVerdict::Nondefective : CertVerdict::Unknown;
        return c;
    }
};

Certificate oracle_leaf(int n0, const MultiIndex& n, const MultiIndex& d, const Int& m,
                        const Int& t, const CertifyConfig& cfg, std::uint64_t seed) {
    Certificate c;
    c.problem = realized_problem(n0, n, d, m);
    OracleOptions opt = cfg.oracle;
    opt.seed = seed;
    try {
        RankOutcome out = check_T_property(n0, n, d, m, t, opt);
        c.just = TerraciniJ{out, n0, t};
        c.verdict = out.certified() ? CertVerdict::Nondefective : CertVerdict::Unknown;
    } catch (const resource_limit_error& e) {
        c.just = UnresolvedJ{std::string("rank check not possible: ") + e.what()};
        c.verdict = CertVerdict::Unknown;
    }
    return c;
}

}  // namespace

Certificate certify_T(int n0, const MultiIndex& n, const MultiIndex& d, const Int& m,
                      const Int& t, const CertifyConfig& cfg) {
    validate_tuples(n, d);
    if (n0 < 0 || m < 0 || t < 0)
        throw std::invalid_argument("certify_T: n0, m, t must be >= 0");
    std::uint64_t seed0 = absorb_seed(cfg.oracle.seed, 11);

    // a P^0 first factor adds nothing: delegate to the plain rank check
    if (n0 == 0 && t == 0) {
        Certificate c;
        c.problem = {n, d, m};
        OracleOptions opt = cfg.oracle;
        opt.seed = seed0;
        try {
            RankOutcome out = check_nondefective(n, d, m, opt);
            c.just = TerraciniJ{out, -1, 0};
            c.verdict = out.certified() ? CertVerdict::Nondefective : CertVerdict::Unknown;
        } catch (const resource_limit_error& e) {
            c.just = UnresolvedJ{std::string("rank check not possible: ") + e.what()};
        }
        return c;
    }

    if (t != 0 || n0 == 0) return oracle_leaf(n0, n, d, m, t, cfg, seed0);

    int x = n.sum();
    Int alpha_plus_1 = ambient_count(n, d);
    Thresholds a = thresholds(n0, x, alpha_plus_1);
    Int m_low = Int(n0 + 1) * a.lower;
    Int m_high = Int(n0 + 1) * a.upper;

    if (m <= m_low && a.lower >= 1) {
        ChainBuilder chain{n0, n, d, a.lower, x, alpha_plus_1, "", cfg, std::nullopt};
        Certificate root = chain.level_cert(n0, absorb_seed(seed0, 21));
        if (!root.nondefective()) {
            Certificate c;
            c.problem = realized_problem(n0, n, d, m);
            c.just = UnresolvedJ{"base rank check of the splitting chain failed"};
            return c;
        }
        if (m == m_low) return root;
        Certificate c;
        c.problem = realized_problem(n0, n, d, m);
        c.verdict = CertVerdict::Nondefective;
        c.just = MonotoneJ{root.problem, "subabundant"};
        c.children.push_back(std::move(root));
        return c;
    }

    if (m >= m_high) {
        ChainBuilder chain{n0,  n, d, a.upper, x, alpha_plus_1, "symmetric to printed proof",
                           cfg, std::nullopt};
        Certificate root = chain.level_cert(n0, absorb_seed(seed0, 22));
        if (!root.nondefective()) {
            Certificate c;
            c.problem = realized_problem(n0, n, d, m);
            c.just = UnresolvedJ{"base rank check of the splitting chain failed"};
            return c;
        }
        if (m == m_high) return root;
        Certificate c;
        c.problem = realized_problem(n0, n, d, m);
        c.verdict = CertVerdict::Nondefective;
        c.just = MonotoneJ{root.problem, "superabundant"};
        c.children.push_back(std::move(root));
        return c;
    }

    // strict gap between the two thresholds: no splitting route
    return oracle_leaf(n0, n, d, m, t, cfg, seed0);
}

std::pair<Int, Int> theorem12_range(int n0, const MultiIndex& n, const MultiIndex& d) {
    validate_tuples(n, d);
    if (n0 < 0) throw std::invalid_argument("theorem12_range: n0 must be >= 0");
    Int N = ambient_count(n, d);
    Thresholds a = thresholds(n0, n.sum(), N);
    return {Int(n0 + 1) * a.lower, Int(n0 + 1) * a.upper};
}

Int identifiability_bound(const MultiIndex& n, const MultiIndex& d, std::optional<int> n0) {
    validate_tuples(n, d);
    Int N = ambient_count(n, d);
    if (!n0) return floor_div(N, Int(n.sum() + 1));
    if (*n0 < 0) throw std::invalid_argument("identifiability_bound: n0 must be >= 0");
    return Int(*n0 + 1) * floor_div(N, Int(*n0 + n.sum() + 1));
}

}  // namespace svsec
