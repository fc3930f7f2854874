#include "svsec/terracini.hpp"

#include <algorithm>
#include <cassert>

namespace svsec {

namespace {

// Powers u_j^e for e = 0..d, one row per coordinate.
std::vector<std::vector<std::uint64_t>> power_table(const std::vector<std::uint64_t>& u, int d,
                                                    const PrimeField& F) {
    std::vector<std::vector<std::uint64_t>> pw(u.size(), std::vector<std::uint64_t>(d + 1, 1));
    for (std::size_t j = 0; j < u.size(); ++j)
        for (int e = 1; e <= d; ++e) pw[j][e] = F.mul(pw[j][e - 1], u[j]);
    return pw;
}

// Monomial evaluation vector of one factor: w[alpha] = u^alpha.
std::vector<std::uint64_t> factor_eval(const std::vector<std::vector<int>>& exps,
                                       const std::vector<std::vector<std::uint64_t>>& pw,
                                       const PrimeField& F) {
    std::vector<std::uint64_t> w(exps.size());
    for (std::size_t a = 0; a < exps.size(); ++a) {
        std::uint64_t v = 1;
        for (std::size_t j = 0; j < exps[a].size(); ++j)
            if (exps[a][j]) v = F.mul(v, pw[j][exps[a][j]]);
        w[a] = v;
    }
    return w;
}

// Derivative vector d/dx_j of one factor: D[alpha] = alpha_j u^(alpha - e_j).
std::vector<std::uint64_t> factor_derivative(const std::vector<std::vector<int>>& exps,
                                             const std::vector<std::vector<std::uint64_t>>& pw,
                                             std::size_t j, const PrimeField& F) {
    std::vector<std::uint64_t> D(exps.size(), 0);
    for (std::size_t a = 0; a < exps.size(); ++a) {
        int ej = exps[a][j];
        if (ej == 0) continue;
        std::uint64_t v = static_cast<std::uint64_t>(ej) % F.p;
        for (std::size_t l = 0; l < exps[a].size(); ++l) {
            int e = exps[a][l];
            if (l == j) --e;
            if (e) v = F.mul(v, pw[l][e]);
        }
        D[a] = v;
    }
    return D;
}

// out = parts[0] (x) parts[1] (x) ... in factor-major layout.
std::vector<std::uint64_t> tensor_product(const std::vector<const std::vector<std::uint64_t>*>& parts,
                                          const PrimeField& F) {
    std::vector<std::uint64_t> out = *parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const auto& v = *parts[i];
        std::vector<std::uint64_t> next(out.size() * v.size());
        std::size_t pos = 0;
        for (std::uint64_t a : out)
            for (std::uint64_t b : v) next[pos++] = a == 0 || b == 0 ? 0 : F.mul(a, b);
        out = std::move(next);
    }
    return out;
}

std::size_t largest_component(const std::vector<std::uint64_t>& u) {
    return static_cast<std::size_t>(std::max_element(u.begin(), u.end()) - u.begin());
}

struct FactorData {
    std::vector<std::vector<int>> exps;
    std::vector<std::vector<std::uint64_t>> pw;
    std::vector<std::uint64_t> eval;
};

std::vector<FactorData> factor_data(const MultiIndex& n, const MultiIndex& d,
                                    const PointSample& pt, const PrimeField& F) {
    std::vector<FactorData> fd(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) {
        fd[i].exps = exponent_table(n[i], d[i]);
        fd[i].pw = power_table(pt.u[i], d[i], F);
        fd[i].eval = factor_eval(fd[i].exps, fd[i].pw, F);
    }
    return fd;
}

void checked_dims(const MultiIndex& n, const MultiIndex& d, std::size_t m, std::size_t t,
                  std::size_t matrix_cap, std::size_t& rows, std::size_t& cols) {
    Int N = ambient_count(n, d);
    Int rows_big = Int(static_cast<unsigned long>(m)) * (n.sum() + 1) +
                   Int(static_cast<unsigned long>(t)) * (n[0] + 1);
    Int entries = N * rows_big;
    if (entries > Int(static_cast<unsigned long>(matrix_cap)))
        throw resource_limit_error("Terracini matrix would have " + entries.get_str() +
                                   " entries, cap is " + std::to_string(matrix_cap));
    cols = static_cast<std::size_t>(to_u64(N));
    rows = static_cast<std::size_t>(to_u64(rows_big));
}

}  // namespace

PointSample sample_point(const MultiIndex& n, const PrimeField& F, SeedStream& rng) {
    PointSample pt;
    pt.u.resize(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) {
        auto& u = pt.u[i];
        u.assign(static_cast<std::size_t>(n[i]) + 1, 0);
        bool all_zero = true;
        do {
            for (auto& c : u) c = rng.below(F.p);
            all_zero = std::all_of(u.begin(), u.end(), [](std::uint64_t c) { return c == 0; });
        } while (all_zero);
    }
    return pt;
}

std::vector<std::uint64_t> point_row(const MultiIndex& n, const MultiIndex& d,
                                     const PointSample& pt, const PrimeField& F) {
    auto fd = factor_data(n, d, pt, F);
    std::vector<const std::vector<std::uint64_t>*> parts;
    for (auto& f : fd) parts.push_back(&f.eval);
    return tensor_product(parts, F);
}

FpMatrix tangent_block(const MultiIndex& n, const MultiIndex& d, const PointSample& pt,
                       const PrimeField& F) {
    validate_tuples(n, d);
    if (pt.u.size() != n.size())
        throw std::invalid_argument("tangent_block: point has wrong number of factors");
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (pt.u[i].size() != static_cast<std::size_t>(n[i]) + 1)
            throw std::invalid_argument("tangent_block: representative has wrong length");
        if (std::all_of(pt.u[i].begin(), pt.u[i].end(), [](std::uint64_t c) { return c == 0; }))
            throw std::invalid_argument("tangent_block: zero representative");
    }

    auto fd = factor_data(n, d, pt, F);
    std::size_t cols = 1;
    for (auto& f : fd) cols *= f.exps.size();

    FpMatrix block(static_cast<std::size_t>(n.sum()) + 1, cols, F);
    std::vector<const std::vector<std::uint64_t>*> parts(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) parts[i] = &fd[i].eval;

    std::size_t r = 0;
    auto row = tensor_product(parts, F);
    std::copy(row.begin(), row.end(), block.row(r++));

    for (std::size_t i = 0; i < n.size(); ++i) {
        std::size_t jmax = largest_component(pt.u[i]);
        for (std::size_t j = 0; j < pt.u[i].size(); ++j) {
            if (j == jmax) continue;
            auto deriv = factor_derivative(fd[i].exps, fd[i].pw, j, F);
            parts[i] = &deriv;
            row = tensor_product(parts, F);
            std::copy(row.begin(), row.end(), block.row(r++));
        }
        parts[i] = &fd[i].eval;
    }
    assert(r == block.rows);
    return block;
}

std::uint64_t derive_matrix_seed(std::uint64_t seed, std::uint64_t prime, const MultiIndex& n,
                                 const MultiIndex& d, std::size_t m, std::size_t t) {
    std::uint64_t s = absorb_seed(seed, prime);
    s = absorb_seed(s, n.e);
    s = absorb_seed(s, d.e);
    s = absorb_seed(s, static_cast<std::uint64_t>(m));
    s = absorb_seed(s, static_cast<std::uint64_t>(t));
    return s;
}

FpMatrix terracini_matrix(const MultiIndex& n, const MultiIndex& d, std::size_t m,
                          std::size_t t, const PrimeField& F, std::uint64_t seed,
                          std::size_t matrix_cap) {
    validate_tuples(n, d);
    if (t > 0 && d[0] != 1)
        throw std::invalid_argument("extra V (x) w' rows require the first factor in degree 1");

    std::size_t rows = 0, cols = 0;
    checked_dims(n, d, m, t, matrix_cap, rows, cols);

    FpMatrix M(rows, cols, F);
    SeedStream rng(derive_matrix_seed(seed, F.p, n, d, m, t));

    std::size_t r = 0;
    for (std::size_t i = 0; i < m; ++i) {
        PointSample pt = sample_point(n, F, rng);
        FpMatrix block = tangent_block(n, d, pt, F);
        std::copy(block.a.begin(), block.a.end(), M.row(r));
        r += block.rows;
    }

    if (t > 0) {
        // w' is a point ON the cone over the remaining factors (rank one).
        MultiIndex n_rest(std::vector<int>(n.e.begin() + 1, n.e.end()));
        MultiIndex d_rest(std::vector<int>(d.e.begin() + 1, d.e.end()));
        std::size_t stride = cols / static_cast<std::size_t>(n[0] + 1);
        for (std::size_t i = 0; i < t; ++i) {
            PointSample w = sample_point(n_rest, F, rng);
            std::vector<std::uint64_t> wrow = point_row(n_rest, d_rest, w, F);
            for (int j = 0; j <= n[0]; ++j) {
                std::copy(wrow.begin(), wrow.end(),
                          M.row(r) + static_cast<std::size_t>(j) * stride);
                ++r;
            }
        }
    }
    assert(r == rows);
    return M;
}

namespace {

RankOutcome run_trials(const MultiIndex& n, const MultiIndex& d, std::size_t m, std::size_t t,
                       std::size_t expected, const OracleOptions& opt) {
    RankOutcome out;
    out.expected = expected;
    out.prime = opt.prime;
    out.seed = opt.seed;

    auto attempt = [&](std::uint64_t prime) -> bool {
        PrimeField F(prime);
        for (int trial = 0; trial < opt.trials; ++trial) {
            std::uint64_t s = absorb_seed(opt.seed, static_cast<std::uint64_t>(trial));
            FpMatrix M = terracini_matrix(n, d, m, t, F, s, opt.matrix_cap);
            std::size_t rk = rank_in_place(M);
            out.observed_rank = std::max(out.observed_rank, rk);
            if (prime == opt.prime) out.trials = trial + 1;
            if (rk == expected) {
                out.verdict = RankVerdict::CertifiedNondefective;
                out.prime = prime;
                return true;
            }
        }
        return false;
    };

    if (attempt(opt.prime)) return out;
    out.verdict = RankVerdict::RankDeficitObserved;
    if (opt.recheck_deficit) {
        for (std::uint64_t q : deficit_recheck_primes()) {
            if (q == opt.prime) continue;
            out.extra_primes.push_back(q);
            if (attempt(q)) return out;
        }
    }
    return out;
}

}  // namespace

RankOutcome check_nondefective(const MultiIndex& n, const MultiIndex& d, const Int& m,
                               const OracleOptions& opt) {
    validate_tuples(n, d);
    if (m < 0) throw std::invalid_argument("check_nondefective: m must be >= 0");
    Int expected = expected_rank(n, d, m);
    // expected <= row count which the cap bounds, so the casts are safe
    // once checked_dims (inside terracini_matrix) has passed.
    Int rows = m * (n.sum() + 1);
    if (ambient_count(n, d) * rows > Int(static_cast<unsigned long>(opt.matrix_cap)))
        throw resource_limit_error("problem exceeds the matrix entry cap");
    return run_trials(n, d, static_cast<std::size_t>(to_u64(m)), 0,
                      static_cast<std::size_t>(to_u64(expected)), opt);
}

Int t_property_expected(int n0, const MultiIndex& n, const MultiIndex& d, const Int& m,
                        const Int& t) {
    Int N = ambient_count(n, d);
    Int full = (n0 + 1) * N;
    Int count = m * (n0 + n.sum() + 1) + t * (n0 + 1);
    return std::min(full, count);
}

RankOutcome check_T_property(int n0, const MultiIndex& n, const MultiIndex& d, const Int& m,
                             const Int& t, const OracleOptions& opt) {
    validate_tuples(n, d);
    if (n0 < 0) throw std::invalid_argument("check_T_property: n0 must be >= 0");
    if (m < 0 || t < 0) throw std::invalid_argument("check_T_property: m, t must be >= 0");

    MultiIndex nr, dr;
    nr.e.push_back(n0);
    nr.e.insert(nr.e.end(), n.e.begin(), n.e.end());
    dr.e.push_back(1);
    dr.e.insert(dr.e.end(), d.e.begin(), d.e.end());

    Int expected = t_property_expected(n0, n, d, m, t);
    Int rows = m * (nr.sum() + 1) + t * (n0 + 1);
    if (ambient_count(nr, dr) * rows > Int(static_cast<unsigned long>(opt.matrix_cap)))
        throw resource_limit_error("problem exceeds the matrix entry cap");
    return run_trials(nr, dr, static_cast<std::size_t>(to_u64(m)),
                      static_cast<std::size_t>(to_u64(t)),
                      static_cast<std::size_t>(to_u64(expected)), opt);
}

}  // namespace svsec
