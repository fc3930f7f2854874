#include <doctest.h>

#include "svsec/splitting.hpp"

using namespace svsec;

TEST_CASE("thresholds") {
    auto t = thresholds(1, 2, 16);
    CHECK(t.lower == 4);
    CHECK(t.upper == 4);

    t = thresholds(2, 2, 16);
    CHECK(t.lower == 3);
    CHECK(t.upper == 4);

    t = thresholds(3, 4, 8);  // alpha+1 == n0+x+1
    CHECK(t.lower == 1);
    CHECK(t.upper == 1);

    SeedStream rng(31);
    for (int it = 0; it < 200; ++it) {
        int n0 = static_cast<int>(rng.below(6));
        int x = 1 + static_cast<int>(rng.below(6));
        Int a1(static_cast<unsigned long>(1 + rng.below(400)));
        auto th = thresholds(n0, x, a1);
        Int gap = th.upper - th.lower;
        CHECK((gap == 0 || gap == 1));
    }
}

TEST_CASE("split_reduce") {
    TTriple tri{2, 9, 0, 2, 16};
    auto [l, r] = split_reduce(tri, 0, 3);
    CHECK(l.n0 == 0);
    CHECK(l.m == 3);
    CHECK(l.t == 6);
    CHECK(r.n0 == 1);
    CHECK(r.m == 6);
    CHECK(r.t == 3);

    TTriple tri2{1, 8, 0, 2, 16};
    std::tie(l, r) = split_reduce(tri2, 0, 4);
    CHECK(l.n0 == 0);
    CHECK(l.m == 4);
    CHECK(l.t == 4);
    CHECK(r.n0 == 0);
    CHECK(r.m == 4);
    CHECK(r.t == 4);

    // boundary split m' = m, n' = n0 - 1
    TTriple tri3{3, 5, 2, 4, 50};
    std::tie(l, r) = split_reduce(tri3, 2, 5);
    CHECK(l.n0 == 2);
    CHECK(l.m == 5);
    CHECK(l.t == 2);
    CHECK(r.n0 == 0);
    CHECK(r.m == 0);
    CHECK(r.t == 7);

    CHECK_THROWS_AS(split_reduce(tri, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(split_reduce(tri, 0, 10), std::invalid_argument);
}

TEST_CASE("triple_abundance") {
    CHECK(triple_abundance({2, 9, 0, 2, 16}) == AbundanceClass::Subabundant);   // 45 <= 48
    CHECK(triple_abundance({2, 12, 0, 2, 16}) == AbundanceClass::Superabundant);  // 60 >= 48
    CHECK(triple_abundance({0, 3, 6, 2, 16}) == AbundanceClass::Subabundant);   // 15 <= 16
}

TEST_CASE("splitting closure (Lemma-style) holds exhaustively up to 8") {
    // both children subabundant => parent subabundant, dually for super;
    // also the row bookkeeping identity
    for (int n0 = 1; n0 <= 8; ++n0)
        for (int m = 0; m <= 8; ++m)
            for (int t = 0; t <= 8; ++t)
                for (int x = 1; x <= 8; ++x)
                    for (int a1 = 1; a1 <= 8; ++a1) {
                        TTriple tri{n0, m, t, x, a1};
                        for (int np = 0; np <= n0 - 1; ++np)
                            for (int mp = 0; mp <= m; ++mp) {
                                auto [l, r] = split_reduce(tri, np, mp);
                                Int parent_rows = tri.m * (n0 + x + 1) + tri.t * (n0 + 1);
                                Int child_rows = l.m * (l.n0 + x + 1) + l.t * (l.n0 + 1) +
                                                 r.m * (r.n0 + x + 1) + r.t * (r.n0 + 1);
                                REQUIRE(parent_rows == child_rows);
                                if (is_subabundant(triple_abundance(l)) &&
                                    is_subabundant(triple_abundance(r)))
                                    REQUIRE(is_subabundant(triple_abundance(tri)));
                                if (is_superabundant(triple_abundance(l)) &&
                                    is_superabundant(triple_abundance(r)))
                                    REQUIRE(is_superabundant(triple_abundance(tri)));
                            }
                    }
}

TEST_CASE("certify_T: threshold route") {
    SUBCASE("n0=1, X = SV_{(1,1)}^{(3,3)}, m = 8: two (0,4,4) bases of rank 16") {
        Certificate c = certify_T(1, {1, 1}, {3, 3}, 8, 0);
        REQUIRE(c.nondefective());
        const auto* s = std::get_if<SplittingJ>(&c.just);
        REQUIRE(s != nullptr);
        CHECK(s->n0 == 1);
        CHECK(s->m == 8);
        CHECK(s->t == 0);
        CHECK(s->n_prime == 0);
        CHECK(s->m_prime == 4);
        REQUIRE(c.children.size() == 2);
        for (const auto& child : c.children) {
            const auto* leaf = std::get_if<TerraciniJ>(&child.just);
            REQUIRE(leaf != nullptr);
            CHECK(leaf->n0 == 0);
            CHECK(leaf->t == 4);
            CHECK(child.problem.m == 4);
            CHECK(leaf->outcome.observed_rank == 16);
        }
        CHECK(verify_certificate(c).empty());
    }

    SUBCASE("n0=2, X = SV_{(1,1)}^{(3,3)}, m = 9: chain down to (0,3,6) bases") {
        Certificate c = certify_T(2, {1, 1}, {3, 3}, 9, 0);
        REQUIRE(c.nondefective());
        const auto* s = std::get_if<SplittingJ>(&c.just);
        REQUIRE(s != nullptr);
        CHECK(s->n0 == 2);
        CHECK(s->m == 9);
        REQUIRE(c.children.size() == 2);
        const auto* base = std::get_if<TerraciniJ>(&c.children[0].just);
        REQUIRE(base != nullptr);
        CHECK(base->t == 6);
        CHECK(base->outcome.observed_rank == 15);  // 3*3 + 6 rows, subabundant
        const auto* mid = std::get_if<SplittingJ>(&c.children[1].just);
        REQUIRE(mid != nullptr);
        CHECK(mid->n0 == 1);
        CHECK(mid->m == 6);
        CHECK(mid->t == 3);
        CHECK(verify_certificate(c).empty());
    }

    SUBCASE("monotone extension below the threshold") {
        Certificate c = certify_T(1, {1, 1}, {3, 3}, 5, 0);
        REQUIRE(c.nondefective());
        const auto* m = std::get_if<MonotoneJ>(&c.just);
        REQUIRE(m != nullptr);
        CHECK(m->direction == "subabundant");
        CHECK(m->from.m == 8);
        CHECK(verify_certificate(c).empty());
    }

    SUBCASE("superabundant branch carries the symmetry note") {
        Certificate c = certify_T(2, {1, 1}, {3, 3}, 12, 0);
        REQUIRE(c.nondefective());
        const auto* s = std::get_if<SplittingJ>(&c.just);
        REQUIRE(s != nullptr);
        CHECK(s->note == "symmetric to printed proof");
        CHECK(verify_certificate(c).empty());
    }

    SUBCASE("gap between thresholds goes to the oracle") {
        // n0=2, X=(1,1)/(3,3): thresholds 9 and 12; m=10 sits in the gap
        Certificate c = certify_T(2, {1, 1}, {3, 3}, 10, 0);
        const auto* t = std::get_if<TerraciniJ>(&c.just);
        REQUIRE(t != nullptr);
        CHECK(t->n0 == 2);
        CHECK(verify_certificate(c).empty());
    }
}

TEST_CASE("certify_T: n0 = 0 delegates to the plain oracle") {
    Certificate c = certify_T(0, {1, 1}, {3, 3}, 4, 0);
    CHECK(c.nondefective());
    const auto* t = std::get_if<TerraciniJ>(&c.just);
    REQUIRE(t != nullptr);
    CHECK(t->n0 == -1);  // plain check, not a T-leaf
    CHECK(c.problem == SecantProblem{{1, 1}, {3, 3}, 4});
    CHECK(t->outcome.observed_rank == 12);
    CHECK(verify_certificate(c).empty());
}

TEST_CASE("split-vs-direct equivalence on random small instances") {
    SeedStream rng(555);
    int agreed = 0;
    int tried = 0;
    while (agreed < 12 && tried < 60) {
        ++tried;
        int n0 = 1 + static_cast<int>(rng.below(2));
        int k = 1 + static_cast<int>(rng.below(2));
        MultiIndex n, d;
        for (int i = 0; i < k; ++i) {
            n.e.push_back(1 + static_cast<int>(rng.below(2)));
            d.e.push_back(3 + static_cast<int>(rng.below(2)));
        }
        Int N = ambient_count(n, d);
        if (Int(n0 + 1) * N > 2000) continue;
        auto th = thresholds(n0, n.sum(), N);
        if (th.lower < 1) continue;
        bool low = rng.below(2) == 0;
        Int m = Int(n0 + 1) * (low ? th.lower : th.upper);
        Certificate viaSplit = certify_T(n0, n, d, m, 0);
        auto direct = check_T_property(n0, n, d, m, 0);
        if (viaSplit.verdict != CertVerdict::Unknown) {
            CHECK(viaSplit.nondefective() == direct.certified());
            ++agreed;
        }
    }
    CHECK(agreed >= 12);
}

TEST_CASE("theorem12_range") {
    auto [lo, hi] = theorem12_range(1, {1, 1}, {3, 3});
    CHECK(lo == 8);
    CHECK(hi == 8);

    std::tie(lo, hi) = theorem12_range(2, {1, 1}, {3, 3});
    CHECK(lo == 9);
    CHECK(hi == 12);
    CHECK(hi - lo <= 2 + 1);  // gap at most n0+1

    // recomputed via the defining formula: N = 100, n0+|n|+1 = 7
    std::tie(lo, hi) = theorem12_range(2, {2, 2}, {3, 3});
    CHECK(lo == Int(3) * floor_div(100, 7));
    CHECK(hi == Int(3) * ceil_div(100, 7));
    CHECK(lo == 42);
    CHECK(hi == 45);
}

TEST_CASE("identifiability_bound") {
    CHECK(identifiability_bound({1, 1, 1}, {3, 3, 3}) == 16);
    CHECK(identifiability_bound({2, 2, 2}, {3, 3, 3}) == 142);
    CHECK(identifiability_bound({1, 1}, {3, 3}, 1) == 8);
}

TEST_CASE("specialized split block-diagonalizes the matrix") {
    // points of P(V) x X with v-components in complementary coordinate
    // subspaces V1 (+) V2: every row of the stacked tangent blocks then
    // lives in one column block, and the rank is the sum of the block ranks
    PrimeField F(MERSENNE31);
    MultiIndex n{2, 1, 1};  // realized: P^2 x SV_{(1,1)}^{(3,3)}
    MultiIndex d{1, 3, 3};
    int n_prime = 0;  // V1 = <e_0>, V2 = <e_1, e_2>
    std::size_t m1 = 2, m2 = 4;

    SeedStream rng(2025);
    std::vector<FpMatrix> blocks;
    std::size_t cols = 3 * 16;
    FpMatrix M(0, cols, F);
    M.a.clear();
    auto add_rows = [&](const FpMatrix& b) {
        M.a.insert(M.a.end(), b.a.begin(), b.a.end());
        M.rows += b.rows;
    };
    for (std::size_t i = 0; i < m1 + m2; ++i) {
        PointSample pt = sample_point(n, F, rng);
        // force the v-component into V1 resp. V2
        if (i < m1) {
            pt.u[0][1] = pt.u[0][2] = 0;
            if (pt.u[0][0] == 0) pt.u[0][0] = 1;
        } else {
            pt.u[0][0] = 0;
            if (pt.u[0][1] == 0 && pt.u[0][2] == 0) pt.u[0][1] = 1;
        }
        add_rows(tangent_block(n, d, pt, F));
    }

    // columns of the V1 block: factor-1 exponent concentrated on e_0
    std::size_t stride = 16;  // per factor-1 coordinate
    auto col_block = [&](std::size_t j) { return j / stride <= static_cast<std::size_t>(n_prime); };

    FpMatrix M1(M.rows, cols, F), M2(M.rows, cols, F);
    for (std::size_t i = 0; i < M.rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            (col_block(j) ? M1 : M2).at(i, j) = M.at(i, j);

    // every row is supported in exactly one block
    for (std::size_t i = 0; i < M.rows; ++i) {
        bool in1 = false, in2 = false;
        for (std::size_t j = 0; j < cols; ++j) {
            if (M.at(i, j) == 0) continue;
            (col_block(j) ? in1 : in2) = true;
        }
        CHECK(!(in1 && in2));
    }

    std::size_t r = rank(M), r1 = rank(M1), r2 = rank(M2);
    CHECK(r == r1 + r2);
    // and the whole specialized configuration still reaches the expected
    // dimension, mirroring the direct sum argument
    CHECK(r == std::min<std::size_t>(3 * 16, (m1 + m2) * 5));
}
