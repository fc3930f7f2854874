#include <doctest.h>

#include <set>
#include <sstream>

#include "svsec/terracini.hpp"

using namespace svsec;

namespace {

PrimeField default_field() { return PrimeField(MERSENNE31); }

}  // namespace

TEST_CASE("exponent_table: reverse-lex order and counts") {
    auto t = exponent_table(1, 2);
    REQUIRE(t.size() == 3);
    CHECK(t[0] == std::vector<int>{2, 0});
    CHECK(t[1] == std::vector<int>{1, 1});
    CHECK(t[2] == std::vector<int>{0, 2});

    t = exponent_table(2, 2);
    REQUIRE(t.size() == 6);
    CHECK(t[0] == std::vector<int>{2, 0, 0});
    CHECK(t[1] == std::vector<int>{1, 1, 0});
    CHECK(t[2] == std::vector<int>{0, 2, 0});
    CHECK(t[3] == std::vector<int>{1, 0, 1});
    CHECK(t[4] == std::vector<int>{0, 1, 1});
    CHECK(t[5] == std::vector<int>{0, 0, 2});

    // rightmost-differing-index rule holds across the whole table
    auto before = [](const std::vector<int>& a, const std::vector<int>& b) {
        for (int j = static_cast<int>(a.size()) - 1; j >= 0; --j)
            if (a[j] != b[j]) return a[j] < b[j];
        return false;
    };
    t = exponent_table(3, 4);
    CHECK(t.size() == monomial_count(3, 4));
    for (std::size_t i = 0; i + 1 < t.size(); ++i) CHECK(before(t[i], t[i + 1]));
}

TEST_CASE("rank: identity and zero") {
    PrimeField F = default_field();
    FpMatrix id(3, 3, F);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1 + i;
    CHECK(rank(id) == 3);

    FpMatrix z(4, 5, F);
    CHECK(rank(z) == 0);
}

TEST_CASE("rank agrees across reduction strategies") {
    // same integer matrix reduced mod different primes: rank of a random
    // small integer matrix is the same for all large-enough primes
    SeedStream rng(99);
    for (std::uint64_t p : std::vector<std::uint64_t>{MERSENNE31, MERSENNE61, 65521, 1000003,
                                                      (std::uint64_t(1) << 32) + 15}) {
        PrimeField F(p);
        FpMatrix m(6, 9, F);
        SeedStream local(4242);  // same entries (small ints) for every prime
        for (auto& v : m.a) v = local.below(97);
        // duplicate row 3 = row 0 + row 1 to force a rank drop
        for (std::size_t j = 0; j < m.cols; ++j) m.at(3, j) = F.add(m.at(0, j), m.at(1, j));
        std::size_t rk = rank(m);
        CHECK(rk == 5);
    }
}

TEST_CASE("tangent_block shapes and ranks") {
    PrimeField F = default_field();

    SUBCASE("conic: tangent block has rank 2") {
        PointSample pt;
        pt.u = {{1, 17}};
        FpMatrix b = tangent_block({1}, {2}, pt, F);
        CHECK(b.rows == 2);
        CHECK(b.cols == 3);
        CHECK(rank(b) == 2);
    }

    SUBCASE("Segre P1 x P1 at a coordinate point") {
        PointSample pt;
        pt.u = {{1, 0}, {1, 0}};
        FpMatrix b = tangent_block({1, 1}, {1, 1}, pt, F);
        CHECK(b.rows == 3);
        CHECK(b.cols == 4);
        CHECK(rank(b) == 3);
    }

    SUBCASE("generic quartic Veronese point: block rank 3") {
        SeedStream rng(5);
        PointSample pt = sample_point({2}, F, rng);
        FpMatrix b = tangent_block({2}, {4}, pt, F);
        CHECK(b.rows == 3);
        CHECK(b.cols == 15);
        CHECK(rank(b) == 3);
    }

    SUBCASE("zero representative rejected") {
        PointSample pt;
        pt.u = {{0, 0}};
        CHECK_THROWS_AS(tangent_block({1}, {2}, pt, F), std::invalid_argument);
    }
}

TEST_CASE("terracini_matrix shapes") {
    PrimeField F = default_field();
    FpMatrix m = terracini_matrix({2}, {4}, 5, 0, F, 0);
    CHECK(m.rows == 15);
    CHECK(m.cols == 15);

    // ambient for ((1,1,1),(1,3,3)) is 2*4*4 = 32 columns
    m = terracini_matrix({1, 1, 1}, {1, 3, 3}, 4, 2, F, 0);
    CHECK(m.rows == 20);
    CHECK(m.cols == 32);

    m = terracini_matrix({2, 2}, {1, 1}, 2, 0, F, 0);
    CHECK(m.rows == 10);
    CHECK(m.cols == 9);

    CHECK_THROWS_AS(terracini_matrix({1, 1}, {2, 3}, 2, 1, F, 0), std::invalid_argument);
    CHECK_THROWS_AS(terracini_matrix({3, 3, 3}, {5, 5, 5}, 100, 0, F, 0), resource_limit_error);
}

TEST_CASE("known defective instances show the classical deficits") {
    SUBCASE("quartic Veronese surface, m = 5: rank 14 of 15") {
        auto out = check_nondefective({2}, {4}, 5);
        CHECK(out.verdict == RankVerdict::RankDeficitObserved);
        CHECK(out.observed_rank == 14);
        CHECK(out.expected == 15);
        CHECK(out.extra_primes.size() == 2);  // deficit was rechecked
    }

    SUBCASE("sigma_2 of P2 x P2: rank 8 of 9") {
        auto out = check_nondefective({2, 2}, {1, 1}, 2);
        CHECK(out.verdict == RankVerdict::RankDeficitObserved);
        CHECK(out.observed_rank == 8);
        CHECK(out.expected == 9);
    }

    SUBCASE("deficits persist for each recheck prime individually") {
        for (std::uint64_t p : deficit_recheck_primes()) {
            OracleOptions opt;
            opt.prime = p;
            opt.recheck_deficit = false;
            auto out = check_nondefective({2}, {4}, 5, opt);
            CHECK(out.observed_rank == 14);
        }
    }
}

TEST_CASE("certified full-rank instances") {
    SUBCASE("(1,1,1)/(3,3,3) at the critical value 16 fills") {
        auto out = check_nondefective({1, 1, 1}, {3, 3, 3}, 16);
        CHECK(out.verdict == RankVerdict::CertifiedNondefective);
        CHECK(out.observed_rank == 64);
    }

    SUBCASE("m = 1 is always certified") {
        for (auto [n, d] : std::vector<std::pair<MultiIndex, MultiIndex>>{
                 {{1}, {1}}, {{2}, {3}}, {{1, 2}, {2, 1}}, {{1, 1, 1}, {1, 1, 1}}}) {
            auto out = check_nondefective(n, d, 1);
            CHECK(out.verdict == RankVerdict::CertifiedNondefective);
        }
    }

    SUBCASE("monotone consistency below a certified subabundant m") {
        auto out16 = check_nondefective({1, 1, 1}, {3, 3, 3}, 16);
        REQUIRE(out16.certified());
        for (Int m : {5, 9, 13}) {
            auto out = check_nondefective({1, 1, 1}, {3, 3, 3}, m);
            CHECK(out.certified());
        }
    }
}

TEST_CASE("T property checks") {
    SUBCASE("n0 = 0, t = 0 reduces to the plain check") {
        auto direct = check_nondefective({1, 1}, {3, 3}, 4);
        auto viaT = check_T_property(0, {1, 1}, {3, 3}, 4, 0);
        CHECK(direct.verdict == viaT.verdict);
        CHECK(direct.observed_rank == viaT.observed_rank);
        CHECK(direct.expected == viaT.expected);
    }

    SUBCASE("T(1, 8, 0) on P1 x SV_{(1,1)}^{(3,3)}: rank 32") {
        auto out = check_T_property(1, {1, 1}, {3, 3}, 8, 0);
        CHECK(out.certified());
        CHECK(out.observed_rank == 32);
    }

    SUBCASE("T(0, 4, 4) base case: rank 16") {
        auto out = check_T_property(0, {1, 1}, {3, 3}, 4, 4);
        CHECK(out.certified());
        CHECK(out.observed_rank == 16);
    }
}

TEST_CASE("verdicts are reproducible and permutation invariant") {
    OracleOptions opt;
    opt.seed = 12345;
    auto a = check_nondefective({1, 2}, {3, 2}, 5, opt);
    auto b = check_nondefective({1, 2}, {3, 2}, 5, opt);
    CHECK(a.observed_rank == b.observed_rank);
    CHECK(a.verdict == b.verdict);
    CHECK(a.trials == b.trials);
    CHECK(a.prime == b.prime);

    auto c = check_nondefective({2, 1}, {2, 3}, 5, opt);
    CHECK(a.verdict == c.verdict);
}

TEST_CASE("rank is invariant under row scaling of the samples") {
    PrimeField F = default_field();
    SeedStream rng(77);
    PointSample pt = sample_point({1, 2}, F, rng);
    FpMatrix b1 = tangent_block({1, 2}, {2, 3}, pt, F);
    PointSample scaled = pt;
    for (auto& c : scaled.u[0]) c = F.mul(c, 7);
    for (auto& c : scaled.u[1]) c = F.mul(c, 11);
    FpMatrix b2 = tangent_block({1, 2}, {2, 3}, scaled, F);
    CHECK(rank(b1) == rank(b2));
    CHECK(rank(b1) == 4);  // |n|+1
}

TEST_CASE("sms export") {
    PrimeField F(65521);
    FpMatrix m(2, 3, F);
    m.at(0, 0) = 5;
    m.at(1, 2) = 9;
    std::ostringstream os;
    write_sms(m, os);
    CHECK(os.str() == "2 3 65521\n1 1 5\n2 3 9\n0 0 0\n");
}
