#include <doctest.h>

#include <sstream>

#include "svsec/inequalities.hpp"
#include "svsec/primefield.hpp"

using namespace svsec;

namespace {

Rat q(const char* s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

RationalPoly poly_of(std::initializer_list<std::pair<const char*, const char*>> terms) {
    RationalPoly p;
    for (auto& [mono, c] : terms) p.add_term(RationalPoly::parse_monomial(mono), q(c));
    return p;
}

}  // namespace

TEST_CASE("binomial_poly") {
    CHECK(binomial_poly(0, "n") == RationalPoly(Rat(1)));
    CHECK(binomial_poly(3, "n") ==
          poly_of({{"n^3", "1/6"}, {"n^2", "1"}, {"n", "11/6"}, {"1", "1"}}));
    CHECK(binomial_poly(2, "n") == poly_of({{"n^2", "1/2"}, {"n", "3/2"}, {"1", "1"}}));

    // C(x+c, c) at integer points agrees with integer binomials
    for (int c = 0; c <= 5; ++c) {
        RationalPoly p = binomial_poly(c, "x");
        for (int x = 0; x <= 10; ++x) {
            Rat v = p.eval({{"x", Rat(x)}});
            CHECK(v == Rat(binomial(x + c, c)));
        }
    }
}

TEST_CASE("RationalPoly ring laws and evaluation homomorphism") {
    SeedStream rng(17);
    auto random_poly = [&]() {
        RationalPoly p;
        int terms = 1 + static_cast<int>(rng.below(5));
        for (int i = 0; i < terms; ++i) {
            RationalPoly::Monomial m;
            if (rng.below(2)) m["x"] = 1 + static_cast<int>(rng.below(3));
            if (rng.below(2)) m["y"] = 1 + static_cast<int>(rng.below(3));
            long num = static_cast<long>(rng.below(21)) - 10;
            long den = 1 + static_cast<long>(rng.below(7));
            Rat c(num, den);
            c.canonicalize();
            p.add_term(std::move(m), c);
        }
        return p;
    };
    for (int it = 0; it < 50; ++it) {
        RationalPoly a = random_poly(), b = random_poly(), c = random_poly();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        std::map<std::string, Rat> pt{{"x", Rat(static_cast<long>(rng.below(19)) - 9)},
                                      {"y", Rat(static_cast<long>(rng.below(19)) - 9)}};
        CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
        CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
    }
}

TEST_CASE("expand_named: printed coefficients reproduce exactly") {
    SUBCASE("A1-base, coefficient of n3^3") {
        auto co = expand_named("A1-base").coefficients_in("n3");
        RationalPoly want = poly_of({{"n1^6", "-1/216"},
                                     {"n1^5", "-1/24"},
                                     {"n1^4", "-31/216"},
                                     {"n1^3", "-17/72"},
                                     {"n1^2", "-5/27"},
                                     {"n1", "-1/18"},
                                     {"1", "8"}});
        CHECK(co[3] == want);
    }

    SUBCASE("A1-n1eq2 evaluated at n3 = 2") {
        RationalPoly at2 = expand_named("A1-n1eq2").substitute("n3", RationalPoly(Rat(2)));
        RationalPoly want =
            poly_of({{"n2^3", "-17/3"}, {"n2^2", "-24"}, {"n2", "26/3"}, {"1", "95"}});
        CHECK(at2 == want);
    }

    SUBCASE("A3-step, coefficient of nk^3") {
        auto co = expand_named("A3-step").coefficients_in("nk");
        RationalPoly want =
            poly_of({{"np^3", "1/3"}, {"np^2", "1/2"}, {"np", "1/6"}, {"1", "-2"}});
        CHECK(co[3] == want);
    }

    SUBCASE("unknown id") { CHECK_THROWS_AS(expand_named("A9-nope"), std::invalid_argument); }
}

TEST_CASE("expansions agree with direct big-integer evaluation at random points") {
    // pre-expansion vs post-expansion: the defining binomial expressions,
    // evaluated with exact integers, equal the expanded polynomial
    SeedStream rng(23);
    auto C = [](long n, long kk) {
        return kk < 0 || kk > n ? Int(0) : binomial(static_cast<unsigned long>(n),
                                                    static_cast<unsigned long>(kk));
    };
    RationalPoly a1 = expand_named("A1-base");
    RationalPoly a3 = expand_named("A3-base");
    RationalPoly a1s = expand_named("A1-step");
    RationalPoly a3s = expand_named("A3-step");
    for (int it = 0; it < 100; ++it) {
        long x = 1 + static_cast<long>(rng.below(30));
        long y = 1 + static_cast<long>(rng.below(30));
        Int s = x + 2 * y;
        Int q = s * s * s + 4 * s * s + 2 * s - 1;
        Int want = -C(x + 2, 3) * C(x + 3, 3) * C(y + 3, 3) + q;
        CHECK(Rat(want) == a1.eval({{"n1", Rat(x)}, {"n3", Rat(y)}}));

        Int ssum = s * (s + 1) * (2 * s + 1);
        Rat want3 = Rat(C(x + 1, 2) * C(x + 3, 3) * C(y + 3, 3) * (5 * x + 3 * y - 2), Int(3)) -
                    Rat(ssum);
        want3.canonicalize();
        CHECK(want3 == a3.eval({{"n1", Rat(x)}, {"n3", Rat(y)}}));

        Int u = x + y;
        Int qp = Int(x) * x * x + 4 * x * x + 2 * x - 1;
        Int qu = u * u * u + 4 * u * u + 2 * u - 1;
        CHECK(Rat(-C(y + 3, 3) * qp + qu) == a1s.eval({{"np", Rat(x)}, {"nk", Rat(y)}}));

        Int sp = Int(x) * (x + 1) * (2 * x + 1);
        Int su = u * (u + 1) * (2 * u + 1);
        CHECK(Rat(C(y + 3, 3) * sp - su) == a3s.eval({{"np", Rat(x)}, {"nk", Rat(y)}}));
    }
}

TEST_CASE("prove_sign_on_ray") {
    RationalPoly x = RationalPoly::variable("x");
    RationalPoly p1 = -(x * x) - x - RationalPoly(Rat(1));
    CHECK(prove_sign_on_ray(p1, 0, false));

    RationalPoly p2 = x * x - RationalPoly(Rat(4));
    CHECK(prove_sign_on_ray(p2, 2, true));
    CHECK_FALSE(prove_sign_on_ray(p2, 1, true));  // constant term -3 after the shift

    SUBCASE("a successful proof implies the sampled sign") {
        RationalPoly p = expand_named("A3-base").coefficients_in("n3")[2];
        REQUIRE(prove_sign_on_ray(p, 2, true));
        for (int v = 2; v <= 52; ++v) {
            CHECK(p.eval({{"n1", Rat(v)}}) >= 0);
        }
    }
}

TEST_CASE("descartes_bound") {
    CHECK(descartes_bound({q("-17/3"), q("-24"), q("26/3"), q("95")}) == 1);
    CHECK(descartes_bound({q("1"), q("1"), q("1")}) == 0);
    CHECK(descartes_bound({q("1"), q("-1"), q("1"), q("-1")}) == 3);
    CHECK_THROWS_AS(descartes_bound({q("0"), q("0")}), std::invalid_argument);

    // invariant under positive scaling
    SeedStream rng(3);
    for (int it = 0; it < 50; ++it) {
        std::vector<Rat> coeffs;
        int len = 2 + static_cast<int>(rng.below(6));
        bool nonzero = false;
        for (int i = 0; i < len; ++i) {
            long v = static_cast<long>(rng.below(11)) - 5;
            coeffs.push_back(Rat(v));
            nonzero |= v != 0;
        }
        if (!nonzero) continue;
        std::vector<Rat> scaled;
        Rat s(static_cast<long>(1 + rng.below(9)), static_cast<long>(1 + rng.below(9)));
        for (auto& c : coeffs) scaled.push_back(c * s);
        CHECK(descartes_bound(coeffs) == descartes_bound(scaled));
    }
}

TEST_CASE("scan_lemma") {
    SUBCASE("A2 on k=3, n in [2,5], d = 3^3") {
        ScanBox box{3, 3, 2, 5, 3, 3};
        ScanReport rep = scan_lemma("A2", box);
        CHECK(rep.clean());
        CHECK(rep.instances > 0);
    }

    SUBCASE("A1 on the single flagship instance") {
        ScanBox box{3, 3, 2, 2, 3, 3};
        ScanReport rep = scan_lemma("A1", box);
        CHECK(rep.clean());
        CHECK(rep.instances == 2);  // r in {142, 143}
    }

    SUBCASE("ineq31 on n' = (1,1), d' = (3,3)") {
        ScanBox box{2, 2, 1, 1, 3, 3};
        ScanReport rep = scan_lemma("ineq31", box);
        CHECK(rep.clean());
        CHECK(rep.instances == 1);
    }

    SUBCASE("malformed boxes are rejected") {
        CHECK_THROWS_AS(scan_lemma("A1", ScanBox{3, 2, 2, 6, 3, 5}), std::invalid_argument);
        CHECK_THROWS_AS(scan_lemma("A1", ScanBox{3, 4, 1, 6, 3, 5}), std::invalid_argument);
        CHECK_THROWS_AS(scan_lemma("A1", ScanBox{3, 4, 2, 6, 2, 5}), std::invalid_argument);
        CHECK_THROWS_AS(scan_lemma("nope", ScanBox{}), std::invalid_argument);
    }
}

TEST_CASE("verify_appendix on the shipped tables") {
    ScanBox small{3, 3, 2, 3, 3, 3};
    AppendixReport rep = verify_appendix(SVSEC_DATA_DIR, small);
    for (const auto& c : rep.checks) {
        INFO(c.id, ": ", c.what, " -- ", c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("perturbed expected table fails naming the term") {
    RationalPoly actual = expand_named("A1-base");
    RationalPoly expected = actual;
    expected.add_term(RationalPoly::parse_monomial("n1^6*n3^3"), q("1/1000"));
    auto diff = first_table_mismatch(expected, actual);
    REQUIRE(diff.has_value());
    CHECK(diff->find("n1^6*n3^3") != std::string::npos);
}

TEST_CASE("coefficient table round trip") {
    RationalPoly p = expand_named("A3-base");
    std::stringstream ss;
    write_coefficient_table(p, ss);
    RationalPoly back = read_coefficient_table(ss);
    CHECK(back == p);
}
