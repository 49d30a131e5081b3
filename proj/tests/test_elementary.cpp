#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "qchar/elementary.hpp"

using namespace qchar;

namespace {

Spec sa() { return Spec::base_a(); }
Spec saq(int k) { return Spec::base_a().shift_q(Rat(k)); }

} // namespace

TEST_CASE("string expansion term counts and coefficients") {
    auto a22 = build_type(Family::A2n2, 1);
    auto a52 = build_type(Family::A2nm12, 3);
    for (int k = 0; k <= 5; ++k) {
        CharPoly sp = string_expand(a22, LocalString{0, k, sa()});
        CHECK(sp.dimension() == (k + 1) * (k + 2) / 2);
        CHECK(sp.distinct_monomials() == size_t((k + 1) * (k + 2) / 2));
        for (int node : a52.nodes) {
            CharPoly lad = string_expand(a52, LocalString{node, k, sa()});
            CHECK(lad.dimension() == k + 1);
        }
    }
}

TEST_CASE("A2-2 string expansions match section 5") {
    auto t = build_type(Family::A2n2, 1);
    SECTION("fundamental") {
        CharPoly f = string_expand(t, LocalString{0, 1, sa()});
        CharPoly expect;
        expect.add_term(Monomial::var(0, sa()), 1);
        expect.add_term(Monomial::var(0, saq(1).negate()) * Monomial::var(0, saq(2), -1), 1);
        expect.add_term(Monomial::var(0, saq(3).negate(), -1), 1);
        CHECK(f == expect);
    }
    SECTION("k = 2 gives the six monomials of Prop 5.1") {
        CharPoly w2 = string_expand(t, LocalString{0, 2, sa()});
        CharPoly expect;
        auto Z = [](const Spec& s, int e = 1) { return Monomial::var(0, s, e); };
        expect.add_term(Z(sa()) * Z(saq(2)), 1);
        expect.add_term(Z(sa()) * Z(saq(3).negate()) * Z(saq(4), -1), 1);
        expect.add_term(Z(sa()) * Z(saq(5).negate(), -1), 1);
        expect.add_term(Z(saq(1).negate()) * Z(saq(2), -1) * Z(saq(3).negate()) * Z(saq(4), -1),
                        1);
        expect.add_term(Z(saq(1).negate()) * Z(saq(2), -1) * Z(saq(5).negate(), -1), 1);
        expect.add_term(Z(saq(3).negate(), -1) * Z(saq(5).negate(), -1), 1);
        CHECK(w2 == expect);
    }
    SECTION("twisted T-system of the string expansions, k <= 8") {
        auto E = [&](int k, const Spec& s) { return string_expand(t, LocalString{0, k, s}); };
        for (int k = 1; k <= 8; ++k) {
            CharPoly lhs = E(k, sa()) * E(k, saq(2));
            CharPoly rhs = E(k + 1, sa()) * E(k - 1, saq(2)) + E(k, saq(1).negate());
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("untwisted rank-1 fundamental") {
    auto t = build_type(Family::UntwistedA, 1);
    CharPoly f = string_expand(t, LocalString{1, 1, sa()});
    CharPoly expect;
    expect.add_term(Monomial::var(1, sa()), 1);
    expect.add_term(Monomial::var(1, saq(2), -1), 1);
    CHECK(f == expect);
}

TEST_CASE("every non-highest string monomial is right-negative") {
    for (auto t : {build_type(Family::A2n2, 2), build_type(Family::D43),
                   build_type(Family::Dnp12, 3)}) {
        for (int node : t.nodes) {
            for (int k = 1; k <= 3; ++k) {
                CharPoly sp = string_expand(t, LocalString{node, k, saq(1)});
                Monomial top = kr_highest(t, node, k, saq(1));
                for (auto& [m, c] : sp.terms()) {
                    if (m == top) continue;
                    CHECK(is_right_negative(t, m));
                    CHECK(is_below(t, m, top));
                }
            }
        }
    }
}

TEST_CASE("normal factorization") {
    auto t = build_type(Family::A2n2, 1);
    SECTION("one merged string") {
        auto f = normal_factorization(t, 0, kr_highest(t, 0, 2, sa()));
        REQUIRE(f.size() == 1);
        CHECK(f[0].k == 2);
        CHECK(f[0].s == sa());
    }
    SECTION("separated strings stay separate") {
        auto u = build_type(Family::UntwistedA, 1);
        Monomial m = Monomial::var(1, sa()) * Monomial::var(1, saq(4));
        auto f = normal_factorization(u, 1, m);
        REQUIRE(f.size() == 2);
        CHECK(f[0].k == 1);
        CHECK(f[1].k == 1);
    }
    SECTION("repeated variable gives repeated strings") {
        auto f = normal_factorization(t, 0, Monomial::var(0, sa(), 2));
        REQUIRE(f.size() == 2);
        CHECK(f[0].k == 1);
        CHECK(f[1].k == 1);
        CHECK(f[0].s == sa());
        CHECK(f[1].s == sa());
    }
    SECTION("sign lines are distinct lines") {
        Monomial m = Monomial::var(0, sa()) * Monomial::var(0, saq(2).negate());
        auto f = normal_factorization(t, 0, m);
        CHECK(f.size() == 2);
    }
    SECTION("rejects non-dominant input") {
        CHECK_THROWS_AS(normal_factorization(t, 0, Monomial::var(0, sa(), -1)),
                        NotLocallyDominant);
    }
}

TEST_CASE("local lift") {
    auto t = build_type(Family::A2n2, 1);
    SECTION("empty factorization") {
        CHECK(local_lift(t, 0, Monomial::one()) == CharPoly::one());
    }
    SECTION("L_0 of the k=2 highest monomial is the Prop 5.1 polynomial") {
        CharPoly l = local_lift(t, 0, kr_highest(t, 0, 2, sa()));
        CHECK(l == string_expand(t, LocalString{0, 2, sa()}));
    }
    SECTION("single variable with neighbor attached") {
        auto a42 = build_type(Family::A2n2, 2);
        CharPoly l = local_lift(a42, 1, Monomial::var(1, sa()));
        CHECK(l.dimension() == 2);
        // second term is Z_{1,a} A_{1,aq}^{-1} = Z_{1,aq^2}^{-1} Z_{0,aq}
        Monomial second = Monomial::var(1, saq(2), -1) * Monomial::var(0, saq(1));
        CHECK(l.coeff(second) == 1);
    }
}

TEST_CASE("direction decomposition") {
    auto t = build_type(Family::A2n2, 1);
    SECTION("single block round-trip") {
        for (int k = 1; k <= 3; ++k) {
            Monomial m = kr_highest(t, 0, k, sa());
            CharPoly L = local_lift(t, 0, m);
            auto dec = decompose_direction(t, L, 0);
            REQUIRE(dec.size() == 1);
            CHECK(dec[0].first == m);
            CHECK(dec[0].second == 1);
        }
    }
    SECTION("product of fundamentals splits into two blocks") {
        CharPoly prod = string_expand(t, LocalString{0, 1, sa()}) *
                        string_expand(t, LocalString{0, 1, saq(2)});
        auto dec = decompose_direction(t, prod, 0);
        REQUIRE(dec.size() == 2);
        CHECK(dec[0].first == kr_highest(t, 0, 2, sa()));
        CHECK(dec[1].first == Monomial::var(0, saq(1).negate()));
        // reassembly is exact
        CharPoly back;
        for (auto& [m, c] : dec) back += local_lift(t, 0, m) * c;
        CHECK(back == prod);
    }
    SECTION("a bare variable is not in the kernel") {
        CHECK_THROWS_AS(decompose_direction(t, CharPoly(Monomial::var(0, sa())), 0),
                        NotInKernel);
    }
}

TEST_CASE("screen") {
    auto t = build_type(Family::A2n2, 1);
    CHECK(screen(t, CharPoly::one()));
    CHECK(!screen(t, CharPoly(Monomial::var(0, sa()))));
    CharPoly f = string_expand(t, LocalString{0, 1, sa()});
    CHECK(screen(t, f));

    // screening is multiplicative on products of expanded strings: every
    // two-string product, including resonant relative positions
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        int k1 = 1 + int(rng() % 2), k2 = 1 + int(rng() % 2);
        Spec s1 = saq(int(rng() % 6));
        Spec s2 = saq(int(rng() % 6));
        if (rng() % 2) s2 = s2.negate();
        CharPoly p = string_expand(t, LocalString{0, k1, s1}) *
                     string_expand(t, LocalString{0, k2, s2});
        CHECK(screen(t, p));
        CharPoly corrupted = p;
        corrupted.add_term(Monomial::var(0, saq(9)), 1);
        CHECK(!screen(t, corrupted));
    }
    // products in the T-system shape chi(W_k,a) chi(W_k,aq^2)
    for (int k = 1; k <= 4; ++k) {
        CharPoly p = string_expand(t, LocalString{0, k, sa()}) *
                     string_expand(t, LocalString{0, k, saq(2)});
        CHECK(screen(t, p));
    }
}
