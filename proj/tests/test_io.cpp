#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qchar/engine.hpp"
#include "qchar/io.hpp"

using namespace qchar;

TEST_CASE("JSON round-trip on characters") {
    QCharEngine eng(build_type(Family::A2n2, 2));
    CharPoly chi = eng.kr_char(0, 2, Spec::base_a());
    CHECK(io::charpoly_from_json(io::to_json(chi)) == chi);

    CharPoly empty;
    CHECK(io::to_json(empty).dump() == R"({"terms":[]})");
    CHECK(io::charpoly_from_json(io::to_json(empty)) == empty);

    // one-variable monomial with exotic exponents
    Monomial m = Monomial::var(1, Spec(Rat(1, 3), Rat(2, 3), Rat(-7, 2)), -4);
    CHECK(io::monomial_from_json(io::to_json(m)) == m);
}

TEST_CASE("JSON round-trip on finite characters and tableaux") {
    auto t = build_type(Family::D43);
    QCharEngine eng(t);
    FiniteChar f = beta(t, eng.kr_char(2, 1, Spec::base_a()));
    CHECK(io::finitechar_from_json(io::to_json(f)) == f);

    auto tabs = enumerate_tableaux(t, 2, 2);
    for (size_t i = 0; i < tabs.size(); i += 37) {
        auto j = io::to_json(t, tabs[i]);
        CHECK(io::tableau_from_json(t, j).cell == tabs[i].cell);
    }
}

TEST_CASE("deterministic serialization") {
    QCharEngine e1(build_type(Family::D43)), e2(build_type(Family::D43));
    auto j1 = io::to_json(e1.kr_char(1, 2, Spec::base_a())).dump();
    auto j2 = io::to_json(e2.kr_char(1, 2, Spec::base_a(), Engine::FM)).dump();
    CHECK(j1 == j2);
}

TEST_CASE("latex emission matches the section 3.4 display shape") {
    QCharEngine eng(build_type(Family::A2n2, 2));
    std::string tex = io::latex(eng.kr_char(1, 1, Spec::base_a()));
    CHECK(tex ==
          "Z_{1,a} + Z_{0,aq}Z_{1,aq^{2}}^{-1} + Z_{0,-aq^{2}}Z_{0,aq^{3}}^{-1} + "
          "Z_{1,-aq^{3}}Z_{0,-aq^{4}}^{-1} + Z_{1,-aq^{5}}^{-1}");
}
