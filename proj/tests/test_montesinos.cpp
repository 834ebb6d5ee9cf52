#include "doctest.h"

#include "recomb/family.hpp"
#include "recomb/invariants.hpp"
#include "recomb/montesinos.hpp"

using namespace recomb;

namespace {
LinkClass P(const char* text) { return parse_link_class(text); }
}  // namespace

TEST_CASE("continued fraction sums") {
    CHECK(cf_sum(5, 1) == 5);
    CHECK(cf_sum(7, 3) == 5);
    CHECK(cf_sum(3, 2) == 3);
    CHECK(cf_sum(15, 4) == 7);
    auto f = Fraction::make(6, -4);
    CHECK(f.num == -3);
    CHECK(f.den == 2);
    CHECK(Fraction::make(1, 0).is_infinite());
}

TEST_CASE("shapes of named classes") {
    auto t = shape_of(P("T(2,5)"));
    CHECK(t.is_two_bridge());
    CHECK(t.summands[0].alpha == 5);
    CHECK(t.crossing_number() == 5);
    CHECK(shape_of(P("K(3,3,1)")).is_two_bridge());
    CHECK(shape_of(P("K(3,3,1)")).crossing_number() == 7);
    CHECK(shape_of(P("C(5,-2)")).crossing_number() == 7);
    CHECK(shape_of(P("C(5,2)")).crossing_number() == 6);
    auto k = shape_of(P("K(5,4,-3)"));
    CHECK(k.is_prime_montesinos());
    CHECK(k.crossing_number() == 12);
    CHECK(shape_of(P("T(2,3)#C(4,3)+O")).loops == 1);
    CHECK(shape_of(P("T(2,3)#C(4,3)+O")).crossing_number() == 9);
    CHECK(shape_of(P("O+O")).component_count() == 2);
}

TEST_CASE("shape keys identify mirrors and tangle order") {
    for (const char* text : {"T(2,5)", "C(5,-2)", "K(5,4,-3)", "K(3,3,1)", "T(2,3)#C(4,3)", "F(3,2,5,-4)"}) {
        INFO(text);
        auto lc = P(text);
        CHECK(shape_of(mirror(lc)).key() == shape_of(lc).key());
    }
    CHECK(shape_of(P("K(5,4,-3)")).key() == shape_of(P("K(4,-3,5)")).key());
    CHECK(shape_of(P("K(5,4,-3)")).key() == shape_of(P("K(-3,4,5)")).key());
    CHECK(shape_of(P("K(5,4,-3)")).key() != shape_of(P("K(5,3,-1)")).key());
    CHECK(shape_of(P("T(2,3)#T(2,3)")).key() != shape_of(P("T(2,3)#T(2,-3)")).key());
}

TEST_CASE("minimal diagrams realize the crossing number") {
    for (int a = -5; a <= 5; ++a)
        for (int b = -5; b <= 5; ++b)
            for (int c = -3; c <= 3; ++c) {
                auto lc = LinkClass::pretzel(a, b, c);
                auto sh = shape_of(lc);
                auto d = minimal_diagram(sh);
                INFO(to_string(lc));
                CHECK(d.crossing_count() == sh.crossing_number());
                CHECK(d.component_count() == component_count(lc));
                if (d.crossing_count() <= 14) CHECK(fingerprint(d) == fingerprint(lc));
                if (sh.is_two_bridge()) {
                    CHECK(d.is_alternating());
                    CHECK(d.is_reduced());
                }
            }
}

TEST_CASE("montesinos hypotheses") {
    auto k = shape_of(P("K(5,4,-3)"));
    CHECK(satisfies_montesinos_hypotheses(k.summands[0]));
    auto m = shape_of(P("F(3,2,5,-4)"));
    REQUIRE(m.is_prime_montesinos());
    CHECK(satisfies_montesinos_hypotheses(m.summands[0]));
    CHECK(minimal_diagram(m).is_reduced());
}

TEST_CASE("hara yamamoto diagrams") {
    FamilyParams f{-3, -3, 4, 1};
    CHECK(is_hara_yamamoto(f));
    CHECK_FALSE(is_hara_yamamoto({-3, -3, 4, 2}));
    CHECK_FALSE(is_hara_yamamoto({-2, -3, 4, 1}));
    auto d = hara_yamamoto_diagram(f);
    CHECK(d.crossing_count() == 9);
    CHECK(fingerprint(d) == fingerprint(LinkClass::family(f)));
    for (int p = -6; p <= -3; ++p)
        for (int q = -6; q <= p; ++q)
            for (int r = 3; r <= 6; ++r) {
                FamilyParams g{p, q, r, 1};
                auto [zero, inf] = hara_yamamoto_resealings(g);
                INFO(p << " " << q << " " << r);
                CHECK(zero.is_alternating());
                CHECK(zero.is_reduced());
                CHECK(inf.is_alternating());
                CHECK(inf.is_reduced());
                CHECK(hara_yamamoto_diagram(g).crossing_count() == -p - q + r - 1);
            }
}
