#include "doctest.h"

#include <random>

#include "recomb/errors.hpp"
#include "recomb/family.hpp"
#include "recomb/invariants.hpp"

using namespace recomb;

namespace {
FamilyParams F(int p, int q, int r, int s) { return {p, q, r, s}; }
LinkClass P(const char* text) { return parse_link_class(text); }
}  // namespace

TEST_CASE("normalize params examples") {
    CHECK(normalize(F(1, 2, -3, 4)) == F(-1, -2, 3, -4));
    CHECK(normalize(F(0, 0, 0, 0)) == F(0, 0, 0, 0));
    CHECK(normalize(F(3, 5, 2, 1)) == F(5, 3, 2, 1));
    CHECK(normalize(F(-1, 2, 0, 3)) == F(1, -2, 0, -3));
    CHECK(mirror(F(1, -2, 3, 0)) == F(-1, 2, -3, 0));
}

TEST_CASE("normalize params is idempotent and canonical") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-8, 8);
    for (int i = 0; i < 2000; ++i) {
        FamilyParams f{d(rng), d(rng), d(rng), d(rng)};
        auto n = normalize(f);
        CHECK(normalize(n) == n);
        CHECK(is_normalized(n));
        CHECK(n.r >= 0);
        CHECK(n.p >= n.q);
        CHECK(normalize(mirror(f)) == n);
        CHECK(normalize(F(f.q, f.p, f.r, f.s)) == n);
    }
}

TEST_CASE("normalize params keeps the fingerprint") {
    for (int p = -3; p <= 3; ++p)
        for (int q = -3; q <= 3; ++q)
            for (int r = -3; r <= 3; ++r)
                for (int s = -2; s <= 2; ++s) {
                    FamilyParams f{p, q, r, s};
                    CHECK(fingerprint(LinkClass::family(f)) == fingerprint(LinkClass::family(normalize(f))));
                }
}

TEST_CASE("link class grammar round trip") {
    for (const char* text : {"T(2,7)", "C(5,-2)", "K(3,3,1)", "T(2,3)#C(2,2)", "C(4,3)+O", "F(2,-3,4,1)", "O", "O+O"})
        CHECK(to_string(P(text)) == text);
    CHECK(P("T(2,3) # T(2,5)") == LinkClass::conn_sum(LinkClass::torus(3), LinkClass::torus(5)));
    CHECK_THROWS_AS(P("T(3,3)"), ParseError);
    CHECK_THROWS_AS(P("C(1)"), ParseError);
    CHECK_THROWS_AS(P("K(1,2,3"), ParseError);
    CHECK_THROWS_AS(P("X"), ParseError);
}

TEST_CASE("link class degenerate rewrites") {
    CHECK(normalize(LinkClass::torus(1)) == LinkClass::unknot());
    CHECK(normalize(LinkClass::torus(-1)) == LinkClass::unknot());
    CHECK(normalize(LinkClass::torus(0)) == LinkClass::unlink2());
    CHECK(normalize(LinkClass::clasp(0, 5)) == LinkClass::unknot());
    CHECK(to_string(normalize(LinkClass::clasp(1, 4))) == "T(2,3)");
    CHECK(to_string(normalize(LinkClass::clasp(2, 3))) == "C(3,2)");
    CHECK(to_string(normalize(LinkClass::pretzel(1, 3, 1))) == "K(3,1,1)");
    CHECK(to_string(normalize(P("T(2,-7)"))) == "T(2,7)");
    CHECK(to_string(normalize(P("C(-5,2)"))) == "C(5,-2)");
    CHECK(to_string(normalize(P("K(-3,-3,-1)"))) == "K(3,3,1)");
    CHECK(to_string(normalize(P("T(2,5)#O"))) == "T(2,5)");
}

TEST_CASE("link class normalization keeps the fingerprint") {
    for (int a = -4; a <= 4; ++a)
        for (int b = -4; b <= 4; ++b) {
            auto c = LinkClass::clasp(a, b);
            CHECK(fingerprint(normalize(c)) == fingerprint(c));
            for (int x = -2; x <= 2; ++x) {
                auto k = LinkClass::pretzel(a, b, x);
                CHECK(fingerprint(normalize(k)) == fingerprint(k));
            }
        }
}

TEST_CASE("clasp to pretzel") {
    auto [a, b] = clasp_to_pretzel(3, 2);
    CHECK(a == LinkClass::pretzel(4, -1, 3));
    CHECK(b == LinkClass::pretzel(2, 1, 1));
    CHECK(clasp_to_pretzel(2, -2).first == LinkClass::pretzel(3, -1, -1));
    CHECK(clasp_to_pretzel(2, -2).second == LinkClass::pretzel(1, 1, -3));
    CHECK(clasp_to_pretzel(-3, -4).first == LinkClass::pretzel(-2, -1, -3));
    CHECK(clasp_to_pretzel(-3, -4).second == LinkClass::pretzel(-4, 1, -5));
    CHECK_THROWS_AS(clasp_to_pretzel(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(clasp_to_pretzel(3, -1), std::invalid_argument);
}

TEST_CASE("clasp to pretzel keeps the fingerprint") {
    for (int r = -5; r <= 5; ++r)
        for (int s = -5; s <= 5; ++s) {
            if (std::abs(r) < 2 || std::abs(s) < 2) continue;
            auto fp = fingerprint(LinkClass::clasp(r, s));
            auto [a, b] = clasp_to_pretzel(r, s);
            CHECK(fingerprint(a) == fp);
            CHECK(fingerprint(b) == fp);
        }
}

TEST_CASE("subfamily examples") {
    CHECK(to_string(subfamily_of(normalize(F(2, 3, 0, 5)))) == "T(2,5)");
    CHECK(to_string(subfamily_of(F(0, 0, 4, 3))) == "C(4,3)+O");
    CHECK(to_string(subfamily_of(F(1, -1, 5, 0))) == "T(2,5)");
}

TEST_CASE("subfamily keeps the fingerprint") {
    for (int p = -4; p <= 4; ++p)
        for (int q = -4; q <= 4; ++q)
            for (int r = 0; r <= 4; ++r)
                for (int s = -4; s <= 4; ++s) {
                    FamilyParams f{p, q, r, s};
                    if (!is_normalized(f)) continue;
                    INFO("F(" << p << "," << q << "," << r << "," << s << ")");
                    CHECK(fingerprint(LinkClass::family(f)) == fingerprint(subfamily_of(f)));
                }
}

TEST_CASE("component counts") {
    CHECK(component_count(LinkClass::torus(7)) == 1);
    CHECK(component_count(LinkClass::torus(6)) == 2);
    CHECK(component_count(LinkClass::unlink2()) == 2);
    auto c = LinkClass::clasp(4, 3);
    CHECK(component_count(LinkClass::plus_trivial(c)) == component_count(c) + 1);
    CHECK(component_count(c) == build_diagram(c).component_count());
    CHECK(component_count(P("T(2,2)#T(2,4)")) == 3);
    CHECK(component_count(P("K(2,2,2)")) == 3);
    CHECK(component_count(P("K(3,3,1)")) == 1);
}
