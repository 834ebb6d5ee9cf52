#include "doctest.h"

#include "recomb/laurent.hpp"

using recomb::LaurentPoly;

TEST_CASE("laurent arithmetic") {
    auto a = LaurentPoly::from_terms({{-2, 1}, {0, 3}});
    auto b = LaurentPoly::from_terms({{2, -1}, {0, 1}});
    CHECK((a + b) == LaurentPoly::from_terms({{-2, 1}, {0, 4}, {2, -1}}));
    CHECK((a - a).is_zero());
    CHECK((a * b) == LaurentPoly::from_terms({{-2, 1}, {0, 2}, {2, -3}}));
    CHECK(a.coef(0) == 3);
    CHECK(a.coef(7) == 0);
}

TEST_CASE("laurent zero terms are dropped") {
    LaurentPoly p;
    p.add_term(3, 2);
    p.add_term(3, -2);
    CHECK(p.is_zero());
    CHECK(p.span() == 0);
}

TEST_CASE("laurent mirror shift scale") {
    auto p = LaurentPoly::from_terms({{-4, 1}, {4, -2}});
    CHECK(p.mirrored() == LaurentPoly::from_terms({{4, 1}, {-4, -2}}));
    CHECK(p.shifted(4).min_exponent() == 0);
    CHECK(p.scaled(-3).coef(4) == 6);
    CHECK(p.span() == 8);
}

TEST_CASE("laurent ordering and printing") {
    auto a = LaurentPoly::monomial(1);
    auto b = LaurentPoly::monomial(2);
    CHECK(a < b);
    CHECK(a != b);
    CHECK(LaurentPoly::from_terms({{-1, -1}, {2, 3}}).to_string("t") == "3*t^2 - t^-1");
    CHECK(LaurentPoly().to_string() == "0");
}
