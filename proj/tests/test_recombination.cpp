#include "doctest.h"

#include <set>

#include "recomb/errors.hpp"
#include "recomb/mcn_table.hpp"
#include "recomb/recombination.hpp"
#include "recomb/reference_table.hpp"

using namespace recomb;

namespace {
std::vector<std::string> patterns(const Substrate& s, const Recombinase& r) {
    std::vector<std::string> out;
    for (const auto& p : predict_products(s, r).patterns) out.push_back(p.pattern);
    return out;
}
}  // namespace

TEST_CASE("substrate and recombinase parsing") {
    CHECK(Substrate::parse("unknot").kind == Substrate::Kind::Unknot);
    CHECK(Substrate::parse("unlink").kind == Substrate::Kind::Unlink);
    auto t = Substrate::parse("T(2,5)");
    CHECK(t.kind == Substrate::Kind::Torus2);
    CHECK(t.m == 5);
    CHECK(t.to_string() == "T(2,5)");
    CHECK_THROWS_AS(Substrate::parse("T(2,0)"), std::invalid_argument);
    CHECK_THROWS_AS(Substrate::parse("trefoil"), std::invalid_argument);
    CHECK_THROWS_AS(Substrate::torus2(0), std::invalid_argument);
    CHECK(Recombinase::parse("serine", 3).rounds == 3);
    CHECK(Recombinase::parse("tyrosine").family == Recombinase::Family::Tyrosine);
    CHECK_THROWS_AS(Recombinase::parse("tyrosine", 2), std::invalid_argument);
    CHECK_THROWS_AS(Recombinase::parse("serine", 0), std::invalid_argument);
    CHECK_THROWS_AS(Recombinase::parse("cre"), std::invalid_argument);
}

TEST_CASE("product patterns") {
    CHECK(patterns(Substrate::unknot(), Recombinase::serine()) == std::vector<std::string>{"T(2,n)", "C(p,q)"});
    CHECK(patterns(Substrate::unknot(), Recombinase::tyrosine()) == std::vector<std::string>{"T(2,n)", "C(2,n)"});
    CHECK(patterns(Substrate::unlink(), Recombinase::serine()) == std::vector<std::string>{"T(2,n)"});
    CHECK(patterns(Substrate::unlink(), Recombinase::tyrosine()) == std::vector<std::string>{"T(2,2)"});
    auto torus = predict_products(Substrate::torus2(4), Recombinase::tyrosine());
    REQUIRE(torus.patterns.size() == 2);
    CHECK(torus.patterns[0].constraint.empty());
    CHECK(torus.patterns[1].constraint == "p+q=4");
    CHECK(torus.patterns[1].admits({1, 3, 2, 5}, Substrate::torus2(4)));
    CHECK_FALSE(torus.patterns[1].admits({1, 2, 2, 5}, Substrate::torus2(4)));
    CHECK(torus.patterns[0].admits({1, 2, 2, 5}, Substrate::torus2(4)));
    auto serine = predict_products(Substrate::torus2(3), Recombinase::serine(2));
    CHECK(serine.notes.size() == 2);
}

TEST_CASE("patterns are family members") {
    for (auto sub : {Substrate::unknot(), Substrate::unlink()})
        for (auto rec : {Recombinase::serine(), Recombinase::tyrosine()})
            for (const auto& pat : predict_products(sub, rec).patterns)
                for (int a = -4; a <= 4; ++a)
                    for (int b = -4; b <= 4; ++b) {
                        std::vector<int> v;
                        if (pat.variables.size() >= 1) v.push_back(a);
                        if (pat.variables.size() >= 2) v.push_back(b);
                        if (pat.variables.size() == 1 && b != 0) continue;
                        if (pat.variables.empty() && (a != 0 || b != 0)) continue;
                        INFO(pat.pattern << " " << a << " " << b);
                        CHECK(fingerprint(LinkClass::family(pat.family_member(v))) ==
                              fingerprint(pat.instantiate(v)));
                    }
}

TEST_CASE("theorem products") {
    CHECK(theorem_mcn_products(1).size() == 1);
    for (int m = 2; m <= 9; ++m) {
        auto products = theorem_mcn_products(m);
        CHECK(products.size() == static_cast<std::size_t>(2 + (m - 1) - (m + 1) / 2 + 1));
        for (const auto& lc : products) {
            INFO(to_string(lc));
            CHECK(crossing_number(lc) == m + 1);
        }
    }
}

TEST_CASE("xer products") {
    auto names = [](int n) {
        std::set<std::string> out;
        for (const auto& p : xer_application(n, true)) out.insert(p.name.value_or("?"));
        return out;
    };
    CHECK(names(7) == std::set<std::string>{"7_1", "7_2", "7_4"});
    CHECK(names(9) == std::set<std::string>{"9_1", "9_2", "9_5"});
    CHECK(names(2) == std::set<std::string>{"4_1"});
    auto all = xer_application(7, false);
    CHECK(all.size() >= 3);
    for (const auto& p : xer_application(9, true)) CHECK(p.fp.components == 1);
}
