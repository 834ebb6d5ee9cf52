#include "doctest.h"

#include <set>

#include "recomb/errors.hpp"
#include "recomb/invariants.hpp"
#include "recomb/mcn_table.hpp"
#include "recomb/montesinos.hpp"

using namespace recomb;

namespace {
MinimalForm mf_of(FamilyParams f) { return minimal_form(normalize(f)); }
}  // namespace

TEST_CASE("clasp mcn") {
    CHECK(mcn_clasp(2, 2) == 3);
    CHECK(mcn_clasp(3, -2) == 5);
    CHECK(mcn_clasp(-5, -4) == 8);
    CHECK_THROWS_AS(mcn_clasp(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(mcn_clasp(3, 0), std::invalid_argument);
}

TEST_CASE("case names and rows") {
    std::set<std::string_view> names;
    for (int i = 0; i < kCaseCount; ++i) {
        auto c = static_cast<CaseId>(i);
        CHECK(case_row(c) == i + 1);
        names.insert(case_name(c));
    }
    CHECK(names.size() == kCaseCount);
    CHECK(case_name(CaseId::HARA_YAMAMOTO) == "HARA_YAMAMOTO");
}

TEST_CASE("worked classifications") {
    auto a = mf_of({3, 3, 1, 0});
    CHECK(a.mcn == 3);
    CHECK(to_string(a.form) == "K(3,3,-1)");

    auto b = mf_of({0, 0, 5, -2});
    CHECK(b.case_id == CaseId::PQ_ZERO);
    CHECK(b.mcn == 7);
    CHECK(to_string(b.form) == "C(5,-2)+O");

    auto c = mf_of({2, -1, 2, 2});
    CHECK(c.kind == FormKind::Trivial);
    CHECK(c.mcn == 0);

    auto d = mf_of({3, 3, 1, 2});
    CHECK(d.mcn == 7);

    auto e = mf_of({-3, -3, 4, 1});
    CHECK(e.case_id == CaseId::HARA_YAMAMOTO);
    CHECK(e.kind == FormKind::HaraYamamoto);
    CHECK(e.mcn == 9);

    auto f = mf_of({5, 4, 1, -2});
    CHECK(f.mcn == 12);
    CHECK(shape_of(f.form).is_prime_montesinos());
}

TEST_CASE("every tuple matches a row whose guard holds") {
    std::set<CaseId> seen;
    for (int p = -6; p <= 6; ++p)
        for (int q = -6; q <= 6; ++q)
            for (int r = 0; r <= 6; ++r)
                for (int s = -6; s <= 6; ++s) {
                    FamilyParams f{p, q, r, s};
                    if (!is_normalized(f)) continue;
                    auto m = match_case(f);
                    seen.insert(m.id);
                    INFO(p << " " << q << " " << r << " " << s);
                    CHECK((m.swapped ? case_guard(m.id, q, p, r, s) : case_guard(m.id, p, q, r, s)));
                }
    CHECK(seen.size() == kCaseCount);
}

TEST_CASE("mcn is at most the raw crossing count") {
    for (int p = -5; p <= 5; ++p)
        for (int q = -5; q <= 5; ++q)
            for (int r = 0; r <= 5; ++r)
                for (int s = -5; s <= 5; ++s) {
                    FamilyParams f{p, q, r, s};
                    if (!is_normalized(f) || f.raw_crossings() > 10) continue;
                    auto m = minimal_form(f);
                    INFO(p << " " << q << " " << r << " " << s);
                    CHECK(m.mcn >= 0);
                    CHECK(m.mcn <= f.raw_crossings());
                    CHECK(m.strands_moved == strands_moved(m.case_id));
                    CHECK(component_count(m.form) == component_count(LinkClass::family(f)));
                }
}

TEST_CASE("minimal form diagrams agree with the member") {
    for (int p = -4; p <= 4; ++p)
        for (int q = -4; q <= 4; ++q)
            for (int r = 0; r <= 4; ++r)
                for (int s = -4; s <= 4; ++s) {
                    FamilyParams f{p, q, r, s};
                    if (!is_normalized(f) || f.raw_crossings() > 12) continue;
                    auto m = minimal_form(f);
                    auto d = minimal_form_diagram(f, m);
                    INFO(p << " " << q << " " << r << " " << s);
                    CHECK(d.crossing_count() == m.mcn);
                    CHECK(fingerprint(d) == fingerprint(LinkClass::family(f)));
                    if (m.kind == FormKind::ReducedAlternating) {
                        CHECK(d.is_alternating());
                        CHECK(d.is_reduced());
                    }
                }
}

TEST_CASE("mcn is mirror invariant") {
    for (int p = -4; p <= 4; ++p)
        for (int q = -4; q <= 4; ++q)
            for (int r = -4; r <= 4; ++r)
                for (int s = -4; s <= 4; ++s) {
                    FamilyParams f{p, q, r, s};
                    CHECK(mcn(normalize(f)) == mcn(normalize(mirror(f))));
                }
}
