#include "doctest.h"

#include <algorithm>
#include <set>

#include "recomb/enumerator.hpp"
#include "recomb/errors.hpp"
#include "recomb/reference_table.hpp"

using namespace recomb;

namespace {

const SweepResult& sweep16() {
    static const SweepResult s = sweep_family(kMaxEnumerationMcn);
    return s;
}

std::set<std::string> names_at(int n) {
    std::set<std::string> out;
    for (const auto& fp : sweep16().distinct.at(n))
        if (auto name = identify(fp, n)) out.insert(*name);
    return out;
}

}  // namespace

TEST_CASE("frozen counts") {
    const std::map<int, std::uint64_t> distinct{{2, 2},   {3, 2},   {4, 5},   {5, 7},    {6, 16},
                                                {7, 26},  {8, 50},  {9, 85},  {10, 143}, {11, 216},
                                                {12, 325}, {13, 458}, {14, 631}, {15, 841}, {16, 1096}};
    const std::map<int, std::uint64_t> raw{{2, 89},    {3, 110},   {4, 163},   {5, 218},   {6, 309},
                                           {7, 410},   {8, 555},   {9, 718},   {10, 933},  {11, 1174},
                                           {12, 1475}, {13, 1810}, {14, 2213}, {15, 2658}, {16, 3179}};
    auto rows = count_report(sweep16());
    REQUIRE(rows.size() == 15);
    for (const auto& r : rows) {
        INFO("n = " << r.n);
        CHECK(r.distinct == distinct.at(r.n));
        CHECK(r.raw_tuples == raw.at(r.n));
        CHECK(r.bound == 96ull * r.n * r.n * r.n);
        CHECK(r.ratio == boost::rational<std::int64_t>(r.distinct, std::int64_t(r.n) * r.n * r.n));
        CHECK(r.distinct <= sweep16().distinct_shapes.at(r.n));
    }
}

TEST_CASE("known members appear at their crossing number") {
    CHECK(names_at(3).count("3_1"));
    CHECK(names_at(4).count("4_1"));
    auto seven = names_at(7);
    for (const char* k : {"7_1", "7_2", "7_4"}) CHECK(seven.count(k));
    auto nine = names_at(9);
    for (const char* k : {"9_1", "9_2", "9_5"}) CHECK(nine.count(k));
}

TEST_CASE("certified collisions are recorded") {
    auto has = [](const char* a, const char* b) {
        auto x = normalize(parse_link_class(a)), y = normalize(parse_link_class(b));
        for (const auto& c : sweep16().collisions) {
            auto f = normalize(c.first), s = normalize(c.second);
            if ((f == x && s == y) || (f == y && s == x)) return true;
        }
        return false;
    };
    CHECK_FALSE(sweep16().collisions.empty());
    CHECK(has("K(5,4,-3)", "K(5,3,-1)"));
    CHECK(has("T(2,5)", "F(2,-3,2,-3)"));
}

TEST_CASE("slack closure") {
    EnumerationOptions wide;
    wide.slack = 8;
    auto a = sweep_family(10);
    auto b = sweep_family(10, wide);
    for (int n = 2; n <= 10; ++n) {
        INFO("n = " << n);
        CHECK(a.distinct.at(n) == b.distinct.at(n));
    }
}

TEST_CASE("thread count does not change the result") {
    EnumerationOptions one;
    one.threads = 1;
    EnumerationOptions four;
    four.threads = 4;
    auto a = sweep_family(11, one);
    auto b = sweep_family(11, four);
    CHECK(a.distinct == b.distinct);
    CHECK(a.raw_tuples == b.raw_tuples);
}

TEST_CASE("growth") {
    auto rows = count_report(sweep16());
    auto c = cubic_fit(rows, 8, 16);
    CHECK(c[3] > 0);
    CHECK(ratio_spread(rows, 10, 16) <= 4);
    auto csv = count_report_csv(rows);
    CHECK(csv.rfind("n,raw_tuples,distinct,bound,ratio_num,ratio_den\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 16);
}

TEST_CASE("enumeration limits") {
    CHECK_THROWS_AS(sweep_family(kMaxEnumerationMcn + 1), SizeError);
    CHECK(enumerate_mcn(2).size() == 2);
}
