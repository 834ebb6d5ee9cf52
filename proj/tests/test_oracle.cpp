#include "doctest.h"

#include <random>

#include "recomb/errors.hpp"
#include "recomb/family.hpp"
#include "recomb/invariants.hpp"
#include "recomb/montesinos.hpp"

using namespace recomb;

namespace {
LinkDiagram D(const char* text) { return build_diagram(parse_link_class(text)); }
LaurentPoly J(std::vector<std::pair<int, std::int64_t>> t) { return LaurentPoly::from_terms(t); }

std::vector<LinkDiagram> sample_diagrams() {
    std::vector<LinkDiagram> out;
    for (const char* text : {"T(2,3)", "T(2,8)", "C(5,-2)", "K(3,3,1)", "K(5,3,1)", "C(4,3)+O", "T(2,3)#C(4,-3)",
                             "F(2,-3,4,1)", "F(-3,-3,4,1)", "F(3,2,5,-4)", "K(5,4,-3)"})
        out.push_back(D(text));
    std::mt19937_64 rng(5);
    auto big = D("K(5,5,3)");
    insert_bigon(big, rng);
    out.push_back(big);
    return out;
}
}  // namespace

TEST_CASE("jones of small links") {
    CHECK(jones(D("O")) == LaurentPoly::monomial(0));
    auto trefoil = jones(D("T(2,3)"));
    bool right = trefoil == J({{4, 1}, {12, 1}, {16, -1}});
    bool left = trefoil == J({{-4, 1}, {-12, 1}, {-16, -1}});
    CHECK((right || left));
    CHECK(jones(D("K(2,1,1)")) == J({{-8, 1}, {-4, -1}, {0, 1}, {4, -1}, {8, 1}}));
    CHECK(kauffman_bracket(D("O+O")) == J({{2, -1}, {-2, -1}}));
    auto hopf = kauffman_bracket(D("T(2,2)"));
    CHECK(((hopf == J({{4, -1}, {-4, -1}}))));
}

TEST_CASE("oracle errors") {
    CHECK_THROWS_AS(kauffman_bracket(LinkDiagram{}), InvariantError);
    auto big = D("T(2,25)");
    CHECK_THROWS_AS(kauffman_bracket(big), SizeError);
    CHECK_THROWS_AS(fingerprint(big), SizeError);
}

TEST_CASE("fingerprint identifies mirrors and orientations") {
    for (const char* text : {"T(2,3)", "T(2,4)", "C(5,-2)", "K(3,3,1)", "T(2,2)#T(2,4)", "F(2,-3,4,1)"}) {
        auto d = D(text);
        INFO(text);
        CHECK(fingerprint(d.mirrored()) == fingerprint(d));
    }
    CHECK(fingerprint(D("T(2,3)")) != fingerprint(D("K(2,1,1)")));
    CHECK(fingerprint(D("T(2,4)")).components == 2);
}

TEST_CASE("simd kernels match the scalar kernel") {
    for (Kernel k : {Kernel::Avx2, Kernel::Neon}) {
        if (!kernel_available(k)) continue;
        INFO(kernel_name(k));
        for (const auto& d : sample_diagrams()) {
            CHECK(state_histogram(d, k) == state_histogram(d, Kernel::Scalar));
            std::uint64_t n = std::uint64_t{1} << d.crossing_count();
            CHECK(state_histogram(d, k, 3, n - 5) == state_histogram(d, Kernel::Scalar, 3, n - 5));
            OracleOptions o{k, 1};
            CHECK(fingerprint(d, o) == fingerprint(d, OracleOptions{Kernel::Scalar, 1}));
        }
    }
    CHECK(kernel_available(Kernel::Scalar));
    CHECK(kernel_available(best_kernel()));
}

TEST_CASE("threaded state sum matches") {
    auto d = D("K(7,5,3)");
    CHECK(state_histogram(d, Kernel::Scalar, 4) == state_histogram(d, Kernel::Scalar, 1));
    CHECK(state_histogram(d, best_kernel(), 3) == state_histogram(d, Kernel::Scalar, 1));
}

TEST_CASE("reidemeister moves keep the fingerprint") {
    std::mt19937_64 rng(99);
    const char* names[] = {"T(2,3)", "T(2,6)", "C(5,-2)", "K(3,3,1)", "C(4,3)+O", "T(2,3)#T(2,2)", "F(2,-3,4,1)"};
    for (int t = 0; t < 100; ++t) {
        auto base = D(names[t % 7]);
        auto d = base;
        for (int k = 0; k < 3; ++k) {
            if (rng() % 2) insert_kink(d, rng);
            else insert_bigon(d, rng);
        }
        REQUIRE(d.is_valid());
        CHECK(fingerprint(d) == fingerprint(base));
    }
}

TEST_CASE("bracket is multiplicative under connected sum") {
    const char* names[] = {"T(2,3)", "T(2,2)", "C(5,-2)", "K(3,3,1)", "T(2,-5)"};
    for (auto a : names)
        for (auto b : names) {
            auto x = D(a), y = D(b);
            auto xy = connected_sum(x, y);
            CHECK(kauffman_bracket(xy) == kauffman_bracket(x) * kauffman_bracket(y));
            if (x.component_count() == 1 && y.component_count() == 1) CHECK(jones(xy) == jones(x) * jones(y));
        }
}

TEST_CASE("jones at t = 1") {
    for (const char* text : {"T(2,3)", "T(2,4)", "K(2,2,2)", "C(4,3)+O", "F(3,2,5,-4)"}) {
        auto d = D(text);
        auto v = jones(d);
        std::int64_t at_one = 0;
        for (auto [e, c] : v.terms()) at_one += c;
        INFO(text);
        CHECK(std::abs(at_one) == (std::int64_t{1} << (d.component_count() - 1)));
    }
}
