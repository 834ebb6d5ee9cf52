#include "doctest.h"

#include <string>

#include "recomb/errors.hpp"
#include "recomb/svg.hpp"

using namespace recomb;

namespace {
int count(const std::string& text, const std::string& needle) {
    int n = 0;
    for (auto i = text.find(needle); i != std::string::npos; i = text.find(needle, i + 1)) ++n;
    return n;
}
}  // namespace

TEST_CASE("family svg") {
    auto svg = family_svg({3, 3, 1, 0});
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(count(svg, "<g class=\"crossing\">") == 7);
    CHECK(count(svg, "<g class=\"crossing\">") == count(svg, "</g>") - 1);
    CHECK(count(family_svg({0, 0, 0, 0}), "class=\"crossing\"") == 0);
    CHECK(count(family_svg({-2, 5, 3, -4}), "class=\"crossing\"") == 14);
}

TEST_CASE("svg size limit") {
    CHECK_NOTHROW(family_svg({8, 8, 0, 0}));
    CHECK_THROWS_AS(family_svg({9, 9, 1, 0}), SizeError);
    CHECK_THROWS_AS(link_class_svg(LinkClass::torus(17)), SizeError);
}

TEST_CASE("link class svg") {
    auto svg = link_class_svg(parse_link_class("C(5,-2)+O"));
    CHECK(count(svg, "class=\"crossing\"") == 7);
    CHECK(count(svg, "<circle") == 1);
    CHECK(count(link_class_svg(LinkClass::conn_sum(LinkClass::torus(3), LinkClass::torus(-3))), "class=\"crossing\"") ==
          6);
}
