#pragma once

#include <array>
#include <string>
#include <vector>

#include "recomb/family.hpp"

namespace recomb {

constexpr int kMaxSvgCrossings = 16;

// Lays tangles out on the plane; every tangle is a box with its ends on the box corners.
class GeoAlgebra {
public:
    struct Point {
        double x = 0, y = 0;
    };
    struct Glyph {
        std::array<Point, 2> over;
        std::array<Point, 2> under;
    };
    struct Tangle {
        double w = 0, h = 0;  // box [0,w] x [0,h], y up
        std::vector<std::vector<Point>> strands;
        std::vector<Glyph> glyphs;
    };

    Tangle crossing(int sign);
    Tangle zero();
    Tangle infinity();
    Tangle add(Tangle t, Tangle s);
    Tangle mul(Tangle t, Tangle s);
    Tangle rotate(Tangle t);
    Tangle mirror(Tangle t);

    // Numerator closure, drawn with extra free loops beside it.
    std::string numerator_svg(const Tangle& t, int extra_loops = 0) const;
};

// The row diagram of a family member; throws SizeError above kMaxSvgCrossings crossings.
std::string family_svg(const FamilyParams& f);
std::string link_class_svg(const LinkClass& lc);

}  // namespace recomb
