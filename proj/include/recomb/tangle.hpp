#pragma once

#include <array>
#include <cstdlib>
#include <numeric>
#include <utility>
#include <vector>

#include "recomb/diagram.hpp"
#include "recomb/family.hpp"

namespace recomb {

// Endpoints of a tangle, in the order NE, NW, SW, SE.
enum Corner { NE = 0, NW = 1, SW = 2, SE = 3 };

// Generic tangle constructions over any algebra providing
// crossing(sign), zero(), infinity(), add, mul, rotate, mirror.

template <class Alg>
typename Alg::Tangle horizontal(Alg& a, int n) {
    auto t = a.zero();
    for (int i = 0; i < std::abs(n); ++i) t = a.add(std::move(t), a.crossing(n > 0 ? 1 : -1));
    return t;
}

template <class Alg>
typename Alg::Tangle vertical(Alg& a, int n) {
    auto t = a.infinity();
    for (int i = 0; i < std::abs(n); ++i) t = a.mul(std::move(t), a.crossing(n > 0 ? 1 : -1));
    return t;
}

// Fraction x becomes 1/x.
template <class Alg>
typename Alg::Tangle invert(Alg& a, typename Alg::Tangle t) {
    return a.mirror(a.rotate(std::move(t)));
}

// Alternating rational tangle with fraction num/den built from the regular continued fraction.
template <class Alg>
typename Alg::Tangle rational(Alg& a, long num, long den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (den == 0) return a.infinity();
    if (num < 0) return a.mirror(rational(a, -num, den));
    long q = num / den;
    long rem = num - q * den;
    auto t = horizontal(a, static_cast<int>(q));
    if (rem == 0) return t;
    return a.add(std::move(t), invert(a, rational(a, den, rem)));
}

// Tangle whose numerator closure is the family member's row diagram.
template <class Alg>
typename Alg::Tangle family_tangle(Alg& a, const FamilyParams& f) {
    auto left = a.add(vertical(a, -f.p), vertical(a, -f.q));
    auto y = invert(a, a.add(vertical(a, f.r), horizontal(a, -f.s)));
    return a.add(std::move(left), std::move(y));
}

// Standard tangle of a link class; free trivial components are counted in loops.
template <class Alg>
typename Alg::Tangle class_tangle(Alg& a, const LinkClass& lc, int& loops) {
    using K = LinkClass::Kind;
    const auto& v = lc.params();
    switch (lc.kind()) {
        case K::Unknot: return a.infinity();
        case K::Unlink2: return a.zero();
        case K::Torus: return horizontal(a, v[0]);
        case K::Clasp: return a.add(vertical(a, v[0]), horizontal(a, -v[1]));
        case K::Pretzel: return a.add(a.add(vertical(a, v[0]), vertical(a, v[1])), vertical(a, v[2]));
        case K::Family: return family_tangle(a, lc.family_params());
        case K::PlusTrivial:
            ++loops;
            return class_tangle(a, lc.parts()[0], loops);
        case K::ConnSum: {
            auto t = class_tangle(a, lc.parts()[0], loops);
            for (std::size_t i = 1; i < lc.parts().size(); ++i)
                t = a.mul(std::move(t), class_tangle(a, lc.parts()[i], loops));
            return t;
        }
    }
    return a.infinity();
}

// Builds planar diagrams by gluing tangle endpoints in a union-find arena.
class PdAlgebra {
public:
    struct Tangle {
        std::array<int, 4> end{};
        std::vector<int> crossings;
    };

    Tangle crossing(int sign);
    Tangle zero();
    Tangle infinity();
    Tangle add(Tangle t, Tangle s);
    Tangle mul(Tangle t, Tangle s);
    Tangle rotate(Tangle t);
    Tangle mirror(Tangle t);

    LinkDiagram numerator(const Tangle& t, int extra_loops = 0);
    LinkDiagram denominator(const Tangle& t, int extra_loops = 0);

private:
    int point(bool on_crossing);
    int find(int x);
    void join(int a, int b);
    LinkDiagram finish(int extra_loops);

    struct Raw {
        std::array<int, 4> pts;
        int under;  // 0: slots NE/SW under, 1: slots NW/SE under
    };
    std::vector<int> parent_;
    std::vector<bool> on_crossing_;
    std::vector<Raw> raw_;
};

}  // namespace recomb
