#include "recomb/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "recomb/errors.hpp"
#include "recomb/tangle.hpp"

namespace recomb {

namespace {

using Point = GeoAlgebra::Point;
using Tangle = GeoAlgebra::Tangle;

constexpr double kGap = 0.5;
constexpr double kCap = 0.6;
constexpr double kScale = 40.0;
constexpr double kMargin = 1.0;
constexpr double kUnderGap = 0.16;

void transform(Tangle& t, auto&& f) {
    for (auto& s : t.strands)
        for (auto& p : s) p = f(p);
    for (auto& g : t.glyphs) {
        for (auto& p : g.over) p = f(p);
        for (auto& p : g.under) p = f(p);
    }
}

void shift(Tangle& t, double dx, double dy) {
    transform(t, [&](Point p) { return Point{p.x + dx, p.y + dy}; });
}

void absorb(Tangle& into, Tangle&& from) {
    for (auto& s : from.strands) into.strands.push_back(std::move(s));
    for (auto& g : from.glyphs) into.glyphs.push_back(g);
}

void segment(Tangle& t, Point a, Point b) { t.strands.push_back({a, b}); }

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

Tangle GeoAlgebra::crossing(int sign) {
    Tangle t{1, 1, {}, {}};
    std::array<Point, 2> rising{Point{0, 0}, Point{1, 1}};
    std::array<Point, 2> falling{Point{0, 1}, Point{1, 0}};
    t.glyphs.push_back(sign > 0 ? Glyph{rising, falling} : Glyph{falling, rising});
    return t;
}

Tangle GeoAlgebra::zero() {
    Tangle t{1, 1, {}, {}};
    t.strands.push_back({{0, 1}, {0.3, 0.72}, {0.7, 0.72}, {1, 1}});
    t.strands.push_back({{0, 0}, {0.3, 0.28}, {0.7, 0.28}, {1, 0}});
    return t;
}

Tangle GeoAlgebra::infinity() {
    Tangle t{1, 1, {}, {}};
    t.strands.push_back({{0, 1}, {0.28, 0.7}, {0.28, 0.3}, {0, 0}});
    t.strands.push_back({{1, 1}, {0.72, 0.7}, {0.72, 0.3}, {1, 0}});
    return t;
}

Tangle GeoAlgebra::add(Tangle t, Tangle s) {
    const double h = std::max(t.h, s.h);
    const double oyt = (h - t.h) / 2, oys = (h - s.h) / 2, oxs = t.w + kGap;
    const double w = oxs + s.w;
    const double wt = t.w, ht = t.h, hs = s.h;
    shift(t, 0, oyt);
    shift(s, oxs, oys);
    Tangle out{w, h, {}, {}};
    absorb(out, std::move(t));
    absorb(out, std::move(s));
    segment(out, {wt, oyt + ht}, {oxs, oys + hs});
    segment(out, {wt, oyt}, {oxs, oys});
    segment(out, {0, oyt + ht}, {0, h});
    segment(out, {0, oyt}, {0, 0});
    segment(out, {w, oys + hs}, {w, h});
    segment(out, {w, oys}, {w, 0});
    return out;
}

Tangle GeoAlgebra::mul(Tangle t, Tangle s) {
    const double w = std::max(t.w, s.w);
    const double oxt = (w - t.w) / 2, oxs = (w - s.w) / 2, oyt = s.h + kGap;
    const double h = oyt + t.h;
    const double wt = t.w, ws = s.w, hs = s.h;
    shift(t, oxt, oyt);
    shift(s, oxs, 0);
    Tangle out{w, h, {}, {}};
    absorb(out, std::move(t));
    absorb(out, std::move(s));
    segment(out, {oxt, oyt}, {oxs, hs});
    segment(out, {oxt + wt, oyt}, {oxs + ws, hs});
    segment(out, {oxt, h}, {0, h});
    segment(out, {oxt + wt, h}, {w, h});
    segment(out, {oxs, 0}, {0, 0});
    segment(out, {oxs + ws, 0}, {w, 0});
    return out;
}

Tangle GeoAlgebra::rotate(Tangle t) {
    const double h = t.h;
    transform(t, [&](Point p) { return Point{h - p.y, p.x}; });
    std::swap(t.w, t.h);
    return t;
}

Tangle GeoAlgebra::mirror(Tangle t) {
    for (auto& g : t.glyphs) std::swap(g.over, g.under);
    return t;
}

std::string GeoAlgebra::numerator_svg(const Tangle& t, int extra_loops) const {
    Tangle c = t;
    segment(c, {0, c.h}, {0, c.h + kCap});
    segment(c, {0, c.h + kCap}, {c.w, c.h + kCap});
    segment(c, {c.w, c.h + kCap}, {c.w, c.h});
    segment(c, {0, 0}, {0, -kCap});
    segment(c, {0, -kCap}, {c.w, -kCap});
    segment(c, {c.w, -kCap}, {c.w, 0});

    const double loop_r = 0.5;
    const double width = c.w + extra_loops * (2 * loop_r + kGap) + 2 * kMargin;
    const double height = c.h + 2 * kCap + 2 * kMargin;
    auto X = [&](double x) { return num((x + kMargin) * kScale); };
    auto Y = [&](double y) { return num((c.h + kCap + kMargin - y) * kScale); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width * kScale) << "\" height=\""
       << num(height * kScale) << "\" viewBox=\"0 0 " << num(width * kScale) << ' ' << num(height * kScale)
       << "\">\n";
    os << "<g fill=\"none\" stroke=\"black\" stroke-width=\"3\" stroke-linecap=\"round\" stroke-linejoin=\"round\">\n";
    for (const auto& s : c.strands) {
        os << "<polyline class=\"strand\" points=\"";
        for (std::size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << X(s[i].x) << ',' << Y(s[i].y);
        os << "\"/>\n";
    }
    for (const auto& g : c.glyphs) {
        auto [a, b] = g.under;
        double dx = b.x - a.x, dy = b.y - a.y, len = std::hypot(dx, dy);
        Point mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
        Point u{dx / len * kUnderGap, dy / len * kUnderGap};
        os << "<g class=\"crossing\">";
        os << "<line x1=\"" << X(g.over[0].x) << "\" y1=\"" << Y(g.over[0].y) << "\" x2=\"" << X(g.over[1].x)
           << "\" y2=\"" << Y(g.over[1].y) << "\"/>";
        os << "<line x1=\"" << X(a.x) << "\" y1=\"" << Y(a.y) << "\" x2=\"" << X(mid.x - u.x) << "\" y2=\""
           << Y(mid.y - u.y) << "\"/>";
        os << "<line x1=\"" << X(mid.x + u.x) << "\" y1=\"" << Y(mid.y + u.y) << "\" x2=\"" << X(b.x) << "\" y2=\""
           << Y(b.y) << "\"/>";
        os << "</g>\n";
    }
    for (int i = 0; i < extra_loops; ++i) {
        double cx = c.w + kGap + loop_r + i * (2 * loop_r + kGap);
        os << "<circle class=\"strand\" cx=\"" << X(cx) << "\" cy=\"" << Y(c.h / 2) << "\" r=\""
           << num(loop_r * kScale) << "\"/>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

std::string family_svg(const FamilyParams& f) {
    if (f.raw_crossings() > kMaxSvgCrossings)
        throw SizeError("svg export is limited to " + std::to_string(kMaxSvgCrossings) + " crossings");
    GeoAlgebra a;
    return a.numerator_svg(family_tangle(a, f));
}

std::string link_class_svg(const LinkClass& lc) {
    if (standard_crossings(lc) > kMaxSvgCrossings)
        throw SizeError("svg export is limited to " + std::to_string(kMaxSvgCrossings) + " crossings");
    GeoAlgebra a;
    int loops = 0;
    auto t = class_tangle(a, lc, loops);
    return a.numerator_svg(t, loops);
}

}  // namespace recomb
