#include "recomb/montesinos.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <tuple>

#include "recomb/errors.hpp"

namespace recomb {

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

// x with a*x = 1 mod m, gcd(a, m) = 1.
long inverse_mod(long a, long m) {
    long g0 = m, g1 = mod(a, m), x0 = 0, x1 = 1;
    while (g1 != 0) {
        long q = g0 / g1;
        std::tie(g0, g1) = std::make_tuple(g1, g0 - q * g1);
        std::tie(x0, x1) = std::make_tuple(x1, x0 - q * x1);
    }
    return mod(x0, m);
}

// Solutions of a*x + b*y = gcd(a, b).
long ext_gcd(long a, long b, long& x, long& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    long x1, y1;
    long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

void add_two_bridge(Shape& sh, long num, long den) {
    long alpha = std::labs(num);
    if (alpha == 0) {
        ++sh.loops;
        return;
    }
    if (alpha == 1) return;
    if (num < 0) den = -den;
    PrimeSummand s;
    s.alpha = alpha;
    s.beta = mod(den, alpha);
    sh.summands.push_back(s);
}

}  // namespace

Fraction Fraction::make(long num, long den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (den == 0) return {1, 0};
    long g = std::gcd(std::labs(num), den);
    return {num / g, den / g};
}

long cf_sum(long a, long b) {
    long s = 0;
    while (b != 0) {
        s += a / b;
        a %= b;
        std::swap(a, b);
    }
    return s;
}

int PrimeSummand::crossing_number() const {
    if (!montesinos) return static_cast<int>(cf_sum(alpha, beta));
    long total = 0;
    for (const auto& x : r) total += cf_sum(x.num, x.den);
    const long k = static_cast<long>(r.size());
    if (e >= 0) return static_cast<int>(total + e);
    return static_cast<int>(total + std::max(0L, -e - k));
}

PrimeSummand PrimeSummand::mirrored() const {
    PrimeSummand m = *this;
    if (!montesinos) {
        m.beta = alpha - beta;
        return m;
    }
    m.e = -e - static_cast<long>(r.size());
    for (auto& x : m.r) x = Fraction::make(x.den - x.num, x.den);
    return m;
}

std::vector<long> PrimeSummand::chiral_key() const {
    if (!montesinos) return {0, alpha, std::min(beta, inverse_mod(beta, alpha))};
    const std::size_t k = r.size();
    std::vector<long> best;
    for (int dir = 0; dir < 2; ++dir)
        for (std::size_t start = 0; start < k; ++start) {
            std::vector<long> key{1, e, static_cast<long>(k)};
            for (std::size_t i = 0; i < k; ++i) {
                std::size_t j = dir == 0 ? (start + i) % k : (start + k - i) % k;
                key.push_back(r[j].num);
                key.push_back(r[j].den);
            }
            if (best.empty() || key < best) best = std::move(key);
        }
    return best;
}

int Shape::crossing_number() const {
    int n = 0;
    for (const auto& s : summands) n += s.crossing_number();
    return n;
}

int Shape::component_count() const { return minimal_diagram(*this).component_count(); }

Shape Shape::mirrored() const {
    Shape m = *this;
    for (auto& s : m.summands) s = s.mirrored();
    return m;
}

std::vector<long> Shape::key() const {
    auto chiral = [](const Shape& sh) {
        std::vector<std::vector<long>> parts;
        for (const auto& s : sh.summands) parts.push_back(s.chiral_key());
        std::sort(parts.begin(), parts.end());
        std::vector<long> k{sh.loops, static_cast<long>(parts.size())};
        for (const auto& p : parts) {
            k.push_back(static_cast<long>(p.size()));
            k.insert(k.end(), p.begin(), p.end());
        }
        return k;
    };
    return std::min(chiral(*this), chiral(mirrored()));
}

Shape shape_of_sum(const std::vector<Fraction>& tangles) {
    Shape sh;
    std::vector<Fraction> finite;
    int infinities = 0;
    for (const auto& t : tangles) {
        if (t.is_infinite())
            ++infinities;
        else
            finite.push_back(t);
    }
    if (infinities > 0) {
        // N(inf + x_1 + ... ) splits into the denominator closures D(x_i) = N(-1/x_i).
        sh.loops = infinities - 1;
        for (const auto& x : finite) add_two_bridge(sh, -x.den, x.num);
        return sh;
    }
    long e = 0;
    std::vector<Fraction> frac;
    for (const auto& x : finite) {
        long f = floor_div(x.num, x.den);
        e += f;
        if (!x.is_integer()) frac.push_back(Fraction::make(x.num - f * x.den, x.den));
    }
    switch (frac.size()) {
        case 0: add_two_bridge(sh, e, 1); return sh;
        case 1: add_two_bridge(sh, frac[0].num + e * frac[0].den, frac[0].den); return sh;
        case 2: {
            long a = frac[0].num + e * frac[0].den, b = frac[0].den;
            long c = frac[1].num, d = frac[1].den;
            long x, y;
            long g = ext_gcd(a, b, x, y);
            // a*b' - a'*b = 1
            long bp = x * g, ap = -y * g;
            add_two_bridge(sh, a * d + b * c, ap * d + bp * c);
            return sh;
        }
        default: {
            PrimeSummand s;
            s.montesinos = true;
            s.e = e;
            s.r = frac;
            sh.summands.push_back(s);
            return sh;
        }
    }
}

std::vector<Fraction> family_fractions(const FamilyParams& f) {
    return {Fraction::make(-1, f.p), Fraction::make(-1, f.q), Fraction::make(f.r, 1L - static_cast<long>(f.r) * f.s)};
}

Shape shape_of(const LinkClass& lc) {
    using K = LinkClass::Kind;
    const auto& v = lc.params();
    switch (lc.kind()) {
        case K::Unknot: return {};
        case K::Unlink2: return {{}, 1};
        case K::Torus: return shape_of_sum({Fraction::make(v[0], 1)});
        case K::Clasp: return shape_of_sum({Fraction::make(1, v[0]), Fraction::make(-v[1], 1)});
        case K::Pretzel:
            return shape_of_sum({Fraction::make(1, v[0]), Fraction::make(1, v[1]), Fraction::make(1, v[2])});
        case K::Family: return shape_of_sum(family_fractions(lc.family_params()));
        case K::PlusTrivial: {
            Shape sh = shape_of(lc.parts()[0]);
            ++sh.loops;
            return sh;
        }
        case K::ConnSum: {
            Shape sh;
            for (const auto& p : lc.parts()) {
                Shape part = shape_of(p);
                sh.loops += part.loops;
                sh.summands.insert(sh.summands.end(), part.summands.begin(), part.summands.end());
            }
            return sh;
        }
    }
    return {};
}

LinkDiagram minimal_diagram(const Shape& sh) {
    PdAlgebra alg;
    auto t = shape_tangle(alg, sh);
    return alg.numerator(t, sh.loops);
}

bool is_hara_yamamoto(const FamilyParams& f) { return f.p < -2 && f.q < -2 && f.s == 1 && f.r > 2; }

LinkDiagram hara_yamamoto_diagram(const FamilyParams& f) {
    if (!is_hara_yamamoto(f)) throw InvariantError("not a Hara-Yamamoto member");
    PdAlgebra alg;
    auto t = hara_yamamoto_tangle(alg, f);
    return alg.numerator(t);
}

std::pair<LinkDiagram, LinkDiagram> hara_yamamoto_resealings(const FamilyParams& f) {
    if (!is_hara_yamamoto(f)) throw InvariantError("not a Hara-Yamamoto member");
    const long q = -f.q, r = f.r;
    auto build = [&](bool zero) {
        PdAlgebra alg;
        auto cut = zero ? alg.zero() : alg.infinity();
        auto t = alg.add(std::move(cut), rational(alg, -(q - 1), q));
        t = alg.add(std::move(t), rational(alg, -1, r - 1));
        return alg.numerator(t);
    };
    return {build(true), build(false)};
}

bool satisfies_montesinos_hypotheses(const PrimeSummand& s) {
    if (!s.montesinos || s.r.size() < 3) return false;
    const long k = static_cast<long>(s.r.size());
    const long converted = s.e >= 0 ? 0 : std::min(k, -s.e);
    for (long i = 0; i < k; ++i) {
        const auto& x = s.r[i];
        if (x.den <= 1 || x.num <= 0 || x.num >= x.den) return false;
        PdAlgebra alg;
        auto t = i >= k - converted ? rational(alg, x.num - x.den, x.den) : rational(alg, x.num, x.den);
        LinkDiagram closed = alg.denominator(t);
        if (!closed.is_alternating() || !closed.is_reduced()) return false;
        if (closed.crossing_count() != cf_sum(x.num, x.den)) return false;
    }
    return true;
}

}  // namespace recomb
