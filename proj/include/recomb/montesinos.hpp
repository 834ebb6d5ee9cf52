#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "recomb/diagram.hpp"
#include "recomb/family.hpp"
#include "recomb/tangle.hpp"

namespace recomb {

// Reduced fraction num/den with den >= 0; 1/0 is the infinity tangle.
struct Fraction {
    long num = 0;
    long den = 1;
    static Fraction make(long num, long den);
    bool is_infinite() const { return den == 0; }
    bool is_integer() const { return den == 1; }
    friend auto operator<=>(const Fraction&, const Fraction&) = default;
};

// Sum of the regular continued fraction quotients of a/b (a, b > 0).
long cf_sum(long a, long b);

// A prime piece: the two-bridge link N(alpha/beta) with 0 < beta < alpha, or the
// Montesinos link N(e + r_1 + ... + r_k) with k >= 3 and every r_i in (0,1).
struct PrimeSummand {
    bool montesinos = false;
    long alpha = 0;
    long beta = 0;
    long e = 0;
    std::vector<Fraction> r;

    int crossing_number() const;
    PrimeSummand mirrored() const;
    // Equal keys mean isotopic summands (chirality kept).
    std::vector<long> chiral_key() const;
};

// Connected sum of prime summands plus split trivial components.
struct Shape {
    std::vector<PrimeSummand> summands;
    int loops = 0;

    int crossing_number() const;
    int component_count() const;
    bool is_two_bridge() const { return summands.size() == 1 && !summands[0].montesinos && loops == 0; }
    bool is_prime_montesinos() const { return summands.size() == 1 && summands[0].montesinos && loops == 0; }
    Shape mirrored() const;
    // Equal keys mean isotopic links up to mirror image.
    std::vector<long> key() const;
};

// Numerator closure of the tangle sum t_1 + ... + t_k.
Shape shape_of_sum(const std::vector<Fraction>& tangles);
Shape shape_of(const LinkClass& lc);
std::vector<Fraction> family_fractions(const FamilyParams& f);

// Minimal diagrams: alternating two-bridge pieces and reduced Montesinos arrangements.
template <class Alg>
typename Alg::Tangle summand_tangle(Alg& a, const PrimeSummand& s) {
    if (!s.montesinos) return rational(a, s.alpha, s.beta);
    const long k = static_cast<long>(s.r.size());
    const long converted = s.e >= 0 ? 0 : std::min(k, -s.e);
    auto t = a.zero();
    for (long i = 0; i < k; ++i) {
        const auto& x = s.r[i];
        bool neg = i >= k - converted;
        t = a.add(std::move(t), neg ? rational(a, x.num - x.den, x.den) : rational(a, x.num, x.den));
    }
    long twist = s.e >= 0 ? s.e : (s.e < -k ? s.e + k : 0);
    return a.add(std::move(t), horizontal(a, static_cast<int>(twist)));
}

template <class Alg>
typename Alg::Tangle shape_tangle(Alg& a, const Shape& sh) {
    if (sh.summands.empty()) return a.infinity();
    auto t = summand_tangle(a, sh.summands[0]);
    for (std::size_t i = 1; i < sh.summands.size(); ++i) t = a.mul(std::move(t), summand_tangle(a, sh.summands[i]));
    return t;
}

LinkDiagram minimal_diagram(const Shape& sh);

// Rows of the Hara-Yamamoto case: p, q < -2, s = 1, r > 2.
bool is_hara_yamamoto(const FamilyParams& f);
template <class Alg>
typename Alg::Tangle hara_yamamoto_tangle(Alg& a, const FamilyParams& f) {
    const long p = -f.p, q = -f.q, r = f.r;
    auto t = a.add(rational(a, 1, p), rational(a, -(q - 1), q));
    return a.add(std::move(t), rational(a, -1, r - 1));
}
LinkDiagram hara_yamamoto_diagram(const FamilyParams& f);
// The cut row replaced by the 0 and infinity tangles.
std::pair<LinkDiagram, LinkDiagram> hara_yamamoto_resealings(const FamilyParams& f);

// Structural hypotheses for a reduced Montesinos diagram: k >= 3 rational tangles,
// none integral, each reduced alternating with its bottom arcs crossing.
bool satisfies_montesinos_hypotheses(const PrimeSummand& s);

}  // namespace recomb
