#include "recomb/recombination.hpp"

#include <algorithm>
#include <stdexcept>

#include "recomb/errors.hpp"
#include "recomb/reference_table.hpp"

namespace recomb {

Substrate Substrate::torus2(int m) {
    if (m < 1) throw std::invalid_argument("T(2,m) substrate needs m >= 1");
    return {Kind::Torus2, m};
}

Substrate Substrate::parse(std::string_view text) {
    if (text == "unknot") return unknot();
    if (text == "unlink") return unlink();
    LinkClass lc;
    try {
        lc = parse_link_class(text);
    } catch (const ParseError&) {
        throw ParseError("substrate must be unknot, unlink or T(2,m), got '" + std::string(text) + "'");
    }
    if (lc.kind() != LinkClass::Kind::Torus || lc.params()[0] < 1)
        throw ParseError("substrate must be unknot, unlink or T(2,m) with m >= 1, got '" + std::string(text) + "'");
    return torus2(lc.params()[0]);
}

std::string Substrate::to_string() const {
    switch (kind) {
        case Kind::Unknot: return "unknot";
        case Kind::Unlink: return "unlink";
        case Kind::Torus2: return "T(2," + std::to_string(m) + ")";
    }
    return {};
}

Recombinase Recombinase::serine(int rounds) {
    if (rounds < 1) throw std::invalid_argument("serine rounds must be >= 1");
    return {Family::Serine, rounds};
}

Recombinase Recombinase::parse(std::string_view text, std::optional<int> rounds) {
    if (text == "tyrosine") {
        if (rounds && *rounds != 1) throw ParseError("tyrosine recombinases act in a single round");
        return tyrosine();
    }
    if (text == "serine") {
        if (rounds && *rounds < 1) throw ParseError("rounds must be >= 1");
        return serine(rounds.value_or(1));
    }
    throw ParseError("recombinase must be serine or tyrosine, got '" + std::string(text) + "'");
}

std::string Recombinase::to_string() const { return family == Family::Serine ? "serine" : "tyrosine"; }

bool ProductPattern::admits(const std::vector<int>& v, const Substrate& sub) const {
    if (v.size() != variables.size()) return false;
    if (constraint.empty()) return true;
    return shape == Shape::Family && sub.kind == Substrate::Kind::Torus2 && v[0] + v[1] == sub.m;
}

FamilyParams ProductPattern::family_member(const std::vector<int>& v) const {
    if (v.size() != variables.size()) throw std::invalid_argument("wrong number of pattern parameters");
    switch (shape) {
        case Shape::Torus: return {v[0], 0, 0, 0};
        case Shape::Clasp2: return {1, 0, 2, v[0]};
        case Shape::Clasp: return {1, 0, v[0], v[1]};
        case Shape::Hopf: return {2, 0, 0, 0};
        case Shape::Family: return {v[0], v[1], v[2], v[3]};
    }
    return {};
}

LinkClass ProductPattern::instantiate(const std::vector<int>& v) const {
    if (v.size() != variables.size()) throw std::invalid_argument("wrong number of pattern parameters");
    switch (shape) {
        case Shape::Torus: return LinkClass::torus(v[0]);
        case Shape::Clasp2: return LinkClass::clasp(2, v[0]);
        case Shape::Clasp: return LinkClass::clasp(v[0], v[1]);
        case Shape::Hopf: return LinkClass::torus(2);
        case Shape::Family: return LinkClass::family({v[0], v[1], v[2], v[3]});
    }
    return {};
}

ProductPrediction predict_products(const Substrate& sub, const Recombinase& rec) {
    using S = ProductPattern::Shape;
    ProductPrediction out{sub, rec, {}, {}};
    const bool serine = rec.family == Recombinase::Family::Serine;
    const ProductPattern torus{S::Torus, "T(2,n)", {"n"}, "C1/C2", ""};
    switch (sub.kind) {
        case Substrate::Kind::Unknot:
            out.patterns.push_back(torus);
            if (serine)
                out.patterns.push_back({S::Clasp, "C(p,q)", {"p", "q"}, "C1/C2", ""});
            else
                out.patterns.push_back({S::Clasp2, "C(2,n)", {"n"}, "C1/C2", ""});
            break;
        case Substrate::Kind::Unlink:
            out.notes.push_back("an unlink substrate admits only the disjoint-disks complement form");
            if (serine)
                out.patterns.push_back({S::Torus, "T(2,n)", {"n"}, "disjoint disks", ""});
            else
                out.patterns.push_back({S::Hopf, "T(2,2)", {}, "disjoint disks", ""});
            break;
        case Substrate::Kind::Torus2: {
            const std::vector<std::string> vars{"p", "q", "r", "s"};
            out.patterns.push_back({S::Family, "F(p,q,r,s)", vars, "C2/C3", ""});
            out.patterns.push_back({S::Family, "F(p,q,r,s)", vars, "C4", "p+q=" + std::to_string(sub.m)});
            if (serine) out.notes.push_back("the C4 branch recombines through Form n1 only");
            break;
        }
    }
    if (serine)
        out.notes.push_back(std::to_string(rec.rounds) +
                            " processive round(s): one crossing row holds the rounds, possibly merged with one "
                            "pre-existing crossing");
    return out;
}

std::vector<LinkClass> theorem_mcn_products(int m) {
    if (m < 1) throw std::invalid_argument("theorem_mcn_products needs m >= 1");
    if (m == 1) return {LinkClass::pretzel(2, 1, 1)};
    std::vector<LinkClass> out{LinkClass::torus(m + 1), LinkClass::clasp(-2, m - 1)};
    for (int s = m - 1; s >= (m + 1) / 2; --s) out.push_back(LinkClass::pretzel(s, m - s, 1));
    return out;
}

std::vector<NamedProduct> xer_application(int product_mcn, bool knots_only) {
    if (product_mcn < 2) throw std::invalid_argument("xer_application needs product MCN >= 2");
    std::vector<NamedProduct> out;
    for (const auto& lc : theorem_mcn_products(product_mcn - 1)) {
        Fingerprint fp = fingerprint(lc);
        if (knots_only && fp.components != 1) continue;
        if (std::any_of(out.begin(), out.end(), [&](const auto& p) { return p.fp == fp; })) continue;
        out.push_back({lc, fp, identify(fp, crossing_number(lc))});
    }
    return out;
}

}  // namespace recomb
