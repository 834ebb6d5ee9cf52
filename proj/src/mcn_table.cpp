#include "recomb/mcn_table.hpp"

#include <cstdlib>
#include <stdexcept>

#include "recomb/errors.hpp"
#include "recomb/montesinos.hpp"

namespace recomb {

namespace {

struct Row {
    CaseId id;
    std::string_view name;
    int strands;
};

constexpr std::array<Row, kCaseCount> kRows{{
    {CaseId::PQ_ZERO, "PQ_ZERO", 0},
    {CaseId::R_ZERO, "R_ZERO", 0},
    {CaseId::R1_Q0, "R1_Q0", 0},
    {CaseId::R1_PQ_NONZERO, "R1_PQ_NONZERO", 0},
    {CaseId::Q0, "Q0", 0},
    {CaseId::PQ_MINUS_ONE, "PQ_MINUS_ONE", 0},
    {CaseId::PQ_ONE_S0, "PQ_ONE_S0", 0},
    {CaseId::Q1_S_POS, "Q1_S_POS", 1},
    {CaseId::PQ_ONE_S_NEG, "PQ_ONE_S_NEG", 1},
    {CaseId::QM1_S_POS, "QM1_S_POS", 2},
    {CaseId::PQ_NEG_S_NONPOS, "PQ_NEG_S_NONPOS", 0},
    {CaseId::PQ_GT1_S0, "PQ_GT1_S0", 2},
    {CaseId::P_NEG_Q_GT1_S0, "P_NEG_Q_GT1_S0", 1},
    {CaseId::Q_UNIT_S0, "Q_UNIT_S0", 0},
    {CaseId::QS_MINUS_ONE, "QS_MINUS_ONE", 1},
    {CaseId::Q1_P_POS_S_NEG, "Q1_P_POS_S_NEG", 1},
    {CaseId::Q1_P_LE_M2_S_LE_M2, "Q1_P_LE_M2_S_LE_M2", 1},
    {CaseId::PQ_POS_S1, "PQ_POS_S1", 1},
    {CaseId::P_NEG_Q_POS_S1, "P_NEG_Q_POS_S1", 1},
    {CaseId::Q1_P_NEG_S_GT1, "Q1_P_NEG_S_GT1", 2},
    {CaseId::QM1_P_GT1_S_NEG, "QM1_P_GT1_S_NEG", 1},
    {CaseId::TRIVIAL, "TRIVIAL", 2},
    {CaseId::QM1_P_GT1_S_GT2, "QM1_P_GT1_S_GT2", 3},
    {CaseId::MONTESINOS_S_NEG, "MONTESINOS_S_NEG", 0},
    {CaseId::MONTESINOS_S_POS, "MONTESINOS_S_POS", 1},
    {CaseId::QM2_S1, "QM2_S1", 1},
    {CaseId::HARA_YAMAMOTO, "HARA_YAMAMOTO", 1},
}};

const Row& row_of(CaseId c) { return kRows[static_cast<int>(c)]; }

int torus_mcn(int n) { return std::abs(n) <= 1 ? 0 : std::abs(n); }

int named_mcn(const LinkClass& raw) {
    using K = LinkClass::Kind;
    LinkClass lc = normalize(raw);
    const auto& v = lc.params();
    switch (lc.kind()) {
        case K::Unknot:
        case K::Unlink2: return 0;
        case K::Torus: return torus_mcn(v[0]);
        case K::Clasp: return mcn_clasp(v[0], v[1]);
        case K::Pretzel:
        case K::Family: return shape_of(lc).crossing_number();
        case K::PlusTrivial: return named_mcn(lc.parts()[0]);
        case K::ConnSum: {
            int n = 0;
            for (const auto& p : lc.parts()) n += named_mcn(p);
            return n;
        }
    }
    return 0;
}

}  // namespace

std::string_view case_name(CaseId c) { return row_of(c).name; }
int case_row(CaseId c) { return static_cast<int>(c) + 1; }
int strands_moved(CaseId c) { return row_of(c).strands; }

std::string_view form_kind_name(FormKind k) {
    switch (k) {
        case FormKind::NamedClass: return "NamedClass";
        case FormKind::ReducedAlternating: return "ReducedAlternating";
        case FormKind::ReducedMontesinos: return "ReducedMontesinos";
        case FormKind::HaraYamamoto: return "HaraYamamoto";
        case FormKind::Trivial: return "Trivial";
    }
    return "?";
}

bool case_guard(CaseId c, int p, int q, int r, int s) {
    const int ap = std::abs(p), aq = std::abs(q);
    switch (c) {
        case CaseId::PQ_ZERO: return p == 0 && q == 0;
        case CaseId::R_ZERO: return r == 0;
        case CaseId::R1_Q0: return r == 1 && p != 0 && q == 0;
        case CaseId::R1_PQ_NONZERO: return r == 1 && p != 0 && q != 0;
        default: break;
    }
    if (r <= 1) return false;
    switch (c) {
        case CaseId::Q0: return p != 0 && q == 0;
        case CaseId::PQ_MINUS_ONE: return p * q == -1;
        case CaseId::PQ_ONE_S0: return p * q == 1 && s == 0;
        case CaseId::Q1_S_POS: return p >= 1 && q == 1 && s > 0;
        case CaseId::PQ_ONE_S_NEG: return p == 1 && q == 1 && s < 0;
        case CaseId::QM1_S_POS: return p <= -1 && q == -1 && s >= 2;
        case CaseId::PQ_NEG_S_NONPOS: return p < 0 && q < 0 && s <= 0;
        case CaseId::PQ_GT1_S0: return p > 1 && q > 1 && s == 0;
        case CaseId::P_NEG_Q_GT1_S0: return p < -1 && q > 1 && s == 0;
        case CaseId::Q_UNIT_S0: return ap > 1 && aq == 1 && s == 0;
        case CaseId::QS_MINUS_ONE: return q * s == -1;
        case CaseId::Q1_P_POS_S_NEG: return p > 0 && q == 1 && s < 0;
        case CaseId::Q1_P_LE_M2_S_LE_M2: return p <= -2 && q == 1 && s <= -2;
        case CaseId::PQ_POS_S1: return p > 0 && q > 0 && s == 1;
        case CaseId::P_NEG_Q_POS_S1: return p < -1 && q > 0 && s == 1;
        case CaseId::Q1_P_NEG_S_GT1: return p < -1 && q == 1 && s > 1;
        case CaseId::QM1_P_GT1_S_NEG: return p > 1 && q == -1 && s < 0;
        case CaseId::TRIVIAL: return p > 1 && q == -1 && s == 2;
        case CaseId::QM1_P_GT1_S_GT2: return p > 1 && q == -1 && s > 2;
        case CaseId::MONTESINOS_S_NEG: return ap > 1 && aq > 1 && s < 0;
        case CaseId::MONTESINOS_S_POS: return ap > 1 && aq > 1 && s > 1;
        case CaseId::QM2_S1: return p < -1 && q == -2 && s == 1;
        case CaseId::HARA_YAMAMOTO: return p < -2 && q < -2 && s == 1;
        default: return false;
    }
}

CaseMatch match_case(const FamilyParams& f) {
    if (f.r < 0) throw std::invalid_argument("family parameters must be normalized (r >= 0)");
    for (const auto& row : kRows) {
        if (case_guard(row.id, f.p, f.q, f.r, f.s)) return {row.id, false};
        if (case_guard(row.id, f.q, f.p, f.r, f.s)) return {row.id, true};
    }
    throw InvariantError("no table row matches F(" + std::to_string(f.p) + "," + std::to_string(f.q) + "," +
                         std::to_string(f.r) + "," + std::to_string(f.s) + ")");
}

CaseId classify_case(const FamilyParams& params) { return match_case(params).id; }

int mcn_clasp(int r, int s) {
    if (std::abs(r) <= 1 || std::abs(s) <= 1) throw std::invalid_argument("mcn_clasp needs |r| > 1 and |s| > 1");
    bool same = (r > 0) == (s > 0);
    return std::abs(r) + std::abs(s) - (same ? 1 : 0);
}

MinimalForm minimal_form(const FamilyParams& params) {
    const CaseMatch m = match_case(params);
    const int p = m.swapped ? params.q : params.p;
    const int q = m.swapped ? params.p : params.q;
    const int r = params.r, s = params.s;

    MinimalForm mf;
    mf.case_id = m.id;
    mf.swapped = m.swapped;
    mf.strands_moved = strands_moved(m.id);

    auto named = [&](LinkClass lc) {
        mf.kind = FormKind::NamedClass;
        mf.form = normalize(lc);
        mf.mcn = named_mcn(mf.form);
    };
    auto formula = [&](FormKind kind, int value) {
        mf.kind = kind;
        mf.form = LinkClass::family(params);
        mf.mcn = value;
    };
    using L = LinkClass;
    const auto RA = FormKind::ReducedAlternating;
    const auto RM = FormKind::ReducedMontesinos;

    switch (m.id) {
        case CaseId::PQ_ZERO: named(L::plus_trivial(L::clasp(r, s))); break;
        case CaseId::R_ZERO: named(L::torus(p + q)); break;
        case CaseId::R1_Q0: named(L::conn_sum(L::torus(p), L::torus(s - 1))); break;
        case CaseId::R1_PQ_NONZERO: named(L::pretzel(p, q, s - 1)); break;
        case CaseId::Q0: named(L::conn_sum(L::torus(p), L::clasp(-r, -s))); break;
        case CaseId::PQ_MINUS_ONE: named(L::torus(r)); break;
        case CaseId::PQ_ONE_S0: named(L::torus(r - 2 * p)); break;
        case CaseId::Q1_S_POS: formula(RA, p + r + s); break;
        case CaseId::PQ_ONE_S_NEG: formula(RA, r - s + 1); break;
        case CaseId::QM1_S_POS: formula(RA, -p + r + s - 1); break;
        case CaseId::PQ_NEG_S_NONPOS: formula(RA, -p - q + r - s); break;
        case CaseId::PQ_GT1_S0: formula(RA, p + q + r - 2); break;
        case CaseId::P_NEG_Q_GT1_S0: formula(RA, -p + q + r - 1); break;
        case CaseId::Q_UNIT_S0: named(L::clasp(r - q, p)); break;
        case CaseId::QS_MINUS_ONE: named(L::torus(r + p + q)); break;
        case CaseId::Q1_P_POS_S_NEG: formula(RA, p + r - s); break;
        case CaseId::Q1_P_LE_M2_S_LE_M2:
            if (p == -2)
                named(L::clasp(-r, -s - 2));
            else
                formula(RA, -p + r - s - 3);
            break;
        case CaseId::PQ_POS_S1: formula(RA, p + q + r); break;
        case CaseId::P_NEG_Q_POS_S1: formula(RA, -p + q + r - 1); break;
        case CaseId::Q1_P_NEG_S_GT1: formula(RA, -p + r + s - 1); break;
        case CaseId::QM1_P_GT1_S_NEG: formula(RA, p + r - s); break;
        case CaseId::TRIVIAL: named(L::clasp(p - 2, r - 1)); break;
        case CaseId::QM1_P_GT1_S_GT2:
            if (p == 2)
                named(L::clasp(-r, 2 - s));
            else
                formula(RA, p + r + s - 4);
            break;
        case CaseId::MONTESINOS_S_NEG: formula(RM, std::abs(p) + std::abs(q) + r - s); break;
        case CaseId::MONTESINOS_S_POS: formula(RM, std::abs(p) + std::abs(q) + r + s - 1); break;
        case CaseId::QM2_S1: named(L::pretzel(p, 2, r - 1)); break;
        case CaseId::HARA_YAMAMOTO:
            if (r == 2)
                formula(RA, -p - q);
            else
                formula(FormKind::HaraYamamoto, -p - q + r - 1);
            break;
    }
    if (mf.mcn == 0) mf.kind = FormKind::Trivial;
    if (mf.mcn > params.raw_crossings()) throw InvariantError("minimal form exceeds the raw crossing count");
    return mf;
}

int mcn(const FamilyParams& params) { return minimal_form(params).mcn; }

LinkDiagram minimal_form_diagram(const FamilyParams& params, const MinimalForm& mf) {
    if (mf.kind == FormKind::HaraYamamoto) {
        FamilyParams f = params;
        if (mf.swapped) std::swap(f.p, f.q);
        return hara_yamamoto_diagram(f);
    }
    return minimal_diagram(shape_of(mf.form));
}

LinkClass subfamily_of(const FamilyParams& params) { return minimal_form(normalize(params)).form; }

}  // namespace recomb
