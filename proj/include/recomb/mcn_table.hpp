#pragma once

#include <array>
#include <string_view>

#include "recomb/diagram.hpp"
#include "recomb/family.hpp"

namespace recomb {

// One identifier per row of the minimal crossing table, in printed order.
enum class CaseId {
    PQ_ZERO,
    R_ZERO,
    R1_Q0,
    R1_PQ_NONZERO,
    Q0,
    PQ_MINUS_ONE,
    PQ_ONE_S0,
    Q1_S_POS,
    PQ_ONE_S_NEG,
    QM1_S_POS,
    PQ_NEG_S_NONPOS,
    PQ_GT1_S0,
    P_NEG_Q_GT1_S0,
    Q_UNIT_S0,
    QS_MINUS_ONE,
    Q1_P_POS_S_NEG,
    Q1_P_LE_M2_S_LE_M2,
    PQ_POS_S1,
    P_NEG_Q_POS_S1,
    Q1_P_NEG_S_GT1,
    QM1_P_GT1_S_NEG,
    TRIVIAL,
    QM1_P_GT1_S_GT2,
    MONTESINOS_S_NEG,
    MONTESINOS_S_POS,
    QM2_S1,
    HARA_YAMAMOTO,
};

constexpr int kCaseCount = 27;

std::string_view case_name(CaseId c);
int case_row(CaseId c);  // 1-based row in table order
int strands_moved(CaseId c);
bool case_guard(CaseId c, int p, int q, int r, int s);

enum class FormKind { NamedClass, ReducedAlternating, ReducedMontesinos, HaraYamamoto, Trivial };
std::string_view form_kind_name(FormKind k);

struct MinimalForm {
    CaseId case_id = CaseId::PQ_ZERO;
    FormKind kind = FormKind::Trivial;
    LinkClass form;
    int mcn = 0;
    int strands_moved = 0;
    // The (p, q) order under which the row guard matched.
    bool swapped = false;
};

struct CaseMatch {
    CaseId id;
    bool swapped;
};

// First row in table order whose guard holds for (p,q) or, failing that, for (q,p).
CaseMatch match_case(const FamilyParams& params);
CaseId classify_case(const FamilyParams& params);

// Rejects |r| <= 1 or |s| <= 1.
int mcn_clasp(int r, int s);

MinimalForm minimal_form(const FamilyParams& params);
int mcn(const FamilyParams& params);

// Diagram realizing the minimal form with mcn crossings.
LinkDiagram minimal_form_diagram(const FamilyParams& params, const MinimalForm& mf);

}  // namespace recomb
