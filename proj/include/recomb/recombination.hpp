#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "recomb/family.hpp"
#include "recomb/invariants.hpp"

namespace recomb {

struct Substrate {
    enum class Kind { Unknot, Unlink, Torus2 };
    Kind kind = Kind::Unknot;
    int m = 0;  // Torus2 only, m >= 1

    static Substrate unknot() { return {Kind::Unknot, 0}; }
    static Substrate unlink() { return {Kind::Unlink, 0}; }
    static Substrate torus2(int m);
    // "unknot", "unlink" or "T(2,m)".
    static Substrate parse(std::string_view text);
    std::string to_string() const;
};

struct Recombinase {
    enum class Family { Serine, Tyrosine };
    Family family = Family::Tyrosine;
    int rounds = 1;  // processive rounds, serine only

    static Recombinase tyrosine() { return {Family::Tyrosine, 1}; }
    static Recombinase serine(int rounds = 1);
    static Recombinase parse(std::string_view text, std::optional<int> rounds = std::nullopt);
    std::string to_string() const;
};

struct ProductPattern {
    enum class Shape { Torus, Clasp2, Clasp, Hopf, Family };
    Shape shape = Shape::Family;
    std::string pattern;                 // e.g. "T(2,n)"
    std::vector<std::string> variables;  // free integer parameters, in order
    std::string branch;                  // complement form the pattern comes from
    std::string constraint;              // empty when unconstrained

    // Whether the parameter values satisfy the constraint for this substrate.
    bool admits(const std::vector<int>& values, const Substrate& sub) const;
    // The family member realizing the pattern at the given parameter values.
    FamilyParams family_member(const std::vector<int>& values) const;
    // The named class the pattern denotes at the given parameter values.
    LinkClass instantiate(const std::vector<int>& values) const;
};

struct ProductPrediction {
    Substrate substrate;
    Recombinase recombinase;
    std::vector<ProductPattern> patterns;
    std::vector<std::string> notes;
};

ProductPrediction predict_products(const Substrate& sub, const Recombinase& rec);

// Products of a single recombination on T(2,m) whose MCN is m+1.
std::vector<LinkClass> theorem_mcn_products(int m);

struct NamedProduct {
    LinkClass product;
    Fingerprint fp;
    std::optional<std::string> name;
};

// Deduplicated by fingerprint; name is empty when the reference table does not know it.
std::vector<NamedProduct> xer_application(int product_mcn, bool knots_only);

}  // namespace recomb
