#pragma once

#include <compare>
#include <string>

#include "recomb/diagram.hpp"
#include "recomb/family.hpp"
#include "recomb/laurent.hpp"
#include "recomb/state_sum.hpp"

namespace recomb {

struct Fingerprint {
    int components = 0;
    LaurentPoly jones;  // exponents of t scaled by 4

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
    friend std::strong_ordering operator<=>(const Fingerprint& a, const Fingerprint& b) {
        if (auto c = a.components <=> b.components; c != 0) return c;
        return a.jones <=> b.jones;
    }
    std::string to_string() const;
};

struct OracleOptions {
    Kernel kernel = best_kernel();
    int threads = 1;
};

// Polynomial in A.
LaurentPoly kauffman_bracket(const LinkDiagram& d, const OracleOptions& opt = {});
LaurentPoly bracket_from_histogram(const StateHistogram& hist, int crossings, int free_loops);
// Polynomial in t with exponents scaled by 4, for the orientation chosen by LinkDiagram::orient().
LaurentPoly jones(const LinkDiagram& d, const OracleOptions& opt = {});
// Normalizes a bracket with a given writhe into the Jones polynomial.
LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int writhe);

// Minimum over reversals of all components but the first and over mirror image.
Fingerprint fingerprint(const LinkDiagram& d, const OracleOptions& opt = {});
Fingerprint fingerprint(const LinkClass& lc, const OracleOptions& opt = {});

}  // namespace recomb
