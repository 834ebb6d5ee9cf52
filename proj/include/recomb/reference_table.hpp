#pragma once

#include <optional>
#include <string>
#include <vector>

#include "recomb/family.hpp"
#include "recomb/invariants.hpp"

namespace recomb {

struct ReferenceEntry {
    std::string name;
    std::string constructor;
    std::vector<std::string> aliases;  // further constructors with the same fingerprint
    int crossings = 0;                 // crossing number
    Fingerprint fp;
};

struct ReferenceSeed {
    std::string name;  // empty: named after its constructor
    std::string constructor;
};

// Named constructors the table is generated from.
std::vector<ReferenceSeed> reference_seeds();
// Builds the table; throws InvariantError when two distinct names share a fingerprint.
std::vector<ReferenceEntry> build_reference_table();
// Throws InvariantError when a family member other than the entry itself carries an entry's
// fingerprint and crossing number.
void verify_reference_table(const std::vector<ReferenceEntry>& entries);
std::string reference_table_json(const std::vector<ReferenceEntry>& entries);
std::vector<ReferenceEntry> parse_reference_table_json(const std::string& text);

constexpr int kReferenceTableVersion = 1;

// The table generated at build time.
const std::vector<ReferenceEntry>& reference_table();
// Names are matched on fingerprint and crossing number together; the fingerprint alone is not enough
// inside the family (5_2 and K(5,4,-3) share one).
std::optional<std::string> identify(const Fingerprint& fp, int crossings);
std::optional<std::string> identify(const LinkClass& lc);
// Crossing number of a class: the table value for family members, the classification value otherwise.
int crossing_number(const LinkClass& lc);

}  // namespace recomb
