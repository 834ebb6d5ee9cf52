#include "recomb/reference_table.hpp"

#include "recomb/errors.hpp"

namespace recomb {

namespace {
#include "reference_table.inc"
}  // namespace

const std::vector<ReferenceEntry>& reference_table() {
    static const std::vector<ReferenceEntry> table = parse_reference_table_json(kReferenceTableJson);
    return table;
}

std::optional<std::string> identify(const Fingerprint& fp, int crossings) {
    for (const auto& e : reference_table())
        if (e.crossings == crossings && e.fp == fp) return e.name;
    return std::nullopt;
}

std::optional<std::string> identify(const LinkClass& lc) {
    try {
        return identify(fingerprint(lc), crossing_number(lc));
    } catch (const SizeError&) {
        return std::nullopt;
    }
}

}  // namespace recomb
