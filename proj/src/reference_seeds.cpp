#include <algorithm>

#include "json.hpp"

#include "recomb/enumerator.hpp"
#include "recomb/errors.hpp"
#include "recomb/mcn_table.hpp"
#include "recomb/montesinos.hpp"
#include "recomb/reference_table.hpp"

namespace recomb {

std::vector<ReferenceSeed> reference_seeds() {
    std::vector<ReferenceSeed> seeds = {
        {"3_1", "T(2,3)"},   {"4_1", "K(2,1,1)"}, {"7_1", "T(2,7)"},  {"7_2", "C(5,-2)"},
        {"7_4", "K(3,3,1)"}, {"9_1", "T(2,9)"},   {"9_2", "C(7,-2)"}, {"9_5", "K(5,3,1)"},
        {"Hopf", "T(2,2)"},  {"5_1", "T(2,5)"},   {"4^2_1", "T(2,4)"}, {"6^2_1", "T(2,6)"},
        {"8^2_1", "T(2,8)"}, {"5_2", "C(3,-2)"},  {"6_1", "C(4,-2)"}, {"8_1", "C(6,-2)"},
        {"10_1", "C(8,-2)"},
    };
    for (int n = 2; n <= 12; ++n) {
        seeds.push_back({"", "T(2," + std::to_string(n) + ")"});
        seeds.push_back({"", "C(" + std::to_string(n) + ",-2)"});
    }
    return seeds;
}

std::vector<ReferenceEntry> build_reference_table() {
    std::vector<ReferenceEntry> entries;
    for (const auto& seed : reference_seeds()) {
        LinkClass lc = parse_link_class(seed.constructor);
        Fingerprint fp = fingerprint(lc);
        auto same = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.fp == fp; });
        if (same != entries.end()) {
            if (!seed.name.empty() && seed.name != same->name)
                throw InvariantError("reference collision: " + seed.name + " and " + same->name);
            if (seed.constructor != same->constructor &&
                std::find(same->aliases.begin(), same->aliases.end(), seed.constructor) == same->aliases.end())
                same->aliases.push_back(seed.constructor);
            continue;
        }
        if (std::any_of(entries.begin(), entries.end(), [&](const auto& e) { return !seed.name.empty() && e.name == seed.name; }))
            throw InvariantError("reference name reused with another fingerprint: " + seed.name);
        entries.push_back({seed.name.empty() ? seed.constructor : seed.name, seed.constructor, {}, crossing_number(lc), fp});
    }
    return entries;
}

int crossing_number(const LinkClass& lc) {
    if (lc.kind() == LinkClass::Kind::Family) return mcn(normalize(lc.family_params()));
    return shape_of(lc).crossing_number();
}

void verify_reference_table(const std::vector<ReferenceEntry>& entries) {
    int top = 0;
    for (const auto& e : entries) top = std::max(top, e.crossings);
    top = std::min(top, kMaxEnumerationMcn);
    auto sweep = sweep_family(top);
    for (const auto& e : entries) {
        auto key = shape_of(parse_link_class(e.constructor)).key();
        for (const auto& m : sweep.shapes)
            if (m.mcn == e.crossings && m.fp == e.fp && m.shape_key != key)
                throw InvariantError("reference entry " + e.name + " collides with family member " + to_string(m.form));
    }
}

std::string reference_table_json(const std::vector<ReferenceEntry>& entries) {
    nlohmann::ordered_json doc;
    doc["version"] = kReferenceTableVersion;
    doc["jones_exponent_scale"] = 4;
    auto& list = doc["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        nlohmann::ordered_json j;
        j["name"] = e.name;
        j["constructor"] = e.constructor;
        j["aliases"] = e.aliases;
        j["crossings"] = e.crossings;
        j["components"] = e.fp.components;
        auto& terms = j["jones"] = nlohmann::ordered_json::array();
        for (auto [exp, coef] : e.fp.jones.terms()) terms.push_back({exp, coef});
        list.push_back(std::move(j));
    }
    return doc.dump(2) + "\n";
}

std::vector<ReferenceEntry> parse_reference_table_json(const std::string& text) {
    auto doc = nlohmann::json::parse(text);
    if (doc.at("version").get<int>() != kReferenceTableVersion) throw ParseError("unsupported reference table version");
    std::vector<ReferenceEntry> out;
    for (const auto& j : doc.at("entries")) {
        ReferenceEntry e;
        e.name = j.at("name").get<std::string>();
        e.constructor = j.at("constructor").get<std::string>();
        e.aliases = j.at("aliases").get<std::vector<std::string>>();
        e.crossings = j.at("crossings").get<int>();
        e.fp.components = j.at("components").get<int>();
        for (const auto& t : j.at("jones")) e.fp.jones.add_term(t.at(0).get<int>(), t.at(1).get<std::int64_t>());
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace recomb
