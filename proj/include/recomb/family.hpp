#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace recomb {

struct FamilyParams {
    int p = 0;
    int q = 0;
    int r = 0;
    int s = 0;

    int raw_crossings() const;
    friend auto operator<=>(const FamilyParams&, const FamilyParams&) = default;
};

// r >= 0 (mirror otherwise), then p >= q; for r = 0 the smaller of the tuple and its mirror.
FamilyParams normalize(FamilyParams f);
FamilyParams mirror(FamilyParams f);
bool is_normalized(const FamilyParams& f);

class LinkClass {
public:
    enum class Kind { Unknot, Unlink2, Torus, Clasp, Pretzel, ConnSum, PlusTrivial, Family };

    LinkClass() = default;

    static LinkClass unknot();
    static LinkClass unlink2();
    static LinkClass torus(int n);
    static LinkClass clasp(int r, int s);
    static LinkClass pretzel(int a, int b, int c);
    static LinkClass conn_sum(LinkClass left, LinkClass right);
    static LinkClass plus_trivial(LinkClass inner);
    static LinkClass family(FamilyParams f);

    Kind kind() const { return kind_; }
    const std::vector<int>& params() const { return params_; }
    const std::vector<LinkClass>& parts() const { return parts_; }
    FamilyParams family_params() const;

    // Flattened (kind, params, parts...) tuple; used for ordering and mirror choice.
    std::vector<int> key() const;

    friend bool operator==(const LinkClass& a, const LinkClass& b) { return a.key() == b.key(); }
    friend std::strong_ordering operator<=>(const LinkClass& a, const LinkClass& b) {
        return a.key() <=> b.key();
    }

private:
    Kind kind_ = Kind::Unknot;
    std::vector<int> params_;
    std::vector<LinkClass> parts_;
};

LinkClass mirror(const LinkClass& lc);
// Canonical form keeping chirality (degenerate rewrites, orderings, flattening).
LinkClass normalize_chiral(const LinkClass& lc);
// Canonical form up to mirror image.
LinkClass normalize(const LinkClass& lc);

std::string to_string(const LinkClass& lc);
LinkClass parse_link_class(std::string_view text);

std::pair<LinkClass, LinkClass> clasp_to_pretzel(int r, int s);
LinkClass subfamily_of(const FamilyParams& params);
int component_count(const LinkClass& lc);

// Sum of the raw row sizes of a class's standard diagram.
int standard_crossings(const LinkClass& lc);

}  // namespace recomb
