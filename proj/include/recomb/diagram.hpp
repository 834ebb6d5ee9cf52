#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace recomb {

class LinkClass;

// Slots are listed counterclockwise; e[0] and e[2] are the under strand.
struct Crossing {
    std::array<int, 4> e{};
    friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct Orientation {
    // incoming[x][k] is true when the strand enters crossing x through slot k.
    std::vector<std::array<bool, 4>> incoming;
    // component[x][k] is the index of the traced component through slot k.
    std::vector<std::array<int, 4>> component;
    int traced_components = 0;
};

class LinkDiagram {
public:
    std::vector<Crossing> crossings;
    int free_loops = 0;

    int crossing_count() const { return static_cast<int>(crossings.size()); }
    int edge_count() const { return 2 * crossing_count(); }

    // Every edge id in [0, 2c) appears exactly twice.
    bool is_valid() const;
    Orientation orient() const;
    int component_count() const;
    // Sign of each crossing under the orientation from orient().
    std::vector<int> signs(const Orientation& o) const;
    int writhe() const;

    bool is_alternating() const;
    // No nugatory crossing.
    bool is_reduced() const;
    LinkDiagram mirrored() const;
};

LinkDiagram build_diagram(const LinkClass& lc);
LinkDiagram connected_sum(const LinkDiagram& a, const LinkDiagram& b);

// "X(a,b,c,d)" per crossing, starting at the incoming under edge, counterclockwise; "O" per free loop.
std::string to_pd(const LinkDiagram& d);
LinkDiagram parse_pd(std::string_view text);

// Reidemeister insertions; both preserve the link type.
void insert_kink(LinkDiagram& d, std::mt19937_64& rng);
void insert_bigon(LinkDiagram& d, std::mt19937_64& rng);

}  // namespace recomb
