#include "recomb/diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "recomb/errors.hpp"
#include "recomb/family.hpp"
#include "recomb/tangle.hpp"

namespace recomb {

namespace {

using Slot = std::pair<int, int>;

// For every edge, the two (crossing, slot) places where it ends.
std::vector<std::array<Slot, 2>> edge_ends(const LinkDiagram& d) {
    std::vector<std::array<Slot, 2>> ends(d.edge_count(), {Slot{-1, -1}, Slot{-1, -1}});
    std::vector<int> seen(d.edge_count(), 0);
    for (int x = 0; x < d.crossing_count(); ++x)
        for (int k = 0; k < 4; ++k) {
            int e = d.crossings[x].e[k];
            if (e < 0 || e >= d.edge_count() || seen[e] >= 2) throw InvariantError("malformed diagram");
            ends[e][seen[e]++] = {x, k};
        }
    return ends;
}

Slot other_end(const std::vector<std::array<Slot, 2>>& ends, int e, Slot here) {
    return ends[e][0] == here ? ends[e][1] : ends[e][0];
}

// Each component as the sequence of (crossing, incoming slot) visits.
std::vector<std::vector<Slot>> trace(const LinkDiagram& d) {
    auto ends = edge_ends(d);
    std::vector<std::array<bool, 4>> used(d.crossing_count(), {false, false, false, false});
    std::vector<std::vector<Slot>> comps;
    for (int x = 0; x < d.crossing_count(); ++x)
        for (int k = 0; k < 4; ++k) {
            if (used[x][k]) continue;
            std::vector<Slot> seq;
            Slot cur{x, k};
            while (!used[cur.first][cur.second]) {
                int out = (cur.second + 2) % 4;
                used[cur.first][cur.second] = used[cur.first][out] = true;
                seq.push_back(cur);
                int e = d.crossings[cur.first].e[out];
                cur = other_end(ends, e, {cur.first, out});
            }
            comps.push_back(std::move(seq));
        }
    return comps;
}

constexpr int kPosX[4] = {1, 0, -1, 0};
constexpr int kPosY[4] = {0, 1, 0, -1};

}  // namespace

bool LinkDiagram::is_valid() const {
    if (free_loops < 0) return false;
    std::vector<int> count(edge_count(), 0);
    for (const auto& c : crossings)
        for (int e : c.e) {
            if (e < 0 || e >= edge_count()) return false;
            ++count[e];
        }
    return std::all_of(count.begin(), count.end(), [](int n) { return n == 2; });
}

Orientation LinkDiagram::orient() const {
    Orientation o;
    o.incoming.assign(crossing_count(), {false, false, false, false});
    o.component.assign(crossing_count(), {-1, -1, -1, -1});
    auto comps = trace(*this);
    o.traced_components = static_cast<int>(comps.size());
    for (int c = 0; c < o.traced_components; ++c)
        for (auto [x, k] : comps[c]) {
            o.incoming[x][k] = true;
            o.component[x][k] = o.component[x][(k + 2) % 4] = c;
        }
    return o;
}

int LinkDiagram::component_count() const { return static_cast<int>(trace(*this).size()) + free_loops; }

std::vector<int> LinkDiagram::signs(const Orientation& o) const {
    std::vector<int> out(crossing_count());
    for (int x = 0; x < crossing_count(); ++x) {
        int ui = o.incoming[x][0] ? 0 : 2;
        int oi = o.incoming[x][1] ? 1 : 3;
        int ux = -kPosX[ui], uy = -kPosY[ui];
        int ox = -kPosX[oi], oy = -kPosY[oi];
        out[x] = ox * uy - oy * ux > 0 ? 1 : -1;
    }
    return out;
}

int LinkDiagram::writhe() const {
    auto s = signs(orient());
    int w = 0;
    for (int v : s) w += v;
    return w;
}

bool LinkDiagram::is_alternating() const {
    auto ends = edge_ends(*this);
    for (const auto& e : ends)
        if ((e[0].second & 1) == (e[1].second & 1)) return false;
    return true;
}

bool LinkDiagram::is_reduced() const {
    auto ends = edge_ends(*this);
    const int n = crossing_count();
    std::vector<int> face(4 * n, -1);
    int faces = 0;
    for (int start = 0; start < 4 * n; ++start) {
        if (face[start] >= 0) continue;
        int cur = start;
        while (face[cur] < 0) {
            face[cur] = faces;
            int x = cur / 4, m = cur % 4;
            int leave = (m + 1) % 4;
            auto [y, k] = other_end(ends, crossings[x].e[leave], {x, leave});
            cur = 4 * y + k;
        }
        ++faces;
    }
    for (int x = 0; x < n; ++x)
        if (face[4 * x] == face[4 * x + 2] || face[4 * x + 1] == face[4 * x + 3]) return false;
    return true;
}

LinkDiagram LinkDiagram::mirrored() const {
    LinkDiagram d = *this;
    for (auto& c : d.crossings) std::rotate(c.e.begin(), c.e.begin() + 1, c.e.end());
    return d;
}

LinkDiagram build_diagram(const LinkClass& lc) {
    PdAlgebra alg;
    int loops = 0;
    auto t = class_tangle(alg, lc, loops);
    return alg.numerator(t, loops);
}

LinkDiagram connected_sum(const LinkDiagram& a, const LinkDiagram& b) {
    if (a.crossings.empty() || b.crossings.empty()) {
        const LinkDiagram& full = a.crossings.empty() ? b : a;
        const LinkDiagram& empty = a.crossings.empty() ? a : b;
        if (empty.free_loops == 0) throw InvariantError("connected sum with an empty diagram");
        LinkDiagram d = full;
        d.free_loops += empty.free_loops - 1;
        return d;
    }
    LinkDiagram d = a;
    const int offset = a.edge_count();
    for (auto c : b.crossings) {
        for (auto& e : c.e) e += offset;
        d.crossings.push_back(c);
    }
    d.free_loops += b.free_loops;
    // Swap one end of edge 0 of a with one end of edge 0 of b.
    auto ends = edge_ends(d);
    auto [xa, ka] = ends[0][1];
    auto [xb, kb] = ends[offset][1];
    d.crossings[xa].e[ka] = offset;
    d.crossings[xb].e[kb] = 0;
    return d;
}

std::string to_pd(const LinkDiagram& d) {
    auto comps = trace(d);
    std::vector<int> label(d.edge_count(), 0);
    int next = 1;
    for (const auto& comp : comps)
        for (auto [x, k] : comp) label[d.crossings[x].e[(k + 2) % 4]] = next++;
    auto o = d.orient();
    std::ostringstream os;
    for (int x = 0; x < d.crossing_count(); ++x) {
        int start = o.incoming[x][0] ? 0 : 2;
        os << "X(";
        for (int i = 0; i < 4; ++i) os << (i ? "," : "") << label[d.crossings[x].e[(start + i) % 4]];
        os << ")\n";
    }
    for (int i = 0; i < d.free_loops; ++i) os << "O\n";
    return os.str();
}

LinkDiagram parse_pd(std::string_view text) {
    LinkDiagram d;
    std::map<long, int> ids;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        std::string s = line.substr(b, e - b + 1);
        auto bad = [&] { return ParseError("pd line " + std::to_string(line_no) + ": '" + s + "'"); };
        if (s == "O") {
            ++d.free_loops;
            continue;
        }
        if (s.size() < 4 || s[0] != 'X' || (s[1] != '(' && s[1] != '[') || (s.back() != ')' && s.back() != ']'))
            throw bad();
        std::istringstream args(s.substr(2, s.size() - 3));
        Crossing c;
        for (int k = 0; k < 4; ++k) {
            long v;
            if (!(args >> v)) throw bad();
            c.e[k] = static_cast<int>(ids.try_emplace(v, static_cast<int>(ids.size())).first->second);
            char comma;
            if (k < 3 && !(args >> comma && comma == ',')) throw bad();
        }
        std::string rest;
        if (args >> rest) throw bad();
        d.crossings.push_back(c);
    }
    if (static_cast<int>(ids.size()) != d.edge_count() || !d.is_valid())
        throw ParseError("pd code: every edge label must appear exactly twice");
    return d;
}

void insert_kink(LinkDiagram& d, std::mt19937_64& rng) {
    if (d.crossings.empty()) {
        if (d.free_loops == 0) throw InvariantError("no strand to twist");
        --d.free_loops;
        Crossing c{{0, 0, 1, 1}};
        std::rotate(c.e.begin(), c.e.begin() + rng() % 4, c.e.end());
        d.crossings.push_back(c);
        return;
    }
    const int e = static_cast<int>(rng() % d.edge_count());
    auto ends = edge_ends(d);
    const int f = d.edge_count(), k = f + 1;
    auto [x, slot] = ends[e][1];
    d.crossings[x].e[slot] = f;
    Crossing c{{e, f, k, k}};
    std::rotate(c.e.begin(), c.e.begin() + rng() % 4, c.e.end());
    d.crossings.push_back(c);
}

void insert_bigon(LinkDiagram& d, std::mt19937_64& rng) {
    const int n = d.crossing_count();
    if (n == 0) throw InvariantError("no crossing to slide over");
    std::vector<Slot> options;
    for (int x = 0; x < n; ++x)
        for (int m = 0; m < 4; ++m)
            if (d.crossings[x].e[m] != d.crossings[x].e[(m + 1) % 4]) options.push_back({x, m});
    if (options.empty()) throw InvariantError("no adjacent distinct edges");
    auto [x, m] = options[rng() % options.size()];
    const int a = d.crossings[x].e[m], b = d.crossings[x].e[(m + 1) % 4];
    const int E = d.edge_count();
    const int a1 = E, a2 = E + 1, b1 = E + 2, b2 = E + 3;
    d.crossings[x].e[m] = a1;
    d.crossings[x].e[(m + 1) % 4] = b1;
    // Strand a is pushed across strand b near the corner between slots m and m+1.
    if (rng() % 2 == 0) {
        d.crossings.push_back({{b2, a2, b1, a1}});
        d.crossings.push_back({{b, a2, b2, a}});
    } else {
        d.crossings.push_back({{a1, b2, a2, b1}});
        d.crossings.push_back({{a, b, a2, b2}});
    }
}

}  // namespace recomb
