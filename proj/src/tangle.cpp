#include "recomb/tangle.hpp"

#include <unordered_map>

#include "recomb/errors.hpp"

namespace recomb {

int PdAlgebra::point(bool on_crossing) {
    int id = static_cast<int>(parent_.size());
    parent_.push_back(id);
    on_crossing_.push_back(on_crossing);
    return id;
}

int PdAlgebra::find(int x) {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

void PdAlgebra::join(int a, int b) { parent_[find(a)] = find(b); }

PdAlgebra::Tangle PdAlgebra::crossing(int sign) {
    Raw r{};
    for (auto& p : r.pts) p = point(true);
    r.under = sign > 0 ? 1 : 0;
    raw_.push_back(r);
    return {r.pts, {static_cast<int>(raw_.size()) - 1}};
}

PdAlgebra::Tangle PdAlgebra::zero() {
    Tangle t;
    for (auto& p : t.end) p = point(false);
    join(t.end[NW], t.end[NE]);
    join(t.end[SW], t.end[SE]);
    return t;
}

PdAlgebra::Tangle PdAlgebra::infinity() {
    Tangle t;
    for (auto& p : t.end) p = point(false);
    join(t.end[NW], t.end[SW]);
    join(t.end[NE], t.end[SE]);
    return t;
}

PdAlgebra::Tangle PdAlgebra::add(Tangle t, Tangle s) {
    join(t.end[NE], s.end[NW]);
    join(t.end[SE], s.end[SW]);
    Tangle out;
    out.end = {s.end[NE], t.end[NW], t.end[SW], s.end[SE]};
    out.crossings = std::move(t.crossings);
    out.crossings.insert(out.crossings.end(), s.crossings.begin(), s.crossings.end());
    return out;
}

PdAlgebra::Tangle PdAlgebra::mul(Tangle t, Tangle s) {
    join(t.end[SW], s.end[NW]);
    join(t.end[SE], s.end[NE]);
    Tangle out;
    out.end = {t.end[NE], t.end[NW], s.end[SW], s.end[SE]};
    out.crossings = std::move(t.crossings);
    out.crossings.insert(out.crossings.end(), s.crossings.begin(), s.crossings.end());
    return out;
}

PdAlgebra::Tangle PdAlgebra::rotate(Tangle t) {
    t.end = {t.end[SE], t.end[NE], t.end[NW], t.end[SW]};
    return t;
}

PdAlgebra::Tangle PdAlgebra::mirror(Tangle t) {
    for (int c : t.crossings) raw_[c].under ^= 1;
    return t;
}

LinkDiagram PdAlgebra::numerator(const Tangle& t, int extra_loops) {
    join(t.end[NW], t.end[NE]);
    join(t.end[SW], t.end[SE]);
    return finish(extra_loops);
}

LinkDiagram PdAlgebra::denominator(const Tangle& t, int extra_loops) {
    join(t.end[NW], t.end[SW]);
    join(t.end[NE], t.end[SE]);
    return finish(extra_loops);
}

LinkDiagram PdAlgebra::finish(int extra_loops) {
    const int n = static_cast<int>(parent_.size());
    std::vector<int> crossing_points(n, 0);
    for (int i = 0; i < n; ++i)
        if (on_crossing_[i]) ++crossing_points[find(i)];

    LinkDiagram d;
    d.free_loops = extra_loops;
    std::unordered_map<int, int> edge_of;
    for (int i = 0; i < n; ++i) {
        if (find(i) != i) continue;
        if (crossing_points[i] == 0) {
            ++d.free_loops;
        } else if (crossing_points[i] == 2) {
            int id = static_cast<int>(edge_of.size());
            edge_of.emplace(i, id);
        } else {
            throw InvariantError("open tangle endpoint left unclosed");
        }
    }
    for (const auto& r : raw_) {
        Crossing c;
        for (int k = 0; k < 4; ++k) c.e[k] = edge_of.at(find(r.pts[(r.under + k) % 4]));
        d.crossings.push_back(c);
    }
    parent_.clear();
    on_crossing_.clear();
    raw_.clear();
    return d;
}

}  // namespace recomb
