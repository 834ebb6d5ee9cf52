#include "recomb/invariants.hpp"

#include <limits>
#include <sstream>

#include "recomb/errors.hpp"

namespace recomb {

std::string Fingerprint::to_string() const {
    std::ostringstream os;
    os << components << ":";
    bool first = true;
    for (auto [e, c] : jones.terms()) {
        os << (first ? "" : ",") << e << "^" << c;
        first = false;
    }
    return os.str();
}

LaurentPoly bracket_from_histogram(const StateHistogram& hist, int crossings, int free_loops) {
    const int E = 2 * crossings;
    const int max_loops = E + free_loops;
    // Coefficients of delta^n = (-A^2 - A^-2)^n, indexed by exponent offset.
    std::vector<std::vector<__int128>> binom(max_loops + 1);
    for (int n = 0; n <= max_loops; ++n) {
        binom[n].assign(n + 1, 1);
        for (int j = 1; j < n; ++j) binom[n][j] = binom[n - 1][j - 1] + binom[n - 1][j];
    }
    const int span = 2 * crossings + 2 * max_loops;
    std::vector<__int128> acc(2 * span + 1, 0);
    for (int a = 0; a <= crossings; ++a)
        for (int loops = 0; loops <= E; ++loops) {
            std::uint64_t count = hist[a * (E + 1) + loops];
            if (count == 0) continue;
            int total = loops + free_loops;
            if (total == 0) throw InvariantError("empty diagram has no bracket");
            int n = total - 1;
            int base = a - (crossings - a);
            __int128 sign = (n % 2 == 0) ? 1 : -1;
            for (int j = 0; j <= n; ++j) acc[base + 4 * j - 2 * n + span] += sign * count * binom[n][j];
        }
    LaurentPoly out;
    for (int i = 0; i < static_cast<int>(acc.size()); ++i) {
        if (acc[i] == 0) continue;
        if (acc[i] > std::numeric_limits<std::int64_t>::max() || acc[i] < std::numeric_limits<std::int64_t>::min())
            throw InvariantError("bracket coefficient overflow");
        out.add_term(i - span, static_cast<std::int64_t>(acc[i]));
    }
    return out;
}

LaurentPoly kauffman_bracket(const LinkDiagram& d, const OracleOptions& opt) {
    if (d.crossing_count() > kMaxStateSumCrossings)
        throw SizeError("diagram has " + std::to_string(d.crossing_count()) + " crossings; the state sum accepts at most " +
                        std::to_string(kMaxStateSumCrossings));
    if (d.crossing_count() == 0 && d.free_loops == 0) throw InvariantError("empty diagram");
    auto hist = state_histogram(d, opt.kernel, opt.threads);
    return bracket_from_histogram(hist, d.crossing_count(), d.free_loops);
}

LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int writhe) {
    LaurentPoly out;
    const std::int64_t sign = (writhe % 2 == 0) ? 1 : -1;
    for (auto [k, v] : bracket.terms()) out.add_term(3 * writhe - k, sign * v);
    return out;
}

LaurentPoly jones(const LinkDiagram& d, const OracleOptions& opt) {
    return jones_from_bracket(kauffman_bracket(d, opt), d.writhe());
}

Fingerprint fingerprint(const LinkDiagram& d, const OracleOptions& opt) {
    const LaurentPoly br = kauffman_bracket(d, opt);
    const Orientation o = d.orient();
    const auto sign = d.signs(o);
    const int nc = o.traced_components;

    Fingerprint fp;
    fp.components = nc + d.free_loops;
    bool have = false;
    const unsigned masks = nc > 1 ? 1u << (nc - 1) : 1u;
    for (unsigned mask = 0; mask < masks; ++mask) {
        auto reversed = [&](int comp) { return comp > 0 && ((mask >> (comp - 1)) & 1); };
        int w = 0;
        for (int x = 0; x < d.crossing_count(); ++x) {
            bool flip = reversed(o.component[x][0]) != reversed(o.component[x][1]);
            w += flip ? -sign[x] : sign[x];
        }
        LaurentPoly j = jones_from_bracket(br, w);
        LaurentPoly m = j.mirrored();
        const LaurentPoly& best = m < j ? m : j;
        if (!have || best < fp.jones) {
            fp.jones = best;
            have = true;
        }
    }
    return fp;
}

Fingerprint fingerprint(const LinkClass& lc, const OracleOptions& opt) { return fingerprint(build_diagram(lc), opt); }

}  // namespace recomb
