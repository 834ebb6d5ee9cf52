#include "recomb/verification.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "recomb/enumerator.hpp"
#include "recomb/errors.hpp"
#include "recomb/mcn_table.hpp"
#include "recomb/montesinos.hpp"
#include "recomb/recombination.hpp"
#include "recomb/reference_table.hpp"

namespace recomb {

namespace {

CheckResult timed(int criterion, std::string title, double limit_seconds,
                  const std::function<bool(std::ostringstream&)>& body) {
    CheckResult r;
    r.criterion = criterion;
    r.title = std::move(title);
    std::ostringstream detail;
    auto t0 = std::chrono::steady_clock::now();
    try {
        r.passed = body(detail);
    } catch (const std::exception& e) {
        r.passed = false;
        detail << "exception: " << e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_seconds > 0 && r.seconds >= limit_seconds) {
        r.passed = false;
        detail << "; over the " << limit_seconds << " s budget";
    }
    r.detail = detail.str();
    return r;
}

std::set<std::string> theorem_names(int product_mcn) {
    std::set<std::string> names;
    for (const auto& p : xer_application(product_mcn, true)) names.insert(p.name.value_or("?" + to_string(p.product)));
    return names;
}

std::string join(const std::set<std::string>& s) {
    std::string out;
    for (const auto& x : s) out += (out.empty() ? "" : ",") + x;
    return "{" + out + "}";
}

Fingerprint member_fingerprint(const FamilyParams& f) {
    auto n = normalize(f);
    return fingerprint(minimal_form_diagram(n, minimal_form(n)));
}

}  // namespace

CheckResult check_xer_application() {
    return timed(1, "Xer application", 1.0, [](std::ostringstream& d) {
        auto seven = theorem_names(7);
        auto nine = theorem_names(9);
        d << "m=6 " << join(seven) << ", m=8 " << join(nine);
        return seven == std::set<std::string>{"7_1", "7_2", "7_4"} && nine == std::set<std::string>{"9_1", "9_2", "9_5"};
    });
}

CheckResult check_lemma_equivalences() {
    return timed(2, "Clasp-pretzel equivalences", 30.0, [](std::ostringstream& d) {
        int pass = 0, total = 0;
        std::string first_bad;
        for (int r : {-5, -4, -3, -2, 2, 3, 4, 5})
            for (int s : {-5, -4, -3, -2, 2, 3, 4, 5}) {
                ++total;
                auto c = fingerprint(LinkClass::clasp(r, s));
                bool ok = c == fingerprint(LinkClass::pretzel(r + 1, -1, s + 1)) &&
                          c == fingerprint(LinkClass::pretzel(r - 1, 1, s - 1));
                if (ok)
                    ++pass;
                else if (first_bad.empty())
                    first_bad = "C(" + std::to_string(r) + "," + std::to_string(s) + ")";
            }
        d << pass << "/" << total << " pass";
        if (!first_bad.empty()) d << ", first failure " << first_bad;
        return pass == total && total == 64;
    });
}

CheckResult check_clasp_mcn() {
    return timed(3, "Clasp MCN formula", 0, [](std::ostringstream& d) {
        int pass = 0, total = 0;
        for (int r : {-5, -4, -3, -2, 2, 3, 4, 5})
            for (int s : {-5, -4, -3, -2, 2, 3, 4, 5}) {
                ++total;
                int expected = std::abs(r) + std::abs(s) - ((r > 0) == (s > 0) ? 1 : 0);
                auto diagram = minimal_diagram(shape_of(LinkClass::clasp(r, s)));
                if (mcn_clasp(r, s) == expected && diagram.crossing_count() == expected && diagram.is_alternating() &&
                    diagram.is_reduced())
                    ++pass;
            }
        d << pass << "/" << total << " pass";
        return pass == total;
    });
}

CheckResult check_calibration() {
    return timed(4, "Family calibration", 120.0, [](std::ostringstream& d) {
        using L = LinkClass;
        struct Identity {
            std::string name;
            int pass = 0, total = 0;
        };
        std::vector<Identity> ids{{"r=0 torus"}, {"r=1 connected sum"}, {"r=1 pretzel"}, {"pq=-1 torus"}, {"p=q=0 clasp"}};
        auto check = [&](int i, const FamilyParams& f, const LinkClass& expected) {
            ++ids[i].total;
            if (fingerprint(L::family(f)) == fingerprint(expected)) ++ids[i].pass;
        };
        for (int p = -4; p <= 4; ++p)
            for (int q = -4; q <= 4; ++q)
                for (int s = -4; s <= 4; ++s) check(0, {p, q, 0, s}, L::torus(p + q));
        for (int p = -4; p <= 4; ++p)
            for (int s = -4; s <= 4; ++s)
                if (p != 0) check(1, {p, 0, 1, s}, L::conn_sum(L::torus(p), L::torus(s + 1)));
        for (int p = -4; p <= 4; ++p)
            for (int q = -4; q <= 4; ++q)
                for (int s = -4; s <= 4; ++s)
                    if (p != 0 && q != 0) check(2, {p, q, 1, s}, L::pretzel(p, q, s + 1));
        for (int r = -4; r <= 4; ++r)
            for (int s = -4; s <= 4; ++s) check(3, {1, -1, r, s}, L::torus(r));
        for (int r = -4; r <= 4; ++r)
            for (int s = -4; s <= 4; ++s) check(4, {0, 0, r, s}, L::plus_trivial(L::clasp(r, s)));
        bool all = true;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            d << (i ? "; " : "") << ids[i].name << " " << ids[i].pass << "/" << ids[i].total;
            all = all && ids[i].pass == ids[i].total;
        }
        return all;
    });
}

CheckResult check_theorem_mcn() {
    return timed(5, "Theorem-MCN brute force", 0, [](std::ostringstream& d) {
        int checked = 0, bad = 0;
        std::string first_bad;
        for (int m = 2; m <= 8; ++m) {
            std::set<Fingerprint> allowed;
            for (const auto& lc : theorem_mcn_products(m)) allowed.insert(fingerprint(lc));
            const int limit = m + 1 + kDefaultSweepSlack;
            for (int r : {1, 2})
                for (int p = -limit; p <= limit; ++p)
                    for (int s = -(m + 2); s <= m + 2; ++s) {
                        FamilyParams f{p, m - p, r, s};
                        if (f.raw_crossings() > limit) continue;
                        if (mcn(normalize(f)) != m + 1) continue;
                        ++checked;
                        if (!allowed.count(member_fingerprint(f))) {
                            ++bad;
                            if (first_bad.empty())
                                first_bad = "F(" + std::to_string(p) + "," + std::to_string(m - p) + "," +
                                            std::to_string(r) + "," + std::to_string(s) + ")";
                        }
                    }
        }
        d << checked << " members with mcn m+1, " << bad << " counterexamples";
        if (!first_bad.empty()) d << ", first " << first_bad;
        return bad == 0 && checked > 0;
    });
}

CheckResult check_growth(const VerifyOptions& opt) {
    return timed(6, "Growth bound", 600.0, [&](std::ostringstream& d) {
        EnumerationOptions eo;
        eo.threads = opt.threads;
        auto sweep = sweep_family(opt.count_n_max, eo);
        auto rows = count_report(sweep);
        bool ok = !rows.empty();
        for (const auto& r : rows) ok = ok && r.distinct <= r.bound && r.distinct >= 1;
        d << "distinct(" << rows.back().n << ")=" << rows.back().distinct << " <= " << rows.back().bound;
        if (opt.count_n_max >= 11) {
            auto c = cubic_fit(rows, 8, opt.count_n_max);
            d << ", cubic fit leading coefficient " << c[3];
            ok = ok && c[3] > 0;
        }
        d << ", " << sweep.collisions.size() << " certified fingerprint collisions";
        return ok;
    });
}

CheckResult check_oracle(const VerifyOptions& opt) {
    return timed(7, "Oracle self-tests", 0, [&](std::ostringstream& d) {
        bool unknot = jones(build_diagram(LinkClass::unknot())) == LaurentPoly::monomial(0, 1);

        std::vector<LinkClass> named;
        for (const auto& e : reference_table()) named.push_back(parse_link_class(e.constructor));

        std::mt19937_64 rng(opt.seed);
        int moves_ok = 0;
        const int trials = 100;
        for (int t = 0; t < trials; ++t) {
            const auto& lc = named[rng() % named.size()];
            auto base = build_diagram(lc);
            if (base.crossing_count() > 12) base = minimal_diagram(shape_of(lc));
            auto moved = base;
            int moves = 1 + static_cast<int>(rng() % 3);
            for (int k = 0; k < moves; ++k) {
                if (moved.crossing_count() == 0 || rng() % 2) insert_kink(moved, rng);
                else insert_bigon(moved, rng);
            }
            if (moved.is_valid() && fingerprint(moved) == fingerprint(base)) ++moves_ok;
        }

        int sums = 0, sums_ok = 0;
        for (std::size_t i = 0; i < named.size(); ++i)
            for (std::size_t j = i; j < named.size(); ++j) {
                auto a = build_diagram(named[i]);
                auto b = build_diagram(named[j]);
                if (a.crossing_count() + b.crossing_count() > 16) continue;
                ++sums;
                auto ab = connected_sum(a, b);
                bool ok = kauffman_bracket(ab) == kauffman_bracket(a) * kauffman_bracket(b);
                if (a.component_count() == 1 && b.component_count() == 1) ok = ok && jones(ab) == jones(a) * jones(b);
                if (ok) ++sums_ok;
            }

        int parity = 0, parity_ok = 0;
        auto compare = [&](const LinkClass& lc, int closed_form) {
            ++parity;
            if (build_diagram(lc).component_count() == closed_form) ++parity_ok;
        };
        for (const auto& lc : named) compare(lc, component_count(lc));
        for (int a = -5; a <= 5; ++a)
            for (int b = -5; b <= 5; ++b) {
                compare(LinkClass::torus(a), component_count(LinkClass::torus(a)));
                compare(LinkClass::clasp(a, b), component_count(LinkClass::clasp(a, b)));
                for (int c = -3; c <= 3; ++c)
                    compare(LinkClass::pretzel(a, b, c), component_count(LinkClass::pretzel(a, b, c)));
            }
        for (int p = -4; p <= 4; ++p)
            for (int q = -4; q <= 4; ++q)
                for (int r = 0; r <= 4; ++r)
                    for (int s = -4; s <= 4; ++s) {
                        FamilyParams f{p, q, r, s};
                        compare(LinkClass::family(f), component_count(minimal_form(normalize(f)).form));
                    }

        d << "jones(unknot)=1 " << (unknot ? "yes" : "no") << "; Reidemeister " << moves_ok << "/" << trials
          << "; connected sums " << sums_ok << "/" << sums << "; component counts " << parity_ok << "/" << parity;
        return unknot && moves_ok == trials && sums_ok == sums && sums > 0 && parity_ok == parity;
    });
}

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
    std::vector<CheckResult> out{check_xer_application(), check_lemma_equivalences(), check_clasp_mcn(),
                                 check_calibration(),     check_theorem_mcn(),        check_growth(opt),
                                 check_oracle(opt)};
    CheckResult offline;
    offline.criterion = 8;
    offline.title = "Offline surrogates";
    offline.passed = true;
    offline.detail = "gel-electrophoresis products are wet-lab data and are not reproduced; criteria 1-7 ran offline";
    out.push_back(offline);
    return out;
}

}  // namespace recomb
