#include "recomb/family.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>

#include "recomb/diagram.hpp"
#include "recomb/errors.hpp"

namespace recomb {

int FamilyParams::raw_crossings() const { return std::abs(p) + std::abs(q) + std::abs(r) + std::abs(s); }

FamilyParams mirror(FamilyParams f) { return {-f.p, -f.q, -f.r, -f.s}; }

FamilyParams normalize(FamilyParams f) {
    if (f.r < 0) f = mirror(f);
    if (f.p < f.q) std::swap(f.p, f.q);
    if (f.r == 0) {
        FamilyParams m{-f.q, -f.p, 0, -f.s};
        if (m < f) f = m;
    }
    return f;
}

bool is_normalized(const FamilyParams& f) { return normalize(f) == f; }

LinkClass LinkClass::unknot() { return LinkClass{}; }

LinkClass LinkClass::unlink2() {
    LinkClass lc;
    lc.kind_ = Kind::Unlink2;
    return lc;
}

LinkClass LinkClass::torus(int n) {
    LinkClass lc;
    lc.kind_ = Kind::Torus;
    lc.params_ = {n};
    return lc;
}

LinkClass LinkClass::clasp(int r, int s) {
    LinkClass lc;
    lc.kind_ = Kind::Clasp;
    lc.params_ = {r, s};
    return lc;
}

LinkClass LinkClass::pretzel(int a, int b, int c) {
    LinkClass lc;
    lc.kind_ = Kind::Pretzel;
    lc.params_ = {a, b, c};
    return lc;
}

LinkClass LinkClass::conn_sum(LinkClass left, LinkClass right) {
    LinkClass lc;
    lc.kind_ = Kind::ConnSum;
    lc.parts_ = {std::move(left), std::move(right)};
    return lc;
}

LinkClass LinkClass::plus_trivial(LinkClass inner) {
    LinkClass lc;
    lc.kind_ = Kind::PlusTrivial;
    lc.parts_ = {std::move(inner)};
    return lc;
}

LinkClass LinkClass::family(FamilyParams f) {
    LinkClass lc;
    lc.kind_ = Kind::Family;
    lc.params_ = {f.p, f.q, f.r, f.s};
    return lc;
}

FamilyParams LinkClass::family_params() const {
    if (kind_ != Kind::Family) throw InvariantError("not a family member");
    return {params_[0], params_[1], params_[2], params_[3]};
}

std::vector<int> LinkClass::key() const {
    std::vector<int> k{static_cast<int>(kind_), static_cast<int>(params_.size())};
    k.insert(k.end(), params_.begin(), params_.end());
    k.push_back(static_cast<int>(parts_.size()));
    for (const auto& p : parts_) {
        auto sub = p.key();
        k.insert(k.end(), sub.begin(), sub.end());
    }
    return k;
}

LinkClass mirror(const LinkClass& lc) {
    using K = LinkClass::Kind;
    const auto& v = lc.params();
    switch (lc.kind()) {
        case K::Unknot:
        case K::Unlink2: return lc;
        case K::Torus: return LinkClass::torus(-v[0]);
        case K::Clasp: return LinkClass::clasp(-v[0], -v[1]);
        case K::Pretzel: return LinkClass::pretzel(-v[0], -v[1], -v[2]);
        case K::Family: return LinkClass::family(mirror(lc.family_params()));
        case K::PlusTrivial: return LinkClass::plus_trivial(mirror(lc.parts()[0]));
        case K::ConnSum: {
            LinkClass out = LinkClass::conn_sum(mirror(lc.parts()[0]), mirror(lc.parts()[1]));
            for (std::size_t i = 2; i < lc.parts().size(); ++i)
                out = LinkClass::conn_sum(out, mirror(lc.parts()[i]));
            return out;
        }
    }
    return lc;
}

namespace {

void collect_summands(const LinkClass& lc, std::vector<LinkClass>& out, int& loops) {
    using K = LinkClass::Kind;
    switch (lc.kind()) {
        case K::Unknot: return;
        case K::Unlink2: ++loops; return;
        case K::PlusTrivial:
            ++loops;
            collect_summands(lc.parts()[0], out, loops);
            return;
        case K::ConnSum:
            for (const auto& p : lc.parts()) collect_summands(p, out, loops);
            return;
        default: out.push_back(lc);
    }
}

LinkClass assemble(std::vector<LinkClass> parts, int loops) {
    std::sort(parts.begin(), parts.end());
    LinkClass out;
    if (!parts.empty()) {
        out = parts[0];
        for (std::size_t i = 1; i < parts.size(); ++i) out = LinkClass::conn_sum(out, parts[i]);
    }
    for (int i = 0; i < loops; ++i)
        out = out.kind() == LinkClass::Kind::Unknot ? LinkClass::unlink2() : LinkClass::plus_trivial(out);
    return out;
}

std::vector<int> sign_key(const LinkClass& lc) {
    std::vector<int> k(lc.params());
    for (const auto& p : lc.parts()) {
        auto sub = sign_key(p);
        k.insert(k.end(), sub.begin(), sub.end());
    }
    return k;
}

}  // namespace

LinkClass normalize_chiral(const LinkClass& lc) {
    using K = LinkClass::Kind;
    const auto& v = lc.params();
    switch (lc.kind()) {
        case K::Unknot:
        case K::Unlink2: return lc;
        case K::Torus:
            if (v[0] == 0) return LinkClass::unlink2();
            if (std::abs(v[0]) == 1) return LinkClass::unknot();
            return lc;
        case K::Clasp: {
            int r = v[0], s = v[1];
            if (r == 0 || s == 0) return LinkClass::unknot();
            if (std::abs(r) == 1) return normalize_chiral(LinkClass::torus(r - s));
            if (std::abs(s) == 1) return normalize_chiral(LinkClass::torus(s - r));
            if (std::abs(r) < std::abs(s) || (std::abs(r) == std::abs(s) && r < s)) std::swap(r, s);
            return LinkClass::clasp(r, s);
        }
        case K::Pretzel: {
            std::vector<int> a(v);
            int zeros = static_cast<int>(std::count(a.begin(), a.end(), 0));
            if (zeros == 0) {
                std::sort(a.begin(), a.end(), std::greater<>());
                return LinkClass::pretzel(a[0], a[1], a[2]);
            }
            // a zero column is the infinity tangle: the closure splits into twist-knot summands
            std::vector<LinkClass> parts;
            int loops = zeros - 1;
            for (int x : a)
                if (x != 0) collect_summands(normalize_chiral(LinkClass::torus(-x)), parts, loops);
            return assemble(std::move(parts), loops);
        }
        case K::Family: {
            auto f = lc.family_params();
            if (f.p < f.q) std::swap(f.p, f.q);
            return LinkClass::family(f);
        }
        case K::ConnSum:
        case K::PlusTrivial: {
            std::vector<LinkClass> parts;
            int loops = 0;
            if (lc.kind() == K::PlusTrivial) {
                ++loops;
                collect_summands(normalize_chiral(lc.parts()[0]), parts, loops);
            } else {
                for (const auto& p : lc.parts()) collect_summands(normalize_chiral(p), parts, loops);
            }
            return assemble(std::move(parts), loops);
        }
    }
    return lc;
}

LinkClass normalize(const LinkClass& lc) {
    if (lc.kind() == LinkClass::Kind::Family) return LinkClass::family(normalize(lc.family_params()));
    LinkClass a = normalize_chiral(lc);
    LinkClass b = normalize_chiral(mirror(lc));
    return sign_key(b) > sign_key(a) ? b : a;
}

std::string to_string(const LinkClass& lc) {
    using K = LinkClass::Kind;
    const auto& v = lc.params();
    auto join = [&](const char* head) {
        std::string s = head;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + ")";
    };
    switch (lc.kind()) {
        case K::Unknot: return "O";
        case K::Unlink2: return "O+O";
        case K::Torus: return "T(2," + std::to_string(v[0]) + ")";
        case K::Clasp: return join("C(");
        case K::Pretzel: return join("K(");
        case K::Family: return join("F(");
        case K::PlusTrivial: return to_string(lc.parts()[0]) + "+O";
        case K::ConnSum: {
            std::string s;
            for (std::size_t i = 0; i < lc.parts().size(); ++i) s += (i ? "#" : "") + to_string(lc.parts()[i]);
            return s;
        }
    }
    return {};
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view t) : t_(t) {}

    LinkClass parse() {
        LinkClass lc = sum();
        while (accept('+')) {
            expect('O');
            lc = LinkClass::plus_trivial(lc);
        }
        skip();
        if (i_ != t_.size()) fail("trailing input");
        return lc;
    }

private:
    LinkClass sum() {
        LinkClass lc = atom();
        while (accept('#')) lc = LinkClass::conn_sum(lc, atom());
        return lc;
    }

    LinkClass atom() {
        skip();
        if (i_ >= t_.size()) fail("unexpected end");
        char c = t_[i_++];
        switch (c) {
            case 'O': return LinkClass::unknot();
            case 'T': {
                auto a = args();
                if (a.size() != 2 || a[0] != 2) fail("expected T(2,n)");
                return LinkClass::torus(a[1]);
            }
            case 'C': {
                auto a = args();
                if (a.size() != 2) fail("expected C(r,s)");
                return LinkClass::clasp(a[0], a[1]);
            }
            case 'K': {
                auto a = args();
                if (a.size() != 3) fail("expected K(a,b,c)");
                return LinkClass::pretzel(a[0], a[1], a[2]);
            }
            case 'F': {
                auto a = args();
                if (a.size() != 4) fail("expected F(p,q,r,s)");
                return LinkClass::family({a[0], a[1], a[2], a[3]});
            }
            default: fail(std::string("unexpected '") + c + "'");
        }
        return {};
    }

    std::vector<int> args() {
        expect('(');
        std::vector<int> out;
        do {
            skip();
            std::size_t start = i_;
            if (i_ < t_.size() && (t_[i_] == '-' || t_[i_] == '+')) ++i_;
            while (i_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[i_]))) ++i_;
            std::string num(t_.substr(start, i_ - start));
            if (num.empty() || num == "-" || num == "+") fail("expected integer");
            try {
                out.push_back(std::stoi(num));
            } catch (const std::exception&) {
                fail("integer out of range");
            }
        } while (accept(','));
        expect(')');
        return out;
    }

    void skip() {
        while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
    }
    bool accept(char c) {
        skip();
        if (i_ < t_.size() && t_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("cannot parse link class '" + std::string(t_) + "': " + why);
    }

    std::string_view t_;
    std::size_t i_ = 0;
};

}  // namespace

LinkClass parse_link_class(std::string_view text) { return Parser(text).parse(); }

std::pair<LinkClass, LinkClass> clasp_to_pretzel(int r, int s) {
    if (std::abs(r) <= 1 || std::abs(s) <= 1)
        throw std::invalid_argument("clasp_to_pretzel needs |r| > 1 and |s| > 1");
    return {LinkClass::pretzel(r + 1, -1, s + 1), LinkClass::pretzel(r - 1, 1, s - 1)};
}

int component_count(const LinkClass& lc) {
    using K = LinkClass::Kind;
    const auto& v = lc.params();
    switch (lc.kind()) {
        case K::Unknot: return 1;
        case K::Unlink2: return 2;
        case K::Torus: return v[0] % 2 == 0 ? 2 : 1;
        case K::Clasp: return (v[0] % 2 != 0 && v[1] % 2 != 0) ? 2 : 1;
        case K::Pretzel: {
            int even = static_cast<int>(std::count_if(v.begin(), v.end(), [](int x) { return x % 2 == 0; }));
            return even <= 1 ? 1 : even;
        }
        case K::PlusTrivial: return component_count(lc.parts()[0]) + 1;
        case K::ConnSum: {
            int n = 1;
            for (const auto& p : lc.parts()) n += component_count(p) - 1;
            return n;
        }
        case K::Family: return build_diagram(lc).component_count();
    }
    return 1;
}

int standard_crossings(const LinkClass& lc) {
    int n = 0;
    for (int x : lc.params()) n += std::abs(x);
    for (const auto& p : lc.parts()) n += standard_crossings(p);
    return n;
}

}  // namespace recomb
