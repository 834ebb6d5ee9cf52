#include "recomb/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace recomb {

LaurentPoly LaurentPoly::monomial(int exponent, std::int64_t coef) {
    LaurentPoly p;
    p.add_term(exponent, coef);
    return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, std::int64_t>>& terms) {
    LaurentPoly p;
    for (auto [e, c] : terms) p.add_term(e, c);
    return p;
}

std::int64_t LaurentPoly::coef(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

void LaurentPoly::add_term(int exponent, std::int64_t coef) {
    if (coef == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::mirrored() const {
    LaurentPoly p;
    for (auto [e, c] : terms_) p.terms_.emplace(-e, c);
    return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly p;
    for (auto [e, c] : terms_) p.terms_.emplace(e + k, c);
    return p;
}

LaurentPoly LaurentPoly::scaled(std::int64_t c) const {
    LaurentPoly p;
    if (c == 0) return p;
    for (auto [e, v] : terms_) p.terms_.emplace(e, v * c);
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (auto [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    for (auto [ea, ca] : a.terms_)
        for (auto [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
    return p;
}

std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b) {
    return std::lexicographical_compare_three_way(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                                                  b.terms_.end());
}

std::string LaurentPoly::to_string(std::string_view var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [e, c] = *it;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        std::int64_t m = c < 0 ? -c : c;
        if (e == 0) {
            os << m;
        } else {
            if (m != 1) os << m << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

}  // namespace recomb
