#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace recomb {

// Integer Laurent polynomial; zero coefficients are never stored.
class LaurentPoly {
public:
    using Terms = std::map<int, std::int64_t>;

    LaurentPoly() = default;
    static LaurentPoly monomial(int exponent, std::int64_t coef = 1);
    static LaurentPoly from_terms(const std::vector<std::pair<int, std::int64_t>>& terms);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::int64_t coef(int exponent) const;
    int min_exponent() const;
    int max_exponent() const;
    int span() const { return is_zero() ? 0 : max_exponent() - min_exponent(); }

    void add_term(int exponent, std::int64_t coef);

    LaurentPoly mirrored() const;  // x -> 1/x
    LaurentPoly shifted(int k) const;
    LaurentPoly scaled(std::int64_t c) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    // Lexicographic on the ascending (exponent, coefficient) sequence.
    friend std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b);

    std::string to_string(std::string_view var = "A") const;

private:
    Terms terms_;
};

}  // namespace recomb
