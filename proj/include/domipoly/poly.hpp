#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "domipoly/bigint.hpp"

namespace domipoly {

// Dense univariate polynomial over arbitrary-precision integers; the value
// type for every domination polynomial in this library. coeff(i) is the
// coefficient of x^i, which for a domination polynomial of a graph is the
// number of dominating sets of size i.
//
// Normal form: no trailing zero coefficient is stored and the zero
// polynomial keeps an empty coefficient vector. Equality is coefficient-wise.
class Polynomial {
public:
    Polynomial() = default;  // zero
    explicit Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
        normalize();
    }

    static Polynomial one() { return monomial(0); }
    static Polynomial monomial(std::size_t degree, BigInt coefficient = 1);

    // (1+x)^k with exact binomial coefficients, built by the Pascal-row
    // recurrence (additions only).
    static Polynomial binomial_power(std::size_t k);

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is reported as 0
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const BigInt& coeff(std::size_t i) const;
    std::span<const BigInt> coeffs() const { return coeffs_; }

    // index of the lowest nonzero coefficient; for a domination polynomial
    // this is the domination number. Requires a nonzero polynomial.
    std::size_t lowest_nonzero_degree() const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

    // p^k by repeated squaring; p^0 == 1 including for p == 0
    Polynomial pow(std::size_t k) const;

    // Ascending-degree text, e.g. "2x + 6x^2 + 4x^3 + x^4". Zero terms are
    // omitted and a unit coefficient is omitted except on the constant term.
    std::string to_string() const;
    // Accepts the to_string format with free whitespace and terms in any
    // order; repeated powers accumulate. Throws parse_error.
    static Polynomial parse(std::string_view text);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<BigInt> coeffs_;

    void normalize();
};

}  // namespace domipoly
