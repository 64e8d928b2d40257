#include "domipoly/poly.hpp"

#include <cctype>
#include <sstream>

#include "domipoly/errors.hpp"

namespace domipoly {

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const BigInt& Polynomial::coeff(std::size_t i) const {
    static const BigInt zero;
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

std::size_t Polynomial::lowest_nonzero_degree() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return i;
    throw std::logic_error("lowest_nonzero_degree of the zero polynomial");
}

Polynomial Polynomial::monomial(std::size_t degree, BigInt coefficient) {
    Polynomial out;
    if (coefficient.is_zero()) return out;
    out.coeffs_.assign(degree + 1, BigInt());
    out.coeffs_[degree] = std::move(coefficient);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    Polynomial out;
    if (lhs.is_zero() || rhs.is_zero()) return out;
    out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, BigInt());
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    out.normalize();
    return out;
}

Polynomial Polynomial::pow(std::size_t k) const {
    Polynomial result = one();
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::binomial_power(std::size_t k) {
    std::vector<BigInt> row{BigInt(1)};
    for (std::size_t step = 1; step <= k; ++step) {
        std::vector<BigInt> next(step + 1);
        next[0] = 1;
        next[step] = 1;
        for (std::size_t i = 1; i < step; ++i) next[i] = row[i - 1] + row[i];
        row = std::move(next);
    }
    return Polynomial(std::move(row));
}

std::string Polynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        const bool unit = coeffs_[i] == BigInt(1);
        if (i == 0) {
            out << coeffs_[i].to_string();
        } else {
            if (!unit) out << coeffs_[i].to_string();
            out << 'x';
            if (i > 1) out << '^' << i;
        }
    }
    return out.str();
}

namespace {

void skip_ws(std::string_view s, std::size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

}  // namespace

Polynomial Polynomial::parse(std::string_view text) {
    std::size_t pos = 0;
    skip_ws(text, pos);
    if (pos == text.size()) throw parse_error("empty polynomial");

    Polynomial out;
    bool expect_term = true;
    while (pos < text.size()) {
        if (!expect_term) {
            if (text[pos] != '+')
                throw parse_error("expected '+' in polynomial at position " +
                                  std::to_string(pos));
            ++pos;
            skip_ws(text, pos);
        }
        // term: [sign][digits] ['x' ['^' digits]]
        std::size_t start = pos;
        BigInt coefficient(1);
        bool negate = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            negate = text[pos] == '-';
            ++pos;
            skip_ws(text, pos);
        }
        std::size_t digits_begin = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        bool have_digits = pos > digits_begin;
        if (have_digits)
            coefficient = BigInt::from_decimal(text.substr(digits_begin, pos - digits_begin));
        std::size_t power = 0;
        if (pos < text.size() && text[pos] == 'x') {
            ++pos;
            power = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                std::size_t exp_begin = pos;
                while (pos < text.size() &&
                       std::isdigit(static_cast<unsigned char>(text[pos])))
                    ++pos;
                if (pos == exp_begin)
                    throw parse_error("missing exponent after '^'");
                std::string digits(text.substr(exp_begin, pos - exp_begin));
                if (digits.size() > 7)
                    throw parse_error("exponent out of range: " + digits);
                power = std::stoull(digits);
            }
        } else if (!have_digits) {
            throw parse_error("expected polynomial term at position " +
                              std::to_string(start));
        }
        if (negate) coefficient = -coefficient;
        out += monomial(power, std::move(coefficient));
        skip_ws(text, pos);
        expect_term = false;
    }
    return out;
}

}  // namespace domipoly
