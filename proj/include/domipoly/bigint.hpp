#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace domipoly {

// Arbitrary-precision signed integer: sign + magnitude, 32-bit limbs,
// little-endian. Covers exactly what exact polynomial arithmetic over Z
// needs (add, subtract, multiply, compare, decimal I/O); no division
// beyond the small-divisor helper used for printing.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long value);

    // Parses an optionally signed decimal literal. Throws parse_error.
    static BigInt from_decimal(std::string_view text);

    bool is_zero() const { return limbs_.empty(); }
    int sign() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }

    std::string to_string() const;

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);

    friend BigInt operator+(BigInt lhs, const BigInt& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend BigInt operator-(BigInt lhs, const BigInt& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend BigInt operator*(const BigInt& lhs, const BigInt& rhs);

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
    }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

private:
    bool negative_ = false;              // zero is stored non-negative
    std::vector<std::uint32_t> limbs_;   // no trailing zero limb

    void trim();

    // magnitude helpers, signs ignored
    static int cmp_mag(const BigInt& a, const BigInt& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);

    void add_signed(const BigInt& rhs, bool rhs_negative);
    void mul_small(std::uint32_t factor);
    void add_small(std::uint32_t addend);
    std::uint32_t divmod_small(std::uint32_t divisor);  // in place, returns remainder
};

}  // namespace domipoly
