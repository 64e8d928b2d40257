#include "domipoly/bigint.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "domipoly/errors.hpp"

namespace domipoly {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long value) {
    negative_ = value < 0;
    // avoid UB on LLONG_MIN
    std::uint64_t mag = negative_ ? ~static_cast<std::uint64_t>(value) + 1
                                  : static_cast<std::uint64_t>(value);
    while (mag != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
        mag >>= 32;
    }
    if (limbs_.empty()) negative_ = false;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& longer = a.size() >= b.size() ? a : b;
    const auto& shorter = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> out(longer.size());
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < longer.size(); ++i) {
        std::uint64_t sum = carry + longer[i] + (i < shorter.size() ? shorter[i] : 0u);
        out[i] = static_cast<std::uint32_t>(sum & 0xffffffffu);
        carry = sum >> 32;
    }
    if (carry) out.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow -
                            (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (diff < 0) {
            diff += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<std::uint32_t>(diff);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

void BigInt::add_signed(const BigInt& rhs, bool rhs_negative) {
    if (rhs.limbs_.empty()) return;
    if (limbs_.empty()) {
        limbs_ = rhs.limbs_;
        negative_ = rhs_negative;
        return;
    }
    if (negative_ == rhs_negative) {
        limbs_ = add_mag(limbs_, rhs.limbs_);
        return;
    }
    int c = cmp_mag(*this, rhs);
    if (c == 0) {
        limbs_.clear();
        negative_ = false;
    } else if (c > 0) {
        limbs_ = sub_mag(limbs_, rhs.limbs_);
    } else {
        limbs_ = sub_mag(rhs.limbs_, limbs_);
        negative_ = rhs_negative;
    }
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    add_signed(rhs, rhs.negative_);
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
    add_signed(rhs, !rhs.negative_);
    return *this;
}

BigInt operator*(const BigInt& lhs, const BigInt& rhs) {
    BigInt out;
    if (lhs.limbs_.empty() || rhs.limbs_.empty()) return out;
    out.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < lhs.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t a = lhs.limbs_[i];
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            std::uint64_t cur = out.limbs_[i + j] + a * rhs.limbs_[j] + carry;
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        out.limbs_[i + rhs.limbs_.size()] = static_cast<std::uint32_t>(carry);
    }
    out.negative_ = lhs.negative_ != rhs.negative_;
    out.trim();
    return out;
}

BigInt& BigInt::operator*=(const BigInt& rhs) {
    *this = *this * rhs;
    return *this;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    if (!out.limbs_.empty()) out.negative_ = !out.negative_;
    return out;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.sign() != b.sign()) return a.sign() <=> b.sign();
    int c = BigInt::cmp_mag(a, b);
    if (a.sign() < 0) c = -c;
    return c <=> 0;
}

void BigInt::mul_small(std::uint32_t factor) {
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        std::uint64_t cur = static_cast<std::uint64_t>(limb) * factor + carry;
        limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
        carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    trim();
}

void BigInt::add_small(std::uint32_t addend) {
    std::uint64_t carry = addend;
    for (std::size_t i = 0; carry != 0 && i < limbs_.size(); ++i) {
        std::uint64_t cur = limbs_[i] + carry;
        limbs_[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
        carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
}

std::uint32_t BigInt::divmod_small(std::uint32_t divisor) {
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

std::string BigInt::to_string() const {
    if (limbs_.empty()) return "0";
    std::string out;
    BigInt work = *this;
    std::vector<std::uint32_t> chunks;
    while (!work.limbs_.empty()) chunks.push_back(work.divmod_small(1000000000u));
    out = std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    if (negative_) out.insert(out.begin(), '-');
    return out;
}

BigInt BigInt::from_decimal(std::string_view text) {
    std::size_t pos = 0;
    bool neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        neg = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) throw parse_error("empty integer literal");
    BigInt out;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw parse_error("bad digit in integer literal: '" + std::string(text) + "'");
        out.mul_small(10);
        out.add_small(static_cast<std::uint32_t>(c - '0'));
    }
    out.negative_ = neg && !out.limbs_.empty();
    return out;
}

}  // namespace domipoly
