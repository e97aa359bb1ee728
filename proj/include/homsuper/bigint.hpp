#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "homsuper/errors.hpp"

namespace homsuper {

/// Arbitrary-precision signed integer. Sign-magnitude, little-endian 32-bit
/// limbs, no trailing zero limbs; zero has sign 0 and an empty magnitude.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // two limbs cover the full unsigned 64-bit magnitude, INT64_MIN included
        auto u = static_cast<std::uint64_t>(v < 0 ? -(v + 1) : v);
        if (v < 0) u += 1;
        mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffu));
        if (u >> 32) mag_.push_back(static_cast<std::uint32_t>(u >> 32));
    }

    explicit BigInt(std::string_view s) {
        std::size_t i = 0;
        int sign = 1;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -1;
            ++i;
        }
        if (i == s.size()) throw structural_error("BigInt: empty numeral");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw structural_error("BigInt: invalid digit in numeral");
            mul_small_inplace(mag_, 10);
            add_small_inplace(mag_, static_cast<std::uint32_t>(s[i] - '0'));
        }
        sign_ = mag_.empty() ? 0 : sign;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    bool is_negative() const { return sign_ < 0; }
    int sgn() const { return sign_; }

    friend BigInt operator-(BigInt a) {
        a.sign_ = -a.sign_;
        return a;
    }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.mag_ = mul_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    /// Truncated division: q = trunc(a/b), r = a - q*b (r has the sign of a).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw arithmetic_error("BigInt: division by zero");
        if (a.sign_ == 0) {
            q = BigInt();
            r = BigInt();
            return;
        }
        std::vector<std::uint32_t> qm, rm;
        divmod_mag(a.mag_, b.mag_, qm, rm);
        q.mag_ = std::move(qm);
        r.mag_ = std::move(rm);
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }

    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
    BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
    BigInt& operator*=(const BigInt& b) { return *this = *this * b; }
    BigInt& operator/=(const BigInt& b) { return *this = *this / b; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        int c = cmp_mag(a.mag_, b.mag_) * (a.sign_ < 0 ? -1 : 1);
        return c <=> 0;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<std::uint32_t> m = mag_;
        std::string digits;
        while (!m.empty()) {
            std::uint32_t rem = divmod_small_inplace(m, 1000000000u);
            std::string grp = std::to_string(rem);
            if (!m.empty()) grp.insert(0, 9 - grp.size(), '0');
            digits.insert(0, grp);
        }
        return sign_ < 0 ? "-" + digits : digits;
    }

    /// Throws if the value does not fit.
    long long to_long_long() const {
        if (mag_.size() > 2) throw structural_error("BigInt: value too large for long long");
        std::uint64_t u = 0;
        if (mag_.size() >= 1) u = mag_[0];
        if (mag_.size() == 2) u |= static_cast<std::uint64_t>(mag_[1]) << 32;
        if (sign_ >= 0) {
            if (u > 0x7fffffffffffffffull)
                throw structural_error("BigInt: value too large for long long");
            return static_cast<long long>(u);
        }
        if (u > 0x8000000000000000ull)
            throw structural_error("BigInt: value too large for long long");
        return u == 0x8000000000000000ull ? std::numeric_limits<long long>::min()
                                          : -static_cast<long long>(u);
    }

    friend BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.mag_.empty() ? 0 : 1;
        b.sign_ = b.mag_.empty() ? 0 : 1;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    friend BigInt lcm(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return BigInt();
        BigInt g = gcd(a, b);
        return (a.abs() / g) * b.abs();
    }

    friend BigInt pow(const BigInt& base, unsigned long long e) {
        BigInt acc(1), sq = base;
        while (e) {
            if (e & 1) acc *= sq;
            if (e >>= 1) sq *= sq;
        }
        return acc;
    }

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    static void trim(std::vector<std::uint32_t>& m) {
        while (!m.empty() && m.back() == 0) m.pop_back();
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r(big.size() + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < big.size(); ++i) {
            std::uint64_t cur = carry + big[i] + (i < small.size() ? small[i] : 0u);
            r[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        r[big.size()] = static_cast<std::uint32_t>(carry);
        trim(r);
        return r;
    }

    // requires a >= b
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size(), 0);
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += (std::int64_t{1} << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(cur);
        }
        trim(r);
        return r;
    }

    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t cur = r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j] + carry;
                r[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t k = i + b.size();
            while (carry) {
                std::uint64_t cur = r[k] + carry;
                r[k] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        trim(r);
        return r;
    }

    static void mul_small_inplace(std::vector<std::uint32_t>& m, std::uint32_t f) {
        std::uint64_t carry = 0;
        for (auto& limb : m) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * f + carry;
            limb = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) m.push_back(static_cast<std::uint32_t>(carry));
    }

    static void add_small_inplace(std::vector<std::uint32_t>& m, std::uint32_t v) {
        std::uint64_t carry = v;
        for (auto& limb : m) {
            if (!carry) return;
            std::uint64_t cur = limb + carry;
            limb = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) m.push_back(static_cast<std::uint32_t>(carry));
    }

    static std::uint32_t divmod_small_inplace(std::vector<std::uint32_t>& m, std::uint32_t d) {
        std::uint64_t rem = 0;
        for (std::size_t i = m.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        trim(m);
        return static_cast<std::uint32_t>(rem);
    }

    static std::size_t bit_length(const std::vector<std::uint32_t>& m) {
        if (m.empty()) return 0;
        std::uint32_t top = m.back();
        std::size_t bits = (m.size() - 1) * 32;
        while (top) {
            ++bits;
            top >>= 1;
        }
        return bits;
    }

    static bool get_bit(const std::vector<std::uint32_t>& m, std::size_t i) {
        return (m[i / 32] >> (i % 32)) & 1u;
    }

    static void shl1_inplace(std::vector<std::uint32_t>& m) {
        std::uint32_t carry = 0;
        for (auto& limb : m) {
            std::uint32_t next = limb >> 31;
            limb = (limb << 1) | carry;
            carry = next;
        }
        if (carry) m.push_back(carry);
    }

    // requires a >= b in-place subtraction
    static void sub_mag_inplace(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += (std::int64_t{1} << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            a[i] = static_cast<std::uint32_t>(cur);
        }
        trim(a);
    }

    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
        q.clear();
        r.clear();
        if (cmp_mag(a, b) < 0) {
            r = a;
            trim(r);
            return;
        }
        if (b.size() == 1) {
            q = a;
            std::uint64_t rem = 0;
            for (std::size_t i = q.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | q[i];
                q[i] = static_cast<std::uint32_t>(cur / b[0]);
                rem = cur % b[0];
            }
            trim(q);
            if (rem) r.push_back(static_cast<std::uint32_t>(rem));
            return;
        }
        // bitwise long division; operand sizes here stay tiny
        q.assign(a.size(), 0);
        for (std::size_t i = bit_length(a); i-- > 0;) {
            shl1_inplace(r);
            if (get_bit(a, i)) {
                if (r.empty()) r.push_back(1);
                else r[0] |= 1u;
            }
            if (cmp_mag(r, b) >= 0) {
                sub_mag_inplace(r, b);
                q[i / 32] |= (1u << (i % 32));
            }
        }
        trim(q);
        trim(r);
    }
};

} // namespace homsuper
