#pragma once

#include <string>

#include "homsuper/bigint.hpp"
#include "homsuper/errors.hpp"

namespace homsuper {

/// Exact rational number over BigInt. Always reduced: denominator > 0,
/// gcd(|num|, den) = 1, zero stored as 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}

    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw arithmetic_error("Rational: zero denominator");
        reduce();
    }

    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    bool is_negative() const { return num_.is_negative(); }
    int sgn() const { return num_.sgn(); }

    friend Rational operator-(Rational a) {
        a.num_ = -a.num_;
        return a;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw arithmetic_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    Rational inverse() const {
        if (is_zero()) throw arithmetic_error("Rational: inverse of zero");
        return Rational(den_, num_);
    }

    /// v^e with e in Z; negative exponents require v != 0.
    friend Rational pow(const Rational& base, long long e) {
        if (e >= 0) {
            return Rational(pow(base.num_, static_cast<unsigned long long>(e)),
                            pow(base.den_, static_cast<unsigned long long>(e)));
        }
        if (base.is_zero()) throw evaluation_error("Rational: 0 raised to a negative power");
        return pow(base.inverse(), -e);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string to_string() const {
        std::string s = num_.to_string();
        if (!den_.is_one()) s += "/" + den_.to_string();
        return s;
    }

private:
    BigInt num_;
    BigInt den_;

    void reduce() {
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        if (den_.is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ /= g;
            den_ /= g;
        }
    }
};

} // namespace homsuper
