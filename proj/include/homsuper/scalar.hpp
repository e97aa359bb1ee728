#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "homsuper/errors.hpp"
#include "homsuper/laurent.hpp"

namespace homsuper {

/// Element of the rational-function field Q(p) with Laurent exponents
/// allowed in the numerator. Canonical form:
///   - zero is 0/1;
///   - den is an ordinary polynomial (min exponent 0) with coprime integer
///     coefficients and positive leading coefficient;
///   - num and den share no polynomial factor (after shifting num's Laurent
///     offset into a monomial).
/// Equality of canonical forms is plain structural equality.
class Scalar {
public:
    Scalar() : num_(), den_(Rational(1)) {}
    Scalar(long long v) : num_(Rational(v)), den_(Rational(1)) {}
    Scalar(Rational v) : num_(std::move(v)), den_(Rational(1)) {}
    Scalar(LaurentPoly p) : num_(std::move(p)), den_(Rational(1)) { normalize(); }

    /// p^k for the named parameter.
    static Scalar parameter(const std::string& name, long long k = 1) {
        return Scalar(LaurentPoly::monomial(Rational(1), k, k == 0 ? std::optional<std::string>() : name));
    }

    static Scalar fraction(LaurentPoly num, LaurentPoly den) {
        if (den.is_zero()) throw arithmetic_error("Scalar: zero denominator");
        Scalar s;
        s.num_ = std::move(num);
        s.den_ = std::move(den);
        s.normalize();
        return s;
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    /// Engaged parameter name, if any survives normalization.
    std::optional<std::string> param() const {
        if (num_.param()) return num_.param();
        return den_.param();
    }

    friend Scalar operator-(const Scalar& a) {
        Scalar r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return fraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return fraction(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw arithmetic_error("Scalar: division by zero");
        return fraction(a.num_ * b.den_, a.den_ * b.num_);
    }

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    Scalar inverse() const {
        if (is_zero()) throw arithmetic_error("Scalar: inverse of zero");
        return fraction(den_, num_);
    }

    friend Scalar pow(const Scalar& base, long long e) {
        if (e < 0) return pow(base.inverse(), -e);
        Scalar acc(1), sq = base;
        while (e) {
            if (e & 1) acc *= sq;
            if (e >>= 1) sq *= sq;
        }
        return acc;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const {
        // show a Laurent offset in the numerator as a monomial denominator
        LaurentPoly shown_num = num_;
        LaurentPoly shown_den = den_;
        if (!num_.is_zero() && num_.min_exp() < 0) {
            long long k = -num_.min_exp();
            shown_num = num_.shifted(k);
            shown_den = den_.shifted(k, param());
        }
        if (shown_den.is_one()) return poly_to_string(shown_num);
        std::string ns = poly_to_string(shown_num);
        if (shown_num.coeffs().size() >= 2) ns = "(" + ns + ")";
        std::string ds = poly_to_string(shown_den);
        if (shown_den.coeffs().size() >= 2) ds = "(" + ds + ")";
        return ns + "/" + ds;
    }

    /// Rendering safe to place in front of "*<basis name>" in a combo.
    std::string to_coeff_string() const {
        std::string s = to_string();
        bool bare_sum = den_.is_one() && num_.coeffs().size() >= 2 && num_.min_exp() >= 0;
        if (bare_sum) s = "(" + s + ")";
        return s;
    }

    static std::string poly_to_string(const LaurentPoly& p) {
        if (p.is_zero()) return "0";
        const std::string name = p.param() ? *p.param() : "p";
        std::string out;
        for (const auto& [e, c] : p.coeffs()) {
            std::string term;
            if (e == 0) {
                term = c.to_string();
            } else {
                std::string mono = e == 1 ? name : name + "^" + std::to_string(e);
                if (c.is_one()) term = mono;
                else if ((-c).is_one()) term = "-" + mono;
                else term = c.to_string() + "*" + mono;
            }
            if (out.empty()) {
                out = term;
            } else if (term.front() == '-') {
                out += "-" + term.substr(1);
            } else {
                out += "+" + term;
            }
        }
        return out;
    }

private:
    LaurentPoly num_;
    LaurentPoly den_;

    void normalize() {
        if (num_.is_zero()) {
            den_ = LaurentPoly(Rational(1));
            return;
        }
        const std::optional<std::string> name = num_.param() ? num_.param() : den_.param();
        // peel the Laurent offsets; den becomes ordinary with nonzero constant term
        long long n0 = num_.min_exp();
        long long d0 = den_.min_exp();
        LaurentPoly N = num_.shifted(-n0, name);
        LaurentPoly D = den_.shifted(-d0, name);
        long long offset = n0 - d0;

        LaurentPoly g = poly_gcd(N, D);
        if (!g.is_one()) {
            N = poly_div_exact(N, g);
            D = poly_div_exact(D, g);
        }
        Rational f = content(D);
        if (D.leading_coeff().is_negative()) f = -f;
        if (!f.is_one()) {
            Rational inv = f.inverse();
            N = N.scaled(inv);
            D = D.scaled(inv);
        }
        num_ = offset == 0 ? N : N.shifted(offset, name);
        den_ = D;
    }
};

/// {n} = (1 - p^n) / (1 - p), built in expanded form; the fraction
/// definition agrees (see the unit tests). {0} = 0, {n} = 1 + p + ... + p^(n-1)
/// for n > 0, {-m} = -(p^-m + ... + p^-1).
inline Scalar q_number(long long n, const std::string& param = "q") {
    LaurentPoly p;
    if (n > 0) {
        for (long long k = 0; k < n; ++k)
            p = p + LaurentPoly::monomial(Rational(1), k, k == 0 ? std::optional<std::string>() : param);
    } else {
        for (long long k = n; k < 0; ++k)
            p = p + LaurentPoly::monomial(Rational(-1), k, param);
    }
    return Scalar(p);
}

/// Exact value of a at p = v. Throws evaluation_error on a pole or on a
/// negative exponent at v = 0.
inline Rational eval_at(const Scalar& a, const Rational& v) {
    Rational d = a.den().eval(v);
    if (d.is_zero()) throw evaluation_error("Scalar: pole at p = " + v.to_string());
    return a.num().eval(v) / d;
}

} // namespace homsuper
