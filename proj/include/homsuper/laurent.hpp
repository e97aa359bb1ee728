#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "homsuper/errors.hpp"
#include "homsuper/rational.hpp"

namespace homsuper {

/// Laurent polynomial in one formal parameter over Rational: a finite map
/// exponent -> nonzero coefficient. The zero polynomial is the empty map.
/// The parameter name is engaged only while a term with nonzero exponent
/// exists, so constants compare equal regardless of where they were built.
class LaurentPoly {
public:
    using Map = std::map<long long, Rational>;

    LaurentPoly() = default;

    LaurentPoly(Rational c) {
        if (!c.is_zero()) coeffs_[0] = std::move(c);
    }

    LaurentPoly(long long c) : LaurentPoly(Rational(c)) {}

    static LaurentPoly monomial(Rational c, long long exp, std::optional<std::string> param) {
        LaurentPoly p;
        if (!c.is_zero()) {
            p.coeffs_[exp] = std::move(c);
            if (exp != 0) {
                if (!param) throw structural_error("LaurentPoly: monomial with exponent needs a parameter name");
                p.param_ = std::move(param);
            }
        }
        return p;
    }

    const Map& coeffs() const { return coeffs_; }
    const std::optional<std::string>& param() const { return param_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0); }
    bool is_one() const { return is_constant() && !is_zero() && coeffs_.begin()->second.is_one(); }

    Rational constant_value() const {
        if (is_zero()) return Rational();
        return coeffs_.begin()->second;
    }

    long long min_exp() const {
        if (is_zero()) throw structural_error("LaurentPoly: min_exp of zero polynomial");
        return coeffs_.begin()->first;
    }

    long long max_exp() const {
        if (is_zero()) throw structural_error("LaurentPoly: max_exp of zero polynomial");
        return coeffs_.rbegin()->first;
    }

    const Rational& leading_coeff() const {
        if (is_zero()) throw structural_error("LaurentPoly: leading coefficient of zero polynomial");
        return coeffs_.rbegin()->second;
    }

    Rational coeff(long long exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? Rational() : it->second;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        r.param_ = merge_params(a, b);
        for (const auto& [e, c] : b.coeffs_) r.add_term(e, c);
        r.refresh_param();
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        r.param_ = merge_params(a, b);
        for (const auto& [e, c] : b.coeffs_) r.add_term(e, -c);
        r.refresh_param();
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r;
        r.param_ = a.param_;
        for (const auto& [e, c] : a.coeffs_) r.coeffs_[e] = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        r.param_ = merge_params(a, b);
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
        r.refresh_param();
        return r;
    }

    LaurentPoly scaled(const Rational& f) const {
        LaurentPoly r;
        if (f.is_zero()) return r;
        r.param_ = param_;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e] = c * f;
        return r;
    }

    /// Multiply by parameter^k.
    LaurentPoly shifted(long long k) const {
        if (k == 0 || is_zero()) return *this;
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
        r.param_ = param_;
        r.refresh_param();
        if (!r.param_ && !r.is_constant())
            throw structural_error("LaurentPoly: shift of an anonymous constant needs a parameter name");
        return r;
    }

    /// Like shifted() but gives the result a name when the input was an
    /// anonymous constant.
    LaurentPoly shifted(long long k, const std::optional<std::string>& param) const {
        if (k == 0) return *this;
        LaurentPoly r = *this;
        if (!r.param_) r.param_ = param;
        return r.shifted(k);
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeffs_ == b.coeffs_ && a.param_ == b.param_;
    }

    /// Substitute the parameter. Negative exponents require v != 0.
    Rational eval(const Rational& v) const {
        Rational acc;
        for (const auto& [e, c] : coeffs_) {
            if (e < 0 && v.is_zero())
                throw evaluation_error("LaurentPoly: negative exponent at 0");
            acc += c * pow(v, e);
        }
        return acc;
    }

    /// gcd of numerators / lcm of denominators; positive. Zero for the zero poly.
    friend Rational content(const LaurentPoly& p) {
        BigInt num_gcd, den_lcm(1);
        for (const auto& [e, c] : p.coeffs_) {
            num_gcd = gcd(num_gcd, c.numerator());
            den_lcm = lcm(den_lcm, c.denominator());
        }
        if (num_gcd.is_zero()) return Rational();
        return Rational(num_gcd, den_lcm);
    }

private:
    Map coeffs_;
    std::optional<std::string> param_;

    void add_term(long long e, const Rational& c) {
        if (c.is_zero()) return;
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    void refresh_param() {
        if (is_constant()) param_.reset();
    }

    static std::optional<std::string> merge_params(const LaurentPoly& a, const LaurentPoly& b) {
        if (!a.param_) return b.param_;
        if (!b.param_) return a.param_;
        if (*a.param_ != *b.param_)
            throw structural_error("LaurentPoly: mixed parameters '" + *a.param_ + "' and '" + *b.param_ + "'");
        return a.param_;
    }
};

/// Quotient and remainder of ordinary polynomials (min_exp >= 0) over Q.
inline std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw arithmetic_error("poly_divmod: division by zero polynomial");
    if ((!a.is_zero() && a.min_exp() < 0) || b.min_exp() < 0)
        throw structural_error("poly_divmod: operands must be ordinary polynomials");
    LaurentPoly q, r = a;
    const long long db = b.max_exp();
    const std::optional<std::string> name = b.param() ? b.param() : a.param();
    while (!r.is_zero() && r.max_exp() >= db) {
        Rational f = r.leading_coeff() / b.leading_coeff();
        long long e = r.max_exp() - db;
        LaurentPoly t = LaurentPoly::monomial(f, e, e == 0 ? std::optional<std::string>() : name);
        q = q + t;
        r = r - t * b;
    }
    return {q, r};
}

/// Exact division; throws if the remainder is nonzero.
inline LaurentPoly poly_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw arithmetic_error("poly_div_exact: division is not exact");
    return q;
}

/// Integer-primitive part: coefficients scaled so they are coprime integers.
/// Leading-coefficient sign preserved.
inline LaurentPoly primitive_part(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(content(p).inverse());
}

/// Monic gcd convention: result is integer-primitive with positive leading
/// coefficient; gcd(0, b) = normalized b; gcd(0, 0) = 0.
inline LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly A = primitive_part(a), B = primitive_part(b);
    while (!B.is_zero()) {
        LaurentPoly R = poly_divmod(A, B).second;
        A = std::move(B);
        B = primitive_part(R);
    }
    if (A.is_zero()) return A;
    if (A.leading_coeff().is_negative()) A = A.scaled(Rational(-1));
    return A;
}

} // namespace homsuper
