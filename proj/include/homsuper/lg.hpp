#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "homsuper/errors.hpp"
#include "homsuper/grading.hpp"
#include "homsuper/scalar.hpp"

namespace homsuper {

/// Element of the Laurent-Grassmann superalgebra: an even part (span of t^n)
/// and an odd part (span of theta*t^n), both as sparse exponent maps.
/// t is invertible, theta^2 = 0, and t and theta commute.
class LGElement {
public:
    using Map = std::map<long long, Scalar>;

    LGElement() = default;

    static LGElement t_power(long long n) {
        LGElement e;
        e.even_[n] = Scalar(1);
        return e;
    }

    static LGElement theta_t(long long n) {
        LGElement e;
        e.odd_[n] = Scalar(1);
        return e;
    }

    static LGElement one() { return t_power(0); }

    const Map& even() const { return even_; }
    const Map& odd() const { return odd_; }

    bool is_zero() const { return even_.empty() && odd_.empty(); }

    void add_even(long long n, const Scalar& c) { add(even_, n, c); }
    void add_odd(long long n, const Scalar& c) { add(odd_, n, c); }

    friend LGElement operator+(const LGElement& a, const LGElement& b) {
        LGElement r = a;
        for (const auto& [n, c] : b.even_) r.add_even(n, c);
        for (const auto& [n, c] : b.odd_) r.add_odd(n, c);
        return r;
    }

    friend LGElement operator-(const LGElement& a, const LGElement& b) {
        LGElement r = a;
        for (const auto& [n, c] : b.even_) r.add_even(n, -c);
        for (const auto& [n, c] : b.odd_) r.add_odd(n, -c);
        return r;
    }

    friend LGElement operator-(const LGElement& a) {
        LGElement r;
        for (const auto& [n, c] : a.even_) r.even_[n] = -c;
        for (const auto& [n, c] : a.odd_) r.odd_[n] = -c;
        return r;
    }

    friend LGElement operator*(const Scalar& f, const LGElement& a) {
        LGElement r;
        if (f.is_zero()) return r;
        for (const auto& [n, c] : a.even_) r.add_even(n, f * c);
        for (const auto& [n, c] : a.odd_) r.add_odd(n, f * c);
        return r;
    }

    friend bool operator==(const LGElement& a, const LGElement& b) {
        return a.even_ == b.even_ && a.odd_ == b.odd_;
    }

    /// Parity if homogeneous; zero counts as even.
    std::optional<Parity> homogeneous_parity() const {
        if (odd_.empty()) return Parity::even;
        if (even_.empty()) return Parity::odd;
        return std::nullopt;
    }

    /// Invertible elements are the nonzero scalar multiples of a single t^n.
    bool is_unit() const { return odd_.empty() && even_.size() == 1; }

    static std::string monomial_name(Parity p, long long n) {
        if (p == Parity::even) {
            if (n == 0) return "1";
            if (n == 1) return "t";
            return "t^" + std::to_string(n);
        }
        if (n == 0) return "theta";
        if (n == 1) return "theta*t";
        return "theta*t^" + std::to_string(n);
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        auto emit = [&out](const Scalar& c, const std::string& mono) {
            std::string term;
            if (mono == "1") term = c.to_coeff_string();
            else if (c.is_one()) term = mono;
            else if ((-c).is_one()) term = "-" + mono;
            else term = c.to_coeff_string() + "*" + mono;
            if (out.empty()) out = term;
            else if (term.front() == '-') out += " - " + term.substr(1);
            else out += " + " + term;
        };
        for (const auto& [n, c] : even_) emit(c, monomial_name(Parity::even, n));
        for (const auto& [n, c] : odd_) emit(c, monomial_name(Parity::odd, n));
        return out;
    }

private:
    Map even_;
    Map odd_;

    static void add(Map& m, long long n, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = m.find(n);
        if (it == m.end()) {
            m[n] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) m.erase(it);
        }
    }
};

/// Supercommutative product: t^n t^m = t^{n+m}, t^n (theta t^m) = theta t^{n+m},
/// (theta t^n)(theta t^m) = 0.
inline LGElement lg_multiply(const LGElement& a, const LGElement& b) {
    LGElement r;
    for (const auto& [n, cn] : a.even())
        for (const auto& [m, cm] : b.even()) r.add_even(n + m, cn * cm);
    for (const auto& [n, cn] : a.even())
        for (const auto& [m, cm] : b.odd()) r.add_odd(n + m, cn * cm);
    for (const auto& [n, cn] : a.odd())
        for (const auto& [m, cm] : b.even()) r.add_odd(n + m, cn * cm);
    // odd * odd dies on theta^2 = 0
    return r;
}

/// Monomial endomorphism: t^n -> s_t^n t^n, theta t^n -> s_theta s_t^n theta t^n.
/// s_t must be nonzero so the image of the unit t stays invertible.
struct MonomialEndo {
    Scalar s_t;
    Scalar s_theta;

    MonomialEndo(Scalar st, Scalar stheta) : s_t(std::move(st)), s_theta(std::move(stheta)) {
        if (s_t.is_zero()) throw structural_error("MonomialEndo: image scale of t must be nonzero");
    }
};

inline LGElement apply_endo(const MonomialEndo& s, const LGElement& a) {
    LGElement r;
    for (const auto& [n, c] : a.even()) r.add_even(n, c * pow(s.s_t, n));
    for (const auto& [n, c] : a.odd()) r.add_odd(n, c * s.s_theta * pow(s.s_t, n));
    return r;
}

/// Monomial-diagonal derivation: Delta(t^n) = d_even(n) t^n,
/// Delta(theta t^n) = d_odd(n) theta t^n. Every map used in scope is even.
struct DiagonalDerivation {
    std::function<Scalar(long long)> d_even;
    std::function<Scalar(long long)> d_odd;
    Parity parity = Parity::even;
};

inline LGElement apply_derivation(const DiagonalDerivation& d, const LGElement& a) {
    LGElement r;
    for (const auto& [n, c] : a.even()) r.add_even(n, c * d.d_even(n));
    for (const auto& [n, c] : a.odd()) r.add_odd(n, c * d.d_odd(n));
    return r;
}

} // namespace homsuper
