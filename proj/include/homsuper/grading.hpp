#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homsuper/errors.hpp"
#include "homsuper/scalar.hpp"

namespace homsuper {

/// Z_2 degree of a homogeneous object.
enum class Parity : int { even = 0, odd = 1 };

inline Parity parity_sum(Parity a, Parity b) {
    return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}

/// |x||y| as an exponent in {0,1}.
inline int parity_product(Parity a, Parity b) {
    return static_cast<int>(a) * static_cast<int>(b);
}

/// (-1)^e for e >= 0.
inline int sign_pow(int e) { return e % 2 == 0 ? 1 : -1; }

/// Ordered basis of a Z_2-graded space; the order defines the
/// index <-> name bijection used everywhere else.
class SuperBasis {
public:
    int add(const std::string& name, Parity parity) {
        if (index_.count(name)) throw structural_error("SuperBasis: duplicate basis name '" + name + "'");
        entries_.emplace_back(name, parity);
        int idx = static_cast<int>(entries_.size()) - 1;
        index_[name] = idx;
        return idx;
    }

    int size() const { return static_cast<int>(entries_.size()); }

    const std::string& name(int i) const {
        check_index(i);
        return entries_[static_cast<std::size_t>(i)].first;
    }

    Parity parity(int i) const {
        check_index(i);
        return entries_[static_cast<std::size_t>(i)].second;
    }

    std::optional<int> index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool has_odd_part() const {
        for (const auto& [n, p] : entries_)
            if (p == Parity::odd) return true;
        return false;
    }

    void check_index(int i) const {
        if (i < 0 || i >= size())
            throw structural_error("SuperBasis: index " + std::to_string(i) + " out of range");
    }

    friend bool operator==(const SuperBasis& a, const SuperBasis& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::vector<std::pair<std::string, Parity>> entries_;
    std::map<std::string, int> index_;
};

/// Sparse coordinate vector over a SuperBasis; zero coordinates are never
/// stored. Homogeneity is a query, not a type distinction.
class Element {
public:
    using Map = std::map<int, Scalar>;

    Element() = default;

    static Element unit(int index) {
        Element e;
        e.coords_[index] = Scalar(1);
        return e;
    }

    static Element term(int index, Scalar c) {
        Element e;
        if (!c.is_zero()) e.coords_[index] = std::move(c);
        return e;
    }

    const Map& coords() const { return coords_; }
    bool is_zero() const { return coords_.empty(); }

    Scalar coeff(int index) const {
        auto it = coords_.find(index);
        return it == coords_.end() ? Scalar() : it->second;
    }

    void add_term(int index, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = coords_.find(index);
        if (it == coords_.end()) {
            coords_[index] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) coords_.erase(it);
        }
    }

    friend Element operator+(const Element& a, const Element& b) {
        Element r = a;
        for (const auto& [i, c] : b.coords_) r.add_term(i, c);
        return r;
    }

    friend Element operator-(const Element& a, const Element& b) {
        Element r = a;
        for (const auto& [i, c] : b.coords_) r.add_term(i, -c);
        return r;
    }

    friend Element operator-(const Element& a) {
        Element r;
        for (const auto& [i, c] : a.coords_) r.coords_[i] = -c;
        return r;
    }

    friend Element operator*(const Scalar& f, const Element& a) {
        Element r;
        if (f.is_zero()) return r;
        for (const auto& [i, c] : a.coords_) {
            Scalar s = f * c;
            if (!s.is_zero()) r.coords_[i] = std::move(s);
        }
        return r;
    }

    Element& operator+=(const Element& b) { return *this = *this + b; }
    Element& operator-=(const Element& b) { return *this = *this - b; }

    friend bool operator==(const Element& a, const Element& b) { return a.coords_ == b.coords_; }

    /// The common parity of all touched basis vectors, if there is one.
    /// The zero element is homogeneous of either parity; we report even.
    std::optional<Parity> homogeneous_parity(const SuperBasis& basis) const {
        if (coords_.empty()) return Parity::even;
        Parity p = basis.parity(coords_.begin()->first);
        for (const auto& [i, c] : coords_)
            if (basis.parity(i) != p) return std::nullopt;
        return p;
    }

    std::string to_string(const SuperBasis& basis) const {
        if (coords_.empty()) return "0";
        std::string out;
        for (const auto& [i, c] : coords_) {
            const std::string& nm = basis.name(i);
            std::string term;
            if (c.is_one()) term = nm;
            else if ((-c).is_one()) term = "-" + nm;
            else term = c.to_coeff_string() + "*" + nm;
            if (out.empty()) {
                out = term;
            } else if (term.front() == '-') {
                out += " - " + term.substr(1);
            } else {
                out += " + " + term;
            }
        }
        return out;
    }

private:
    Map coords_;
};

} // namespace homsuper
