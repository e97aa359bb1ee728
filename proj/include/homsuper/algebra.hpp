#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homsuper/errors.hpp"
#include "homsuper/grading.hpp"
#include "homsuper/report.hpp"

namespace homsuper {

enum class TableKind { product, bracket };

/// Finite-dimensional superalgebra given by a sparse structure-constant
/// table: (i, j) -> product/bracket of basis vectors i and j. Missing
/// entries are zero. Ordered pairs are stored explicitly even for brackets;
/// skew-symmetry is something the checkers verify, never assume.
class SuperAlgebra {
public:
    SuperAlgebra() = default;

    SuperAlgebra(SuperBasis basis, TableKind kind, std::optional<std::string> parameter = std::nullopt)
        : basis_(std::move(basis)), kind_(kind), parameter_(std::move(parameter)) {}

    const SuperBasis& basis() const { return basis_; }
    TableKind kind() const { return kind_; }
    void set_kind(TableKind k) { kind_ = k; }
    const std::optional<std::string>& parameter() const { return parameter_; }
    const std::map<std::pair<int, int>, Element>& table() const { return table_; }

    int dim() const { return basis_.size(); }

    void set_entry(int i, int j, Element value) {
        basis_.check_index(i);
        basis_.check_index(j);
        for (const auto& [k, c] : value.coords()) basis_.check_index(k);
        if (value.is_zero())
            table_.erase({i, j});
        else
            table_[{i, j}] = std::move(value);
    }

    const Element& entry(int i, int j) const {
        basis_.check_index(i);
        basis_.check_index(j);
        static const Element zero;
        auto it = table_.find({i, j});
        return it == table_.end() ? zero : it->second;
    }

    /// Bilinear extension of the table.
    Element multiply(const Element& x, const Element& y) const {
        Element out;
        for (const auto& [i, ci] : x.coords()) {
            for (const auto& [j, cj] : y.coords()) {
                const Element& e = entry(i, j);
                if (e.is_zero()) continue;
                Scalar f = ci * cj;
                for (const auto& [k, ck] : e.coords()) out.add_term(k, f * ck);
            }
        }
        return out;
    }

    bool table_equal(const SuperAlgebra& other) const {
        return basis_ == other.basis_ && table_ == other.table_;
    }

private:
    SuperBasis basis_;
    std::map<std::pair<int, int>, Element> table_;
    TableKind kind_ = TableKind::bracket;
    std::optional<std::string> parameter_;
};

/// Parity-preserving linear map given by a basis-indexed matrix;
/// matrix(k, i) is the coefficient of e_k in the image of e_i.
class EvenMap {
public:
    EvenMap() = default;

    explicit EvenMap(int n) : n_(n), m_(static_cast<std::size_t>(n) * n) {}

    static EvenMap identity_map(int n) {
        EvenMap m(n);
        for (int i = 0; i < n; ++i) m.set(i, i, Scalar(1));
        return m;
    }

    static EvenMap zero_map(int n) { return EvenMap(n); }

    int size() const { return n_; }

    void set(int k, int i, Scalar c) { m_[idx(k, i)] = std::move(c); }

    const Scalar& at(int k, int i) const { return m_[idx(k, i)]; }

    /// Image of basis vector i as an Element.
    Element column(int i) const {
        Element e;
        for (int k = 0; k < n_; ++k) {
            if (!at(k, i).is_zero()) e.add_term(k, at(k, i));
        }
        return e;
    }

    Element apply(const Element& x) const {
        Element out;
        for (const auto& [i, c] : x.coords()) {
            if (i >= n_) throw structural_error("EvenMap: dimension mismatch");
            for (int k = 0; k < n_; ++k) {
                const Scalar& m = at(k, i);
                if (!m.is_zero()) out.add_term(k, c * m);
            }
        }
        return out;
    }

    bool is_identity() const {
        for (int k = 0; k < n_; ++k)
            for (int i = 0; i < n_; ++i) {
                if (k == i ? !at(k, i).is_one() : !at(k, i).is_zero()) return false;
            }
        return true;
    }

    /// Parameter engaged by any matrix entry, if one exists.
    std::optional<std::string> param() const {
        for (const Scalar& c : m_) {
            if (auto p = c.param()) return p;
        }
        return std::nullopt;
    }

private:
    int n_ = 0;
    std::vector<Scalar> m_;

    std::size_t idx(int k, int i) const {
        if (k < 0 || k >= n_ || i < 0 || i >= n_)
            throw structural_error("EvenMap: index out of range");
        return static_cast<std::size_t>(k) * n_ + i;
    }
};

inline Element apply_map(const EvenMap& m, const Element& x) { return m.apply(x); }

/// A superalgebra together with its twisting map.
struct HomSuperAlgebra {
    SuperAlgebra algebra;
    EvenMap alpha;

    Element multiply(const Element& x, const Element& y) const { return algebra.multiply(x, y); }
    Element twisted(const Element& x) const { return alpha.apply(x); }
};

using CheckReport = BasicCheckReport<Element>;

/// Evenness of the structure table: every product of homogeneous basis
/// vectors lands in the parity-(|i|+|j|) component.
inline CheckReport check_even_structure(const SuperAlgebra& A,
                                        std::size_t max_violations = kDefaultMaxViolations) {
    CheckReport rep;
    rep.check = "even-structure";
    rep.max_stored = max_violations;
    const SuperBasis& basis = A.basis();
    for (const auto& [ij, value] : A.table()) {
        ++rep.examined;
        Parity want = parity_sum(basis.parity(ij.first), basis.parity(ij.second));
        for (const auto& [k, c] : value.coords()) {
            if (basis.parity(k) != want) {
                Element offending = Element::term(k, c);
                rep.add_violation({basis.name(ij.first), basis.name(ij.second), basis.name(k)},
                                  offending, offending.to_string(basis));
            }
        }
    }
    return rep;
}

/// Evenness of a linear map: matrix(k, i) nonzero forces parities to agree.
inline CheckReport check_even_map(const EvenMap& m, const SuperBasis& basis,
                                  std::size_t max_violations = kDefaultMaxViolations) {
    CheckReport rep;
    rep.check = "even-map";
    rep.max_stored = max_violations;
    if (m.size() != basis.size()) throw structural_error("check_even_map: dimension mismatch");
    for (int i = 0; i < m.size(); ++i) {
        ++rep.examined;
        for (int k = 0; k < m.size(); ++k) {
            if (!m.at(k, i).is_zero() && basis.parity(k) != basis.parity(i)) {
                Element offending = Element::term(k, m.at(k, i));
                rep.add_violation({basis.name(i), basis.name(k)}, offending,
                                  offending.to_string(basis));
            }
        }
    }
    return rep;
}

/// [x, y] = mu(x, y) - (-1)^{|x||y|} mu(y, x), entrywise on the table.
inline SuperAlgebra supercommutator(const SuperAlgebra& A) {
    SuperAlgebra out(A.basis(), TableKind::bracket, A.parameter());
    const int n = A.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int sg = sign_pow(parity_product(A.basis().parity(i), A.basis().parity(j)));
            Element v = sg > 0 ? A.entry(i, j) - A.entry(j, i) : A.entry(i, j) + A.entry(j, i);
            out.set_entry(i, j, std::move(v));
        }
    }
    return out;
}

/// as_alpha(x1, x2, x3) = mu(alpha(x1), mu(x2, x3)) - mu(mu(x1, x2), alpha(x3)).
inline Element alpha_associator(const HomSuperAlgebra& H, const Element& x1, const Element& x2,
                                const Element& x3) {
    return H.multiply(H.twisted(x1), H.multiply(x2, x3)) -
           H.multiply(H.multiply(x1, x2), H.twisted(x3));
}

} // namespace homsuper
