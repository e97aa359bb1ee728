#pragma once

// Test-side oracles, kept independent of the library paths they judge:
// a dense schoolbook polynomial divider, deterministic random generators
// for structure tables, and longhand expansions of the graded identities.

#include <cstdint>
#include <random>
#include <vector>

#include "homsuper/homsuper.hpp"

namespace oracle {

using namespace homsuper;

// --- dense polynomial long division over Q (ordinary polynomials) ---

using Dense = std::vector<Rational>; // c[i] is the coefficient of p^i

inline void dense_trim(Dense& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

inline Dense dense_sub(const Dense& a, const Dense& b) {
    Dense r = a;
    if (b.size() > r.size()) r.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    dense_trim(r);
    return r;
}

inline Dense dense_mul(const Dense& a, const Dense& b) {
    if (a.empty() || b.empty()) return {};
    Dense r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    dense_trim(r);
    return r;
}

/// Classic synthetic long division; returns {quotient, remainder}.
inline std::pair<Dense, Dense> dense_divmod(Dense a, const Dense& b) {
    dense_trim(a);
    Dense q;
    if (b.empty()) throw std::runtime_error("oracle: division by zero polynomial");
    while (a.size() >= b.size()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        if (q.size() < shift + 1) q.resize(shift + 1);
        q[shift] += f;
        Dense t(shift + b.size());
        for (std::size_t i = 0; i < b.size(); ++i) t[shift + i] = f * b[i];
        a = dense_sub(a, t);
        if (a.empty()) break;
    }
    dense_trim(q);
    return {q, a};
}

inline LaurentPoly dense_to_poly(const Dense& d, const std::string& param) {
    LaurentPoly p;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (!d[i].is_zero())
            p = p + LaurentPoly::monomial(d[i], static_cast<long long>(i),
                                          i == 0 ? std::optional<std::string>() : param);
    return p;
}

// --- deterministic random data ---

inline Rational random_rational(std::mt19937_64& rng, bool nonzero = false) {
    long long num = static_cast<long long>(rng() % 9) - 4; // [-4, 4]
    if (nonzero && num == 0) num = 1 + static_cast<long long>(rng() % 4);
    long long den = 1 + static_cast<long long>(rng() % 3); // {1,2,3}
    return Rational(num, den);
}

inline SuperBasis random_basis(std::mt19937_64& rng, int dim) {
    SuperBasis b;
    for (int i = 0; i < dim; ++i)
        b.add("e" + std::to_string(i + 1), rng() % 2 ? Parity::odd : Parity::even);
    return b;
}

/// Sparse structure table that respects evenness by construction;
/// coefficients are small rationals.
inline SuperAlgebra random_even_algebra(std::mt19937_64& rng, int dim) {
    SuperBasis basis = random_basis(rng, dim);
    SuperAlgebra A(basis, TableKind::product);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            if (rng() % 2) continue; // keep it sparse
            Parity want = parity_sum(basis.parity(i), basis.parity(j));
            Element v;
            for (int k = 0; k < dim; ++k) {
                if (basis.parity(k) != want) continue;
                if (rng() % 2) continue;
                v.add_term(k, Scalar(random_rational(rng, true)));
            }
            A.set_entry(i, j, std::move(v));
        }
    }
    return A;
}

/// Even linear map with small rational entries; parity blocks only.
inline EvenMap random_even_map(std::mt19937_64& rng, const SuperBasis& basis) {
    EvenMap m(basis.size());
    for (int i = 0; i < basis.size(); ++i) {
        for (int k = 0; k < basis.size(); ++k) {
            if (basis.parity(k) != basis.parity(i)) continue;
            bool keep = (k == i) ? true : rng() % 3 == 0;
            if (keep) m.set(k, i, Scalar(random_rational(rng)));
        }
    }
    return m;
}

inline HomSuperAlgebra random_hom_algebra(std::mt19937_64& rng, int dim) {
    SuperAlgebra A = random_even_algebra(rng, dim);
    EvenMap alpha = random_even_map(rng, A.basis());
    return HomSuperAlgebra{std::move(A), std::move(alpha)};
}

inline Element random_element(std::mt19937_64& rng, const SuperBasis& basis) {
    Element e;
    for (int i = 0; i < basis.size(); ++i)
        if (rng() % 2) e.add_term(i, Scalar(random_rational(rng)));
    return e;
}

// --- longhand identity expansions (no alpha_associator / Perm3 reuse) ---

inline Element mu(const HomSuperAlgebra& H, const Element& a, const Element& b) {
    return H.algebra.multiply(a, b);
}

inline Element assoc(const HomSuperAlgebra& H, const Element& x, const Element& y,
                     const Element& z) {
    return mu(H, H.alpha.apply(x), mu(H, y, z)) - mu(H, mu(H, x, y), H.alpha.apply(z));
}

inline Element sgn(int exponent, Element e) { return exponent % 2 == 0 ? e : -e; }

/// Supercommutator on elements, written out directly.
inline Element comm(const HomSuperAlgebra& H, const Element& a, Parity pa, const Element& b,
                    Parity pb) {
    return mu(H, a, b) - sgn(parity_product(pa, pb), mu(H, b, a));
}

/// Direct expansion of the G-Hom-associativity identities as displayed in
/// the subgroup classification, one formula per subgroup.
inline Element g_identity_expansion(const HomSuperAlgebra& H, SubgroupId g, int i, int j, int k) {
    const SuperBasis& basis = H.algebra.basis();
    Element x = Element::unit(i), y = Element::unit(j), z = Element::unit(k);
    int xy = parity_product(basis.parity(i), basis.parity(j));
    int xz = parity_product(basis.parity(i), basis.parity(k));
    int yz = parity_product(basis.parity(j), basis.parity(k));
    switch (g) {
        case SubgroupId::G1:
            return assoc(H, x, y, z);
        case SubgroupId::G2:
            return assoc(H, x, y, z) - sgn(xy, assoc(H, y, x, z));
        case SubgroupId::G3:
            return assoc(H, x, y, z) - sgn(yz, assoc(H, x, z, y));
        case SubgroupId::G4:
            return assoc(H, x, y, z) - sgn(xy + xz + yz, assoc(H, z, y, x));
        case SubgroupId::G5:
            return assoc(H, x, y, z) + sgn(xy + xz, assoc(H, y, z, x)) +
                   sgn(xz + yz, assoc(H, z, x, y));
        case SubgroupId::G6: {
            // the signed S3 sum equals (-1)^{|x||z|} times the cyclic graded
            // Jacobi expression of the supercommutator
            Parity px = basis.parity(i), py = basis.parity(j), pz = basis.parity(k);
            Element ax = H.alpha.apply(x), ay = H.alpha.apply(y), az = H.alpha.apply(z);
            Element jac =
                sgn(parity_product(px, pz),
                    comm(H, ax, px, comm(H, y, py, z, pz), parity_sum(py, pz))) +
                sgn(parity_product(pz, py),
                    comm(H, az, pz, comm(H, x, px, y, py), parity_sum(px, py))) +
                sgn(parity_product(py, px),
                    comm(H, ay, py, comm(H, z, pz, x, px), parity_sum(pz, px)));
            return sgn(parity_product(px, pz), jac);
        }
    }
    throw std::runtime_error("oracle: invalid subgroup");
}

} // namespace oracle
