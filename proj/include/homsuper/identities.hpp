#pragma once

#include <array>
#include <string>

#include "homsuper/algebra.hpp"
#include "homsuper/perm.hpp"
#include "homsuper/report.hpp"

namespace homsuper {

namespace detail {

inline Element signed_term(int sign, Element e) { return sign > 0 ? e : -e; }

} // namespace detail

/// Graded Hom-Jacobi residual of a bracket table at a basis triple:
/// (-1)^{|x||z|}[a(x),[y,z]] + (-1)^{|z||y|}[a(z),[x,y]] + (-1)^{|y||x|}[a(y),[z,x]].
inline Element hom_jacobi_residual(const HomSuperAlgebra& H, int i, int j, int k) {
    const SuperBasis& basis = H.algebra.basis();
    Element x = Element::unit(i), y = Element::unit(j), z = Element::unit(k);
    Parity px = basis.parity(i), py = basis.parity(j), pz = basis.parity(k);
    Element t1 = detail::signed_term(sign_pow(parity_product(px, pz)),
                                     H.multiply(H.twisted(x), H.multiply(y, z)));
    Element t2 = detail::signed_term(sign_pow(parity_product(pz, py)),
                                     H.multiply(H.twisted(z), H.multiply(x, y)));
    Element t3 = detail::signed_term(sign_pow(parity_product(py, px)),
                                     H.multiply(H.twisted(y), H.multiply(z, x)));
    return t1 + t2 + t3;
}

/// Graded skew-symmetry residual at a basis pair: [x,y] + (-1)^{|x||y|}[y,x].
inline Element skew_residual(const SuperAlgebra& A, int i, int j) {
    int sg = sign_pow(parity_product(A.basis().parity(i), A.basis().parity(j)));
    return sg > 0 ? A.entry(i, j) + A.entry(j, i) : A.entry(i, j) - A.entry(j, i);
}

/// Graded skew-symmetry plus the alpha-twisted graded Jacobi identity,
/// exhaustively over basis pairs and ordered triples.
inline CheckReport check_hom_lie_super(const HomSuperAlgebra& H,
                                       std::size_t max_violations = kDefaultMaxViolations) {
    CheckReport rep;
    rep.check = "hom-lie-super";
    rep.max_stored = max_violations;
    const SuperBasis& basis = H.algebra.basis();
    const int n = basis.size();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            ++rep.examined;
            Element r = skew_residual(H.algebra, i, j);
            if (!r.is_zero())
                rep.add_violation({basis.name(i), basis.name(j)}, r, r.to_string(basis));
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                ++rep.examined;
                Element r = hom_jacobi_residual(H, i, j, k);
                if (!r.is_zero())
                    rep.add_violation({basis.name(i), basis.name(j), basis.name(k)}, r,
                                      r.to_string(basis));
            }
        }
    }
    return rep;
}

/// Hom-associativity: the alpha-associator vanishes on all ordered triples.
inline CheckReport check_hom_associative_super(const HomSuperAlgebra& H,
                                               std::size_t max_violations = kDefaultMaxViolations) {
    CheckReport rep;
    rep.check = "hom-associative-super";
    rep.max_stored = max_violations;
    const SuperBasis& basis = H.algebra.basis();
    const int n = basis.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                ++rep.examined;
                Element r = alpha_associator(H, Element::unit(i), Element::unit(j), Element::unit(k));
                if (!r.is_zero())
                    rep.add_violation({basis.name(i), basis.name(j), basis.name(k)}, r,
                                      r.to_string(basis));
            }
    return rep;
}

/// Ungraded Hom-Leibniz identity [[x,y],a(z)] = [[x,z],a(y)] + [a(x),[y,z]].
/// Defined only when every basis vector is even; graded input is rejected.
inline CheckReport check_hom_leibniz(const HomSuperAlgebra& H,
                                     std::size_t max_violations = kDefaultMaxViolations) {
    const SuperBasis& basis = H.algebra.basis();
    if (basis.has_odd_part())
        throw unsupported_input_error(
            "check_hom_leibniz: the Hom-Leibniz identity is only defined for ungraded "
            "(purely even) algebras");
    CheckReport rep;
    rep.check = "hom-leibniz";
    rep.max_stored = max_violations;
    const int n = basis.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                ++rep.examined;
                Element x = Element::unit(i), y = Element::unit(j), z = Element::unit(k);
                Element r = H.multiply(H.multiply(x, y), H.twisted(z)) -
                            H.multiply(H.multiply(x, z), H.twisted(y)) -
                            H.multiply(H.twisted(x), H.multiply(y, z));
                if (!r.is_zero())
                    rep.add_violation({basis.name(i), basis.name(j), basis.name(k)}, r,
                                      r.to_string(basis));
            }
    return rep;
}

/// S(x,y,z) = (-1)^{|x||z|} as(x,y,z) + (-1)^{|y||x|} as(y,z,x) + (-1)^{|z||y|} as(z,x,y).
inline Element s_combination(const HomSuperAlgebra& H, int i, int j, int k) {
    const SuperBasis& basis = H.algebra.basis();
    Element x = Element::unit(i), y = Element::unit(j), z = Element::unit(k);
    Parity px = basis.parity(i), py = basis.parity(j), pz = basis.parity(k);
    return detail::signed_term(sign_pow(parity_product(px, pz)), alpha_associator(H, x, y, z)) +
           detail::signed_term(sign_pow(parity_product(py, px)), alpha_associator(H, y, z, x)) +
           detail::signed_term(sign_pow(parity_product(pz, py)), alpha_associator(H, z, x, y));
}

/// S(x,y,z) - (-1)^{|x||y|+|x||z|+|y||z|} S(x,z,y); zero exactly when the
/// supercommutator satisfies the twisted Jacobi identity at (x,y,z).
inline Element s_criterion_residual(const HomSuperAlgebra& H, int i, int j, int k) {
    const SuperBasis& basis = H.algebra.basis();
    Parity px = basis.parity(i), py = basis.parity(j), pz = basis.parity(k);
    int e = parity_product(px, py) + parity_product(px, pz) + parity_product(py, pz);
    return s_combination(H, i, j, k) - detail::signed_term(sign_pow(e), s_combination(H, i, k, j));
}

/// Both sides of the associator-expansion identity: the cyclic graded Jacobi
/// expression of the supercommutator minus its six-term alpha-associator
/// expansion. Identically zero for every superalgebra and every even alpha.
inline Element associator_expansion_residual(const HomSuperAlgebra& H, int i, int j, int k) {
    const SuperBasis& basis = H.algebra.basis();
    HomSuperAlgebra commutator{supercommutator(H.algebra), H.alpha};
    Element lhs = hom_jacobi_residual(commutator, i, j, k);

    Element x = Element::unit(i), y = Element::unit(j), z = Element::unit(k);
    Parity px = basis.parity(i), py = basis.parity(j), pz = basis.parity(k);
    int xy = parity_product(px, py), xz = parity_product(px, pz), yz = parity_product(py, pz);
    Element rhs = detail::signed_term(sign_pow(xz), alpha_associator(H, x, y, z)) +
                  detail::signed_term(sign_pow(xy), alpha_associator(H, y, z, x)) +
                  detail::signed_term(sign_pow(yz), alpha_associator(H, z, x, y)) -
                  detail::signed_term(sign_pow(xz + yz), alpha_associator(H, x, z, y)) -
                  detail::signed_term(sign_pow(xy + yz), alpha_associator(H, z, y, x)) -
                  detail::signed_term(sign_pow(xy + xz), alpha_associator(H, y, x, z));
    return lhs - rhs;
}

enum class AdmissibleMode { jacobi, s_criterion };

/// Residual of the subgroup-weighted associator sum (the G-Hom-associative
/// defining identity) at a basis triple.
inline Element g_hom_residual(const HomSuperAlgebra& H, SubgroupId g, int i, int j, int k) {
    const SuperBasis& basis = H.algebra.basis();
    std::array<int, 3> arg = {i, j, k};
    std::array<Parity, 3> par = {basis.parity(i), basis.parity(j), basis.parity(k)};
    Element acc;
    for (int t : subgroup_members(g)) {
        const Perm3& tau = s3_elements()[static_cast<std::size_t>(t)];
        int sg = tau.sign * sign_pow(static_cast<int>(permutation_parity(tau, par)));
        Element as = alpha_associator(H, Element::unit(arg[tau.image[0]]),
                                      Element::unit(arg[tau.image[1]]),
                                      Element::unit(arg[tau.image[2]]));
        acc += detail::signed_term(sg, as);
    }
    return acc;
}

/// Hom-Lie admissibility of a product table, either through the
/// supercommutator's twisted Jacobi identity or through the S-criterion.
/// The two modes flag exactly the same triples.
inline CheckReport check_hom_lie_admissible(const HomSuperAlgebra& H, AdmissibleMode mode,
                                            std::size_t max_violations = kDefaultMaxViolations) {
    CheckReport rep;
    rep.max_stored = max_violations;
    const SuperBasis& basis = H.algebra.basis();
    const int n = basis.size();
    if (mode == AdmissibleMode::jacobi) {
        rep.check = "hom-lie-admissible(jacobi)";
        HomSuperAlgebra commutator{supercommutator(H.algebra), H.alpha};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    ++rep.examined;
                    Element r = hom_jacobi_residual(commutator, i, j, k);
                    if (!r.is_zero())
                        rep.add_violation({basis.name(i), basis.name(j), basis.name(k)}, r,
                                          r.to_string(basis));
                }
    } else {
        rep.check = "hom-lie-admissible(s-criterion)";
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    ++rep.examined;
                    Element r = s_criterion_residual(H, i, j, k);
                    if (!r.is_zero())
                        rep.add_violation({basis.name(i), basis.name(j), basis.name(k)}, r,
                                          r.to_string(basis));
                }
    }
    return rep;
}

/// The G-Hom-associativity identity over every ordered basis triple.
/// G1 coincides with Hom-associativity and G6 with Hom-Lie admissibility.
inline CheckReport check_g_hom_associative(const HomSuperAlgebra& H, SubgroupId g,
                                           std::size_t max_violations = kDefaultMaxViolations) {
    CheckReport rep;
    rep.check = std::string("g-hom-associative(") + subgroup_name(g) + ")";
    rep.max_stored = max_violations;
    const SuperBasis& basis = H.algebra.basis();
    const int n = basis.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                ++rep.examined;
                Element r = g_hom_residual(H, g, i, j, k);
                if (!r.is_zero())
                    rep.add_violation({basis.name(i), basis.name(j), basis.name(k)}, r,
                                      r.to_string(basis));
            }
    return rep;
}

/// f is a morphism of Hom-superalgebras A -> B: it intertwines the tables
/// ([f(x), f(y)]' = f([x, y])) and the twisting maps (f∘alpha = alpha'∘f).
inline CheckReport check_morphism(const EvenMap& f, const HomSuperAlgebra& A,
                                  const HomSuperAlgebra& B,
                                  std::size_t max_violations = kDefaultMaxViolations) {
    CheckReport rep;
    rep.check = "morphism";
    rep.max_stored = max_violations;
    const SuperBasis& basis_a = A.algebra.basis();
    const SuperBasis& basis_b = B.algebra.basis();
    if (f.size() != basis_a.size() || f.size() != basis_b.size())
        throw structural_error("check_morphism: dimension mismatch between map and algebras");
    const int n = basis_a.size();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            ++rep.examined;
            Element lhs = B.multiply(f.column(i), f.column(j));
            Element rhs = f.apply(A.algebra.entry(i, j));
            Element r = lhs - rhs;
            if (!r.is_zero())
                rep.add_violation({basis_a.name(i), basis_a.name(j)}, r, r.to_string(basis_b));
        }
    }
    for (int i = 0; i < n; ++i) {
        ++rep.examined;
        Element r = f.apply(A.twisted(Element::unit(i))) - B.twisted(f.column(i));
        if (!r.is_zero()) rep.add_violation({basis_a.name(i)}, r, r.to_string(basis_b));
    }
    return rep;
}

} // namespace homsuper
