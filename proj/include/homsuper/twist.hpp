#pragma once

#include <optional>
#include <string>
#include <utility>

#include "homsuper/algebra.hpp"
#include "homsuper/identities.hpp"

namespace homsuper {

/// alpha is a bracket endomorphism: alpha([x,y]) = [alpha(x), alpha(y)] on
/// every ordered basis pair.
inline CheckReport check_endomorphism(const EvenMap& alpha, const SuperAlgebra& A,
                                      std::size_t max_violations = kDefaultMaxViolations) {
    CheckReport rep;
    rep.check = "endomorphism";
    rep.max_stored = max_violations;
    const SuperBasis& basis = A.basis();
    if (alpha.size() != basis.size())
        throw structural_error("check_endomorphism: dimension mismatch");
    const int n = basis.size();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            ++rep.examined;
            Element r = alpha.apply(A.entry(i, j)) - A.multiply(alpha.column(i), alpha.column(j));
            if (!r.is_zero())
                rep.add_violation({basis.name(i), basis.name(j)}, r, r.to_string(basis));
        }
    }
    return rep;
}

/// Raised when yau_twist rejects its input; carries the failing report.
class twist_precondition_error : public std::runtime_error {
public:
    twist_precondition_error(const std::string& what, CheckReport report)
        : std::runtime_error(what), report_(std::move(report)) {}

    const CheckReport& report() const { return report_; }

private:
    CheckReport report_;
};

/// Compose a Lie-superalgebra bracket with an even endomorphism:
/// [x, y]_alpha = alpha([x, y]). The preconditions (the input is a Lie
/// superalgebra, alpha is an endomorphism of it) are verified, not trusted.
inline HomSuperAlgebra yau_twist(const SuperAlgebra& A, const EvenMap& alpha) {
    HomSuperAlgebra untwisted{A, EvenMap::identity_map(A.dim())};
    CheckReport lie = check_hom_lie_super(untwisted);
    if (!lie.pass())
        throw twist_precondition_error("yau_twist: input is not a Lie superalgebra", std::move(lie));
    CheckReport endo = check_endomorphism(alpha, A);
    if (!endo.pass())
        throw twist_precondition_error("yau_twist: map is not a bracket endomorphism",
                                       std::move(endo));
    CheckReport even = check_even_map(alpha, A.basis());
    if (!even.pass())
        throw twist_precondition_error("yau_twist: map is not even", std::move(even));

    std::optional<std::string> parameter = A.parameter();
    if (auto ap = alpha.param()) {
        if (parameter && *parameter != *ap)
            throw structural_error("yau_twist: algebra and map use different parameters");
        parameter = ap;
    }
    SuperAlgebra twisted(A.basis(), TableKind::bracket, std::move(parameter));
    for (const auto& [ij, value] : A.table())
        twisted.set_entry(ij.first, ij.second, alpha.apply(value));
    return HomSuperAlgebra{std::move(twisted), alpha};
}

/// Classical super-Jacobi defect (alpha = id):
/// (-1)^{|x||z|}[x,[y,z]] + (-1)^{|z||y|}[z,[x,y]] + (-1)^{|y||x|}[y,[z,x]].
inline Element jacobi_defect(const SuperAlgebra& A, int x, int y, int z) {
    HomSuperAlgebra H{A, EvenMap::identity_map(A.dim())};
    return hom_jacobi_residual(H, x, y, z);
}

enum class BuiltinId { osp12, osp12_lambda, abelian2, affine3 };

inline std::optional<BuiltinId> builtin_from_string(const std::string& s) {
    if (s == "osp12") return BuiltinId::osp12;
    if (s == "osp12-lambda") return BuiltinId::osp12_lambda;
    if (s == "abelian2") return BuiltinId::abelian2;
    if (s == "affine3") return BuiltinId::affine3;
    return std::nullopt;
}

inline const char* builtin_name(BuiltinId id) {
    switch (id) {
        case BuiltinId::osp12: return "osp12";
        case BuiltinId::osp12_lambda: return "osp12-lambda";
        case BuiltinId::abelian2: return "abelian2";
        case BuiltinId::affine3: return "affine3";
    }
    throw structural_error("BuiltinId: invalid value");
}

namespace detail {

/// Set [i,j] = value and [j,i] = -(-1)^{|i||j|} value in one go.
inline void set_bracket_pair(SuperAlgebra& A, int i, int j, const Element& value) {
    A.set_entry(i, j, value);
    if (i == j) return;
    int sg = sign_pow(parity_product(A.basis().parity(i), A.basis().parity(j)));
    A.set_entry(j, i, sg > 0 ? -value : value);
}

inline SuperAlgebra osp12_table() {
    SuperBasis basis;
    int H = basis.add("H", Parity::even);
    int X = basis.add("X", Parity::even);
    int Y = basis.add("Y", Parity::even);
    int F = basis.add("F", Parity::odd);
    int G = basis.add("G", Parity::odd);
    SuperAlgebra A(basis, TableKind::bracket);
    auto unit = [](int i) { return Element::unit(i); };
    auto scaled = [](long long c, int i) { return Element::term(i, Scalar(c)); };
    set_bracket_pair(A, H, X, scaled(2, X));
    set_bracket_pair(A, H, Y, scaled(-2, Y));
    set_bracket_pair(A, X, Y, unit(H));
    set_bracket_pair(A, Y, G, unit(F));
    set_bracket_pair(A, X, F, unit(G));
    set_bracket_pair(A, H, F, scaled(-1, F));
    set_bracket_pair(A, H, G, unit(G));
    set_bracket_pair(A, G, F, unit(H));
    set_bracket_pair(A, G, G, scaled(-2, X));
    set_bracket_pair(A, F, F, scaled(2, Y));
    return A;
}

inline EvenMap osp12_alpha_lambda() {
    EvenMap alpha(5);
    Scalar lam = Scalar::parameter("lambda");
    alpha.set(0, 0, Scalar(1));          // H -> H
    alpha.set(1, 1, lam * lam);          // X -> lambda^2 X
    alpha.set(2, 2, pow(lam, -2));       // Y -> lambda^-2 Y
    alpha.set(3, 3, pow(lam, -1));       // F -> lambda^-1 F
    alpha.set(4, 4, lam);                // G -> lambda G
    return alpha;
}

} // namespace detail

/// The builtin corpus. osp12 uses basis order (H, X, Y, F, G); osp12-lambda
/// is its Yau twist by the diagonal endomorphism alpha_lambda and carries
/// the formal parameter `lambda`.
inline HomSuperAlgebra builtin(BuiltinId id) {
    switch (id) {
        case BuiltinId::osp12: {
            SuperAlgebra A = detail::osp12_table();
            return HomSuperAlgebra{A, EvenMap::identity_map(A.dim())};
        }
        case BuiltinId::osp12_lambda:
            return yau_twist(detail::osp12_table(), detail::osp12_alpha_lambda());
        case BuiltinId::abelian2: {
            SuperBasis basis;
            basis.add("x", Parity::even);
            basis.add("y", Parity::odd);
            SuperAlgebra A(basis, TableKind::bracket);
            return HomSuperAlgebra{A, EvenMap::identity_map(2)};
        }
        case BuiltinId::affine3: {
            SuperBasis basis;
            int e1 = basis.add("e1", Parity::even);
            int e2 = basis.add("e2", Parity::even);
            basis.add("e3", Parity::odd);
            SuperAlgebra A(basis, TableKind::bracket);
            detail::set_bracket_pair(A, e1, e2, Element::unit(e1));
            return HomSuperAlgebra{A, EvenMap::identity_map(3)};
        }
    }
    throw structural_error("builtin: invalid id");
}

} // namespace homsuper
