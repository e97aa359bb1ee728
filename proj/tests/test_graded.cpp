#include <doctest.h>

#include "oracles.hpp"

using namespace homsuper;

namespace {

/// One even generator with mu(e,e) = e.
HomSuperAlgebra one_dim_idempotent() {
    SuperBasis b;
    b.add("e", Parity::even);
    SuperAlgebra A(b, TableKind::product);
    A.set_entry(0, 0, Element::unit(0));
    return {A, EvenMap::identity_map(1)};
}

} // namespace

TEST_CASE("multiply: bilinear extension of the osp(1,2) table") {
    HomSuperAlgebra osp = builtin(BuiltinId::osp12);
    const SuperBasis& b = osp.algebra.basis();
    int H = *b.index_of("H"), X = *b.index_of("X"), F = *b.index_of("F"), Y = *b.index_of("Y");
    CHECK(osp.multiply(Element::unit(H), Element::unit(X)) == Scalar(2) * Element::unit(X));
    CHECK(osp.multiply(Element::unit(F), Element::unit(F)) == Scalar(2) * Element::unit(Y));
    CHECK(osp.multiply(Element::unit(H), Element()).is_zero());
    CHECK_THROWS_AS(osp.algebra.entry(0, 9), structural_error);
}

TEST_CASE("multiply and apply_map are bilinear/linear on random elements") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        HomSuperAlgebra A = oracle::random_hom_algebra(rng, 2 + static_cast<int>(rng() % 3));
        const SuperBasis& basis = A.algebra.basis();
        Element x = oracle::random_element(rng, basis);
        Element x2 = oracle::random_element(rng, basis);
        Element y = oracle::random_element(rng, basis);
        Scalar c(oracle::random_rational(rng));
        CHECK(A.multiply(x + x2, y) == A.multiply(x, y) + A.multiply(x2, y));
        CHECK(A.multiply(y, x + x2) == A.multiply(y, x) + A.multiply(y, x2));
        CHECK(A.multiply(c * x, y) == c * A.multiply(x, y));
        CHECK(A.alpha.apply(x + x2) == A.alpha.apply(x) + A.alpha.apply(x2));
        CHECK(A.alpha.apply(c * x) == c * A.alpha.apply(x));
    }
}

TEST_CASE("apply_map rejects dimension mismatches") {
    EvenMap small = EvenMap::identity_map(2);
    Element big = Element::unit(4);
    CHECK_THROWS_AS(small.apply(big), structural_error);
}

TEST_CASE("apply_map: identity and the alpha_lambda images") {
    HomSuperAlgebra osp = builtin(BuiltinId::osp12);
    HomSuperAlgebra ospl = builtin(BuiltinId::osp12_lambda);
    const SuperBasis& b = osp.algebra.basis();
    int X = *b.index_of("X"), F = *b.index_of("F");
    Element any = Element::unit(X) + Scalar(3) * Element::unit(F);
    CHECK(osp.alpha.apply(any) == any);
    Scalar lam = Scalar::parameter("lambda");
    CHECK(ospl.alpha.apply(Element::unit(X)) == lam * lam * Element::unit(X));
    CHECK(ospl.alpha.apply(Element::unit(F)) == pow(lam, -1) * Element::unit(F));
}

TEST_CASE("supercommutator sign conventions") {
    // commutative purely even algebra -> zero bracket
    SuperBasis b2;
    b2.add("a", Parity::even);
    b2.add("b", Parity::even);
    SuperAlgebra C(b2, TableKind::product);
    C.set_entry(0, 1, Element::unit(0));
    C.set_entry(1, 0, Element::unit(0));
    CHECK(supercommutator(C).table().empty());

    // odd f with mu(f,f) = e: the signs add, [f,f] = 2e
    SuperBasis b3;
    b3.add("e", Parity::even);
    b3.add("f", Parity::odd);
    SuperAlgebra D(b3, TableKind::product);
    D.set_entry(1, 1, Element::unit(0));
    SuperAlgebra Dc = supercommutator(D);
    CHECK(Dc.entry(1, 1) == Scalar(2) * Element::unit(0));

    // mu(e,f) = f, mu(f,e) = 0: [e,f] = f, [f,e] = -f
    SuperAlgebra E(b3, TableKind::product);
    E.set_entry(0, 1, Element::unit(1));
    SuperAlgebra Ec = supercommutator(E);
    CHECK(Ec.entry(0, 1) == Element::unit(1));
    CHECK(Ec.entry(1, 0) == -Element::unit(1));
}

TEST_CASE("supercommutator output is graded skew-symmetric on random tables") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        SuperAlgebra A = oracle::random_even_algebra(rng, 2 + static_cast<int>(rng() % 3));
        SuperAlgebra B = supercommutator(A);
        for (int i = 0; i < B.dim(); ++i)
            for (int j = 0; j < B.dim(); ++j) CHECK(skew_residual(B, i, j).is_zero());
    }
}

TEST_CASE("alpha associator") {
    HomSuperAlgebra one = one_dim_idempotent();
    CHECK(alpha_associator(one, Element::unit(0), Element::unit(0), Element::unit(0)).is_zero());

    // 1-dim brute force: mu(e,e) = 2e with alpha = id
    SuperBasis b;
    b.add("e", Parity::even);
    SuperAlgebra A(b, TableKind::product);
    A.set_entry(0, 0, Scalar(2) * Element::unit(0));
    HomSuperAlgebra H{A, EvenMap::identity_map(1)};
    // mu(alpha e, mu(e,e)) = mu(e, 2e) = 4e; mu(mu(e,e), alpha e) = mu(2e, e) = 4e
    CHECK(alpha_associator(H, Element::unit(0), Element::unit(0), Element::unit(0)).is_zero());

    // hom-associative example: any algebra with zero product
    SuperAlgebra Z(b, TableKind::product);
    HomSuperAlgebra HZ{Z, EvenMap::identity_map(1)};
    CHECK(alpha_associator(HZ, Element::unit(0), Element::unit(0), Element::unit(0)).is_zero());
}

TEST_CASE("permutation parity closed forms") {
    const auto& elems = s3_elements();
    auto parity_of = [&](const char* name) -> const Perm3& {
        for (const auto& e : elems)
            if (std::string(e.name) == name) return e;
        throw std::runtime_error("no such permutation");
    };
    std::array<Parity, 3> all_odd = {Parity::odd, Parity::odd, Parity::odd};
    std::array<Parity, 3> oo_even = {Parity::odd, Parity::odd, Parity::even};
    CHECK(permutation_parity(parity_of("id"), all_odd) == Parity::even);
    CHECK(permutation_parity(parity_of("s1"), oo_even) == Parity::odd);
    CHECK(permutation_parity(parity_of("s2s1s2"), all_odd) == Parity::odd); // 3 mod 2
    // spot-check each closed form on a mixed triple
    std::array<Parity, 3> mixed = {Parity::odd, Parity::even, Parity::odd};
    CHECK(permutation_parity(parity_of("s1"), mixed) == Parity::even);        // |x1||x2|
    CHECK(permutation_parity(parity_of("s2"), mixed) == Parity::even);        // |x2||x3|
    CHECK(permutation_parity(parity_of("s1s2"), mixed) == Parity::odd);       // |x2||x3|+|x1||x3|
    CHECK(permutation_parity(parity_of("s2s1"), mixed) == Parity::odd);       // |x1||x2|+|x1||x3|
    CHECK(permutation_parity(parity_of("s2s1s2"), mixed) == Parity::odd);
}

TEST_CASE("permutation parity is a cocycle for all 36 compositions") {
    const auto& elems = s3_elements();
    for (const auto& rho : elems) {
        for (const auto& tau : elems) {
            const Perm3& rt = compose(rho, tau);
            for (int bits = 0; bits < 8; ++bits) {
                std::array<Parity, 3> par = {static_cast<Parity>(bits & 1),
                                             static_cast<Parity>((bits >> 1) & 1),
                                             static_cast<Parity>((bits >> 2) & 1)};
                // parities of the tuple after applying tau
                std::array<Parity, 3> tpar = {par[tau.image[0]], par[tau.image[1]],
                                              par[tau.image[2]]};
                int lhs = static_cast<int>(permutation_parity(rt, par));
                int rhs = (static_cast<int>(permutation_parity(tau, par)) +
                           static_cast<int>(permutation_parity(rho, tpar))) %
                          2;
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("check_even_structure") {
    HomSuperAlgebra osp = builtin(BuiltinId::osp12);
    CHECK(check_even_structure(osp.algebra).pass());

    SuperBasis b;
    b.add("a", Parity::even);
    b.add("f", Parity::odd);
    SuperAlgebra bad(b, TableKind::product);
    bad.set_entry(0, 0, Element::unit(1)); // even*even landing on odd
    CheckReport rep = check_even_structure(bad);
    CHECK(!rep.pass());
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].inputs == std::vector<std::string>{"a", "a", "f"});

    SuperAlgebra empty(b, TableKind::product);
    CHECK(check_even_structure(empty).pass());
}

TEST_CASE("homogeneity is a queryable predicate") {
    HomSuperAlgebra osp = builtin(BuiltinId::osp12);
    const SuperBasis& b = osp.algebra.basis();
    Element evens = Element::unit(0) + Element::unit(1);
    Element mixed = Element::unit(0) + Element::unit(3);
    CHECK(evens.homogeneous_parity(b) == Parity::even);
    CHECK(Element::unit(3).homogeneous_parity(b) == Parity::odd);
    CHECK(!mixed.homogeneous_parity(b).has_value());
    CHECK(Element().homogeneous_parity(b) == Parity::even);
}
