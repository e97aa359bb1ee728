#include <doctest.h>

#include "oracles.hpp"

using namespace homsuper;

TEST_CASE("round-trip: parse(export(builtin)) is table-equal for every builtin") {
    for (BuiltinId id :
         {BuiltinId::osp12, BuiltinId::osp12_lambda, BuiltinId::abelian2, BuiltinId::affine3}) {
        HomSuperAlgebra h = builtin(id);
        std::string name = builtin_name(id);
        for (char& c : name)
            if (c == '-') c = '_';
        std::string text = export_algebra(AlgebraFile{name, h});
        AlgebraFile back = parse_algebra_file(text);
        CHECK(back.name == name);
        CHECK(back.hom.algebra.table_equal(h.algebra));
        // alpha columns round-trip too
        for (int i = 0; i < h.algebra.dim(); ++i)
            CHECK(back.hom.alpha.column(i) == h.alpha.column(i));
        CHECK(back.hom.algebra.parameter() == h.algebra.parameter());
    }
}

TEST_CASE("coefficient grammar: golden parse against the scalar module") {
    AlgebraFile f = parse_algebra_file("algebra demo\n"
                                       "param lambda\n"
                                       "basis e : even\n"
                                       "mul e e = (1+lambda)*e\n");
    Scalar expect = Scalar(1) + Scalar::parameter("lambda");
    CHECK(f.hom.algebra.entry(0, 0) == Element::term(0, expect));
    CHECK(f.hom.algebra.kind() == TableKind::product);

    AlgebraFile g = parse_algebra_file("algebra demo2\n"
                                       "param q\n"
                                       "basis a : even\n"
                                       "basis b : even\n"
                                       "bracket a b = 2*q^2*a - (1-q)/(1+q)*b\n"
                                       "alpha a = q^-1*a\n");
    Scalar qq = Scalar::parameter("q");
    Element want = Element::term(0, Scalar(2) * qq * qq) +
                   Element::term(1, -(Scalar(1) - qq) / (Scalar(1) + qq));
    CHECK(g.hom.algebra.entry(0, 1) == want);
    CHECK(g.hom.alpha.column(0) == Element::term(0, pow(qq, -1)));
    CHECK(g.hom.alpha.column(1) == Element::unit(1)); // missing alpha line -> identity
}

TEST_CASE("combo corner cases") {
    AlgebraFile f = parse_algebra_file("algebra z\n"
                                       "basis a : even\n"
                                       "basis b : even\n"
                                       "bracket a b = 0\n"
                                       "bracket b a = -a + 2*b - b\n");
    CHECK(f.hom.algebra.entry(0, 1).is_zero());
    CHECK(f.hom.algebra.entry(1, 0) == -Element::unit(0) + Element::unit(1));

    // fraction coefficients and bare minus-one
    AlgebraFile g = parse_algebra_file("algebra w\n"
                                       "basis a : even\n"
                                       "mul a a = 1/2*a\n");
    CHECK(g.hom.algebra.entry(0, 0) == Element::term(0, Scalar(Rational(1, 2))));
}

TEST_CASE("parse errors carry position and name information") {
    CHECK_THROWS_WITH_AS(parse_algebra_file("algebra t\nbasis H : even\nbracket H X = 2*X\n"),
                         doctest::Contains("undeclared basis name 'X'"), parse_error);
    CHECK_THROWS_AS(parse_algebra_file("algebra t\nbasis H : even\nbasis H : odd\n"), parse_error);
    CHECK_THROWS_AS(parse_algebra_file("algebra t\nparam q\nparam r\nbasis e : even\n"),
                    parse_error);
    CHECK_THROWS_AS(parse_algebra_file("nonsense\n"), parse_error);
    CHECK_THROWS_AS(parse_algebra_file("algebra t\nbasis e : sideways\n"), parse_error);
    CHECK_THROWS_AS(
        parse_algebra_file("algebra t\nbasis e : even\nmul e e = e\nbracket e e = e\n"),
        parse_error);
    CHECK_THROWS_AS(parse_algebra_file("algebra t\nbasis e : even\nmul e e = e\nmul e e = 0\n"),
                    parse_error);
    // evenness violations surface as structural errors
    CHECK_THROWS_AS(
        parse_algebra_file("algebra t\nbasis e : even\nbasis f : odd\nmul e e = f\n"),
        structural_error);
    CHECK_THROWS_AS(
        parse_algebra_file("algebra t\nbasis e : even\nbasis f : odd\nalpha e = f\n"),
        structural_error);
}

TEST_CASE("line/column positions point at the offending token") {
    try {
        parse_algebra_file("algebra t\nbasis H : even\nbracket H X = 2*X\n");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 11);
    }
}

TEST_CASE("rendered elements re-parse to the same element") {
    std::mt19937_64 rng(97);
    SuperBasis basis;
    basis.add("A", Parity::even);
    basis.add("B", Parity::even);
    basis.add("C", Parity::odd);
    for (int trial = 0; trial < 60; ++trial) {
        // random even-parity-respecting entry over a parameter
        Element e;
        for (int k = 0; k < 2; ++k) {
            LaurentPoly num, den;
            for (int t = 0; t < 2; ++t) {
                num = num + LaurentPoly::monomial(oracle::random_rational(rng),
                                                  static_cast<long long>(rng() % 5) - 2, "q");
                den = den + LaurentPoly::monomial(oracle::random_rational(rng, true),
                                                  static_cast<long long>(rng() % 3), "q");
            }
            if (den.is_zero()) den = LaurentPoly(Rational(1));
            e.add_term(k, num.is_zero() ? Scalar() : Scalar::fraction(num, den));
        }
        if (e.is_zero()) continue;
        std::string text = "algebra rt\nparam q\nbasis A : even\nbasis B : even\nbasis C : odd\n"
                           "bracket A B = " + e.to_string(basis) + "\n";
        AlgebraFile f = parse_algebra_file(text);
        CHECK(f.hom.algebra.entry(0, 1) == e);
    }
}

TEST_CASE("map files: alpha lines over a host basis") {
    HomSuperAlgebra osp = builtin(BuiltinId::osp12);
    EvenMap alpha = parse_alpha_file("algebra al\n"
                                     "param lambda\n"
                                     "alpha X = lambda^2*X\n"
                                     "alpha Y = lambda^-2*Y\n"
                                     "alpha F = lambda^-1*F\n"
                                     "alpha G = lambda*G\n",
                                     osp.algebra.basis(), osp.algebra.parameter());
    CHECK(check_endomorphism(alpha, osp.algebra).pass());
    CHECK(alpha.column(0) == Element::unit(0)); // H defaults to identity

    // table entries are rejected in map files
    CHECK_THROWS_AS((parse_map_file("algebra m\nbracket H H = 0\n", osp.algebra.basis(),
                                    osp.algebra.basis(), std::nullopt)),
                    parse_error);
    // parity-violating maps are rejected
    CHECK_THROWS_AS(
        (parse_alpha_file("algebra m\nalpha H = F\n", osp.algebra.basis(), std::nullopt)),
        structural_error);
}

TEST_CASE("window and rational literals") {
    Window w = parse_window("-3:3");
    CHECK(w.lo == -3);
    CHECK(w.hi == 3);
    CHECK(w.count() == 7);
    CHECK_THROWS_AS(parse_window("5:1"), structural_error);
    CHECK_THROWS_AS(parse_window("abc"), structural_error);
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("7") == Rational(7));
}

TEST_CASE("comments and blank lines are ignored") {
    AlgebraFile f = parse_algebra_file("algebra c\n"
                                       "# a comment line\n"
                                       "\n"
                                       "basis e : even  # trailing comment\n"
                                       "bracket e e = 0\n");
    CHECK(f.hom.algebra.dim() == 1);
}
