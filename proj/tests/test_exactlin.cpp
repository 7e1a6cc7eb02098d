#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <da2/genkit.hpp>
#include <da2/linalg.hpp>

using namespace da2;

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("7/2") == Rational(7, 2));
    CHECK(parse_rational("-9/6") == Rational(-3, 2));
    CHECK(parse_rational("4") == Rational(4));
    CHECK(rational_str(parse_rational("-9/6")) == "-3/2");
    CHECK(rational_str(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("a/b"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("apply: zero map, identity, and the m2 multiplication") {
    const Space v(3, "V");
    const MultiMap z = zero_multimap({v, v}, v);
    CHECK(eval(z, {basis_vec(v, 0), basis_vec(v, 2)}) == zero_vec(v));

    const MultiMap id1 = to_multimap(identity_lin(v));
    for (int i = 0; i < 3; ++i)
        CHECK(eval(id1, {basis_vec(v, i)}) == basis_vec(v, i));

    // E11 * E12 = E12 in M2(Q); basis order E11, E12, E21, E22.
    const AssocAlgebra m2 = algebra_m2();
    const Vec e11 = basis_vec(m2.space, 0);
    const Vec e12 = basis_vec(m2.space, 1);
    CHECK(eval(m2.mult, {e11, e12}) == e12);
    // E12 * E11 = 0, E12 * E21 = E11.
    CHECK(eval(m2.mult, {e12, e11}) == zero_vec(m2.space));
    CHECK(eval(m2.mult, {e12, basis_vec(m2.space, 2)}) == e11);
}

TEST_CASE("compose_lin: identity, zero, and a frozen 2x2 product") {
    const Space v(2, "V");
    Rng rng(11);
    const Lin f = rng.lin(v, v);
    CHECK(compose_lin(identity_lin(v), f) == f);
    CHECK(compose_lin(f, zero_lin(v, v)) == zero_lin(v, v));

    Lin g(v, v), h(v, v);
    g.at(0, 0) = Rational(1, 2);
    g.at(0, 1) = -1;
    g.at(1, 0) = 3;
    g.at(1, 1) = Rational(2, 3);
    h.at(0, 0) = 2;
    h.at(0, 1) = Rational(1, 3);
    h.at(1, 0) = -1;
    h.at(1, 1) = 5;
    const Lin gh = compose_lin(g, h);
    // hand contraction of g . h
    CHECK(gh.at(0, 0) == Rational(2));
    CHECK(gh.at(0, 1) == Rational(-29, 6));
    CHECK(gh.at(1, 0) == Rational(16, 3));
    CHECK(gh.at(1, 1) == Rational(13, 3));
}

TEST_CASE("kernel_basis: identity, zero, and the projection (x,h) -> x") {
    const Space v(2, "V");
    CHECK(kernel_basis(identity_lin(v)).empty());
    CHECK(kernel_basis(zero_lin(v, v)).size() == 2);

    // s : A0 + A1 -> A0 with dims (2, 3); kernel must span {0} + A1.
    const SumSpace c({Space(2, "A0"), Space(3, "A1")});
    const Lin s = c.projection(0);
    const std::vector<Vec> kb = kernel_basis(s);
    REQUIRE(kb.size() == 3);
    for (int j = 0; j < 3; ++j)
        CHECK(kb[static_cast<std::size_t>(j)] == basis_vec(c.whole, 2 + j));
}

TEST_CASE("kernel vectors are independent and annihilated") {
    Rng rng(5);
    const Space src(6, "src");
    const Space dst(3, "dst");
    for (int trial = 0; trial < 10; ++trial) {
        const Lin f = rng.lin(src, dst);
        const std::vector<Vec> kb = kernel_basis(f);
        for (const Vec& v : kb)
            CHECK(is_zero(eval(f, v)));
        if (!kb.empty()) {
            const Lin k = lin_from_columns(Space(static_cast<int>(kb.size()), "K"), src, kb);
            CHECK(compose_lin(left_inverse(k), k) == identity_lin(k.src)); // full column rank
        }
        // rank-nullity at full generality: echelon pivots + kernel = src dim
        CHECK(static_cast<int>(kb.size()) >= src.dim - dst.dim);
    }
}

TEST_CASE("precompose and postcompose") {
    const AssocAlgebra dual = algebra_dual();
    const Space& a = dual.space;
    CHECK(precompose(dual.mult, 1, identity_lin(a)) == dual.mult);
    CHECK(precompose(dual.mult, 2, identity_lin(a)) == dual.mult);
    CHECK(postcompose(zero_lin(a, a), dual.mult) == zero_multimap({a, a}, a));
    // slot-2 insertion of -Id flips the sign of every coefficient
    CHECK(precompose(dual.mult, 2, neg(identity_lin(a))) == neg(dual.mult));
}

TEST_CASE("precompose in distinct slots commutes") {
    Rng rng(7);
    const Space a(2, "A"), b(3, "B"), c(2, "C"), d(2, "D");
    for (int trial = 0; trial < 8; ++trial) {
        const MultiMap m = rng.multimap({a, b, c}, d);
        const Lin f = rng.lin(a, a);
        const Lin g = rng.lin(c, c);
        CHECK(precompose(precompose(m, 1, f), 3, g) == precompose(precompose(m, 3, g), 1, f));
    }
}

TEST_CASE("apply is multilinear") {
    Rng rng(13);
    const Space a(3, "A"), b(2, "B");
    for (int trial = 0; trial < 8; ++trial) {
        const MultiMap m = rng.multimap({a, b}, b);
        const Vec u = rng.vec(a), v = rng.vec(a), w = rng.vec(b);
        const Rational al = rng.rat(), be = rng.rat();
        const Vec lhs = eval(m, {add(scale(al, u), scale(be, v)), w});
        const Vec rhs = add(scale(al, eval(m, {u, w})), scale(be, eval(m, {v, w})));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("insert_compose matches pointwise evaluation") {
    Rng rng(17);
    const Space a(2, "A"), b(2, "B");
    const MultiMap outer = rng.multimap({a, b}, b);
    const MultiMap inner = rng.multimap({b, a}, b);
    const MultiMap whole = insert_compose(outer, 2, inner);
    REQUIRE(whole.srcs == std::vector<Space>{a, b, a});
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                const Vec x = basis_vec(a, i), y = basis_vec(b, j), z = basis_vec(a, k);
                CHECK(eval(whole, {x, y, z}) == eval(outer, {x, eval(inner, {y, z})}));
            }
}

TEST_CASE("direct sums and block assembly") {
    const SumSpace s({Space(2, "X"), Space(1, "Y")});
    const Lin f = direct_sum(s, s, {identity_lin(s.parts[0]), scale(Rational(3), identity_lin(s.parts[1]))});
    CHECK(eval(f, basis_vec(s.whole, 0)) == basis_vec(s.whole, 0));
    CHECK(eval(f, basis_vec(s.whole, 2)) == scale(Rational(3), basis_vec(s.whole, 2)));
    CHECK(compose_lin(s.projection(1), s.inclusion(1)) == identity_lin(s.parts[1]));
    CHECK(is_zero(compose_lin(s.projection(0), s.inclusion(1))));
}
