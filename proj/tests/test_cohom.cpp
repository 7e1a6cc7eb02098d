#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <da2/cohom.hpp>
#include <da2/genkit.hpp>

using namespace da2;

namespace {

DiffCochain zero_cochain(const DifferenceAlgebra& da, const DiffBimodule& bm, int degree) {
    const Space& a = da.alg.space;
    const Space& m = bm.bim.m;
    if (degree == 0)
        return make_cochain0(m, zero_vec(m));
    return make_cochain(degree,
                        zero_multimap(std::vector<Space>(static_cast<std::size_t>(degree), a), m),
                        zero_multimap(std::vector<Space>(static_cast<std::size_t>(degree - 1), a), m));
}

bool cochain_is_zero(const DiffCochain& c) {
    return is_zero(c.f) && (!c.chi || is_zero(*c.chi));
}

} // namespace

TEST_CASE("hochschild_d basics") {
    const AssocAlgebra q = algebra_q();
    const Bimodule reg{q.space, q.mult, q.mult};

    // zero cochain maps to zero
    CHECK(is_zero(hochschild_d(q, reg, zero_multimap({q.space, q.space}, q.space))));

    // scalar oracle: f = id on A = M = Q gives (df)(a,b) = ab
    const MultiMap df = hochschild_d(q, reg, to_multimap(identity_lin(q.space)));
    CHECK(df.at({0, 0, 0}) == Rational(1));

    // degree 0: u -> (a -> au - ua); vanishes on the commutative regular module
    const AssocAlgebra m2 = algebra_m2();
    const Bimodule m2reg{m2.space, m2.mult, m2.mult};
    const MultiMap d_e12 = hochschild_d(m2, m2reg, constant_map(m2.space, basis_vec(m2.space, 1)));
    // E11 E12 - E12 E11 = E12
    CHECK(eval(d_e12, {basis_vec(m2.space, 0)}) == basis_vec(m2.space, 1));
}

TEST_CASE("hochschild_d squares to zero") {
    Rng rng(23);
    for (const NamedAlgebra& na : {catalog_algebras()[1], catalog_algebras()[3], catalog_algebras()[4]}) {
        INFO(na.name);
        const Bimodule reg{na.alg.space, na.alg.mult, na.alg.mult};
        for (int deg = 0; deg <= 3; ++deg) {
            MultiMap f = deg == 0 ? constant_map(na.alg.space, rng.vec(na.alg.space))
                                  : rng.multimap(std::vector<Space>(static_cast<std::size_t>(deg), na.alg.space),
                                                 na.alg.space);
            CHECK(is_zero(hochschild_d(na.alg, reg, hochschild_d(na.alg, reg, f))));
        }
    }
}

TEST_CASE("partial_d_delta special cases") {
    const AssocAlgebra dual = algebra_dual();
    const Space& a = dual.space;
    Rng rng(29);
    const MultiMap f1 = rng.multimap({a}, a);
    const MultiMap f2 = rng.multimap({a, a}, a);

    // d = 0, Delta = 0 gives the zero operator
    CHECK(is_zero(partial_d_delta(f2, zero_lin(a, a), zero_lin(a, a))));

    // n = 1: pf = f o d - Delta o f
    const Lin d = rng.lin(a, a), Delta = rng.lin(a, a);
    CHECK(partial_d_delta(f1, d, Delta) ==
          sub(precompose(f1, 1, d), postcompose(Delta, to_multimap(to_lin(f1)))));

    // n = 2 with d = Delta = -Id: subsets give -f -f +f and -(-f) cancels all
    const Lin m = neg(identity_lin(a));
    CHECK(is_zero(partial_d_delta(f2, m, m)));

    // d = 0 reduces to -Delta o f
    CHECK(partial_d_delta(f2, zero_lin(a, a), Delta) == neg(postcompose(Delta, f2)));
}

TEST_CASE("diff_coboundary: zero, scalar hand contraction, degree-3 sign") {
    // scalar case A = M = Q, d = 0, Delta = 2, g(a) = 3a with zero chi:
    // delta(g, 0) = (delta_Hoch g, -p(g)) = (3ab, 6a).
    const AssocAlgebra q = algebra_q();
    const DifferenceAlgebra da{q, zero_lin(q.space, q.space)};
    DiffBimodule bm = regular_diff_bimodule(da);
    bm.Delta = scale(Rational(2), identity_lin(q.space));
    REQUIRE(check_diff_bimodule(da, bm).ok());

    const DiffCochain zero1 = zero_cochain(da, bm, 1);
    CHECK(cochain_is_zero(diff_coboundary(da, bm, zero1)));

    DiffCochain g = zero1;
    g.f.a[0] = 3;
    const DiffCochain dg = diff_coboundary(da, bm, g);
    CHECK(dg.degree == 2);
    CHECK(dg.f.at({0, 0, 0}) == Rational(3));
    CHECK(dg.chi->at({0, 0}) == Rational(6));

    // degree-3 sign: second component is delta^d(chi) - p(mu)
    Rng rng(31);
    const AssocAlgebra m2 = algebra_m2();
    const NamedAlgebra nm2{"m2", m2};
    const Lin phi = algebra_endomorphisms(nm2)[2];
    const DifferenceAlgebra dam2{m2, endo_to_diff(m2, phi)};
    const DiffBimodule reg = regular_diff_bimodule(dam2);
    const Space& s = m2.space;
    const MultiMap mu = rng.multimap({s, s, s}, s);
    const MultiMap chi = rng.multimap({s, s}, s);
    const DiffCochain out = diff_coboundary(dam2, reg, make_cochain(3, mu, chi));
    const Bimodule twisted = twist_bimodule(dam2, reg.bim);
    CHECK(out.f == hochschild_d(m2, reg.bim, mu));
    CHECK(*out.chi ==
          sub(hochschild_d(m2, twisted, chi), partial_d_delta(mu, dam2.d, reg.Delta)));
}

TEST_CASE("diff coboundary squares to zero in degrees 0..3") {
    std::uint64_t seed = 41;
    for (const NamedDiffAlgebra& nda : catalog_diff_algebras()) {
        INFO(nda.name);
        const std::vector<DiffBimodule> coeffs{regular_diff_bimodule(nda.da),
                                               twisted_regular_bimodule(nda.da)};
        for (const DiffBimodule& bm : coeffs) {
            REQUIRE(check_diff_bimodule(nda.da, bm).ok());
            Rng rng(seed++);
            for (int deg = 0; deg <= 3; ++deg) {
                const DiffCochain c = random_cochain(nda.da, bm, deg, rng);
                const DiffCochain dd = diff_coboundary(nda.da, bm, diff_coboundary(nda.da, bm, c));
                INFO("degree ", deg);
                CHECK(cochain_is_zero(dd));
            }
        }
    }
}

TEST_CASE("is_3_cocycle") {
    const AssocAlgebra m2 = algebra_m2();
    const DifferenceAlgebra da{m2, neg(identity_lin(m2.space))};
    const DiffBimodule bm = regular_diff_bimodule(da);
    const Space& s = m2.space;

    CHECK(is_3_cocycle(da, bm, zero_multimap({s, s, s}, s), zero_multimap({s, s}, s)));

    Rng rng(43);
    const DiffCochain c2 = random_cochain(da, bm, 2, rng);
    const DiffCochain c3 = diff_coboundary(da, bm, c2);
    CHECK(is_3_cocycle(da, bm, c3.f, *c3.chi));

    // a random mu is essentially never Hochschild-closed; this one is not
    const MultiMap mu = rng.multimap({s, s, s}, s);
    CHECK_FALSE(is_3_cocycle(da, bm, mu, *c3.chi));
}
