#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <da2/genkit.hpp>
#include <da2/hbimod.hpp>

using namespace da2;

TEST_CASE("homotopy-bimodule checker on the generated families") {
    for (const NamedAlgebra& na : catalog_algebras()) {
        INFO(na.name);
        CHECK(check_hbimod(na.alg, strict_hbimod(na.alg)).ok());
        CHECK(check_hbimod(na.alg, m1zero_hbimod(na.alg)).ok());
        CHECK(check_hbimod(na.alg, skeletal_hbimod(na.alg, 91)).ok());
    }
}

TEST_CASE("difference homotopy-bimodule checker on the generated families") {
    for (const NamedDiffAlgebra& nda : catalog_diff_algebras()) {
        INFO(nda.name);
        CHECK(check_diff_hbimod(nda.da, strict_diff_hbimod(nda.da)).ok());
        CHECK(check_diff_hbimod(nda.da, m1zero_diff_hbimod(nda.da)).ok());
        CHECK(check_diff_hbimod(nda.da, skeletal_diff_hbimod(nda.da, 93)).ok());
    }
}

TEST_CASE("a broken nu is reported with the right tag") {
    const AssocAlgebra m2 = algebra_m2();
    HBimod2 h = skeletal_hbimod(m2, 95);
    h.nu_aav.a[5] += 1;
    const CheckReport rep = check_hbimod(m2, h);
    CHECK_FALSE(rep.ok());
    CHECK((rep.has_tag("(id-nu1)") || rep.has_tag("(id-nu2)")));
}

TEST_CASE("semidirect product: trivial module, pure-algebra mu slots") {
    const AssocAlgebra qc2 = algebra_qc2();
    // M0 = M1 = 0: the semidirect product is the algebra itself with mu = 0
    const Space z(0, "0");
    HBimod2 trivial{z,
                    z,
                    zero_lin(z, z),
                    zero_multimap({qc2.space, z}, z),
                    zero_multimap({z, qc2.space}, z),
                    zero_multimap({qc2.space, z}, z),
                    zero_multimap({z, qc2.space}, z),
                    zero_multimap({qc2.space, qc2.space, z}, z),
                    zero_multimap({qc2.space, z, qc2.space}, z),
                    zero_multimap({z, qc2.space, qc2.space}, z)};
    const AInf2 s = semidirect_ainf2(qc2, trivial);
    CHECK(s.a0().dim == qc2.space.dim);
    CHECK(s.a1().dim == 0);
    CHECK(s.m00.a == qc2.mult.a);
    CHECK(is_zero(s.mu));

    // nonzero nu: mu vanishes on pure-algebra triples (all M0 slots are zero)
    const AssocAlgebra dual = algebra_dual();
    const HBimod2 h = skeletal_hbimod(dual, 97);
    REQUIRE_FALSE(is_zero(h.nu_aav));
    const AInf2 sd = semidirect_ainf2(dual, h);
    const SumSpace a0 = semidirect_sum(dual, h);
    for (int i = 0; i < dual.space.dim; ++i)
        for (int j = 0; j < dual.space.dim; ++j)
            for (int k = 0; k < dual.space.dim; ++k) {
                const Vec x = basis_vec(a0.whole, a0.offset[0] + i);
                const Vec y = basis_vec(a0.whole, a0.offset[0] + j);
                const Vec zv = basis_vec(a0.whole, a0.offset[0] + k);
                CHECK(is_zero(eval(sd.mu, {x, y, zv})));
            }
}

TEST_CASE("difference semidirect product: strictness and skeletality transfer") {
    for (const NamedDiffAlgebra& nda : catalog_diff_algebras()) {
        if (nda.da.alg.space.dim > 3)
            continue;
        INFO(nda.name);
        const TwoTermDiffAInf strict = semidirect_diff(nda.da, strict_diff_hbimod(nda.da));
        CHECK(is_strict(strict));
        const TwoTermDiffAInf skel = semidirect_diff(nda.da, skeletal_diff_hbimod(nda.da, 99));
        CHECK(is_skeletal(skel));
    }
}

TEST_CASE("d2 of the semidirect product evaluates theta on basis pairs") {
    // 1-dim A with d = -Id; theta from the zeta part is nonzero
    const AssocAlgebra q = algebra_q();
    const DifferenceAlgebra da{q, neg(identity_lin(q.space))};
    DiffHBimod2 dh = skeletal_diff_hbimod(da, 2);
    REQUIRE_FALSE(is_zero(dh.theta_am));
    const TwoTermDiffAInf sd = semidirect_diff(da, dh);
    const SumSpace a0 = semidirect_sum(da.alg, dh.base);
    const Vec pure_a = basis_vec(a0.whole, a0.offset[0]);
    const Vec pure_v = basis_vec(a0.whole, a0.offset[1]);
    // d2((a,0),(0,v)) = theta(a, v)
    CHECK(eval(sd.dop.d2, {pure_a, pure_v}) ==
          eval(dh.theta_am, {basis_vec(q.space, 0), basis_vec(dh.base.m0, 0)}));
    // d2((0,u),(b,0)) = theta(u, b)
    CHECK(eval(sd.dop.d2, {pure_v, pure_a}) ==
          eval(dh.theta_ma, {basis_vec(dh.base.m0, 0), basis_vec(q.space, 0)}));
}

TEST_CASE("2-algebra semidirect product") {
    const AssocAlgebra q = algebra_q();
    const DifferenceAlgebra da{q, zero_lin(q.space, q.space)};

    // s/t/i laws on a 1+1+1 instance with delta = Id: t(a,u,xi) = (a, u + xi)
    const DiffHBimod2 dh = strict_diff_hbimod(da);
    const DiffAss2 c = semidirect_2alg(da, dh);
    REQUIRE(c.tv.c1.dim == 3);
    REQUIRE(c.tv.c0.dim == 2);
    CHECK(eval(c.tv.t, basis_vec(c.tv.c1, 2)) == basis_vec(c.tv.c0, 1)); // t(xi) = delta(xi) slot
    CHECK(eval(c.tv.s, basis_vec(c.tv.c1, 2)) == zero_vec(c.tv.c0));
    CHECK(eval(c.tv.i, basis_vec(c.tv.c0, 0)) == basis_vec(c.tv.c1, 0));

    // equals T applied to the difference semidirect product
    CHECK(c == functor_T(semidirect_diff(da, dh)));

    // M1 = 0 gives identity-like associator and difference witness
    const AssocAlgebra dual = algebra_dual();
    const DifferenceAlgebra dad{dual, neg(identity_lin(dual.space))};
    const DiffAss2 c0 = semidirect_2alg(dad, m1zero_diff_hbimod(dad));
    CHECK(is_strict_2alg(c0));

    // a skeletal one with nonzero nu is not strict as a 2-algebra
    const DiffAss2 c1 = semidirect_2alg(dad, skeletal_diff_hbimod(dad, 101));
    CHECK_FALSE(is_strict_2alg(c1));
}
