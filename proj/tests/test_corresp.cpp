#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <da2/corresp.hpp>
#include <da2/genkit.hpp>

using namespace da2;

TEST_CASE("crossed-module checker on the catalog") {
    for (const NamedCrossedModule& ncm : catalog_crossed_modules()) {
        INFO(ncm.name);
        CHECK(check_crossed_module(ncm.cm).ok());
    }
}

TEST_CASE("perturbing partial breaks (crm2)") {
    const AssocAlgebra m2 = algebra_m2();
    const DifferenceAlgebra da{m2, neg(identity_lin(m2.space))};
    CrossedModule cm = identity_crossed_module(da);
    cm.partial.at(1, 0) += 1; // no longer multiplicative
    const CheckReport rep = check_crossed_module(cm);
    CHECK_FALSE(rep.ok());
    CHECK(rep.has_tag("(crm2)"));
    CHECK(rep.has_tag("partial-mult"));
}

TEST_CASE("skeletal <-> cocycle round trips") {
    std::uint64_t seed = 80;
    int instances = 0;
    for (const NamedDiffAlgebra& nda : catalog_diff_algebras()) {
        if (nda.da.alg.space.dim > 3)
            continue; // keep the suite quick; acceptance covers the rest
        INFO(nda.name);
        const DiffBimodule bm = regular_diff_bimodule(nda.da);
        const TwoTermDiffAInf x = gen_skeletal(nda.da, bm, seed++);
        const SkeletalData data = skeletal_to_cocycle(x);
        // re-extracted data is the input data
        CHECK(data.da.alg.mult == nda.da.alg.mult);
        CHECK(data.da.d == nda.da.d);
        CHECK(data.bm.bim.left == bm.bim.left);
        CHECK(data.bm.Delta == bm.Delta);
        CHECK(is_3_cocycle(data.da, data.bm, data.mu, data.chi));
        // and rebuilding gives back x on the nose
        const TwoTermDiffAInf y = cocycle_to_skeletal(data.da, data.bm, data.mu, data.chi);
        CHECK(y == x);
        ++instances;
    }
    CHECK(instances >= 8);
}

TEST_CASE("skeletal_to_cocycle rejects non-skeletal input") {
    const AssocAlgebra ut2 = algebra_ut2();
    const DifferenceAlgebra da{ut2, neg(identity_lin(ut2.space))};
    const TwoTermDiffAInf strict = crossed_to_strict(identity_crossed_module(da));
    CHECK_THROWS_AS(skeletal_to_cocycle(strict), ValidationError);
}

TEST_CASE("strict <-> crossed module round trips") {
    for (const NamedCrossedModule& ncm : catalog_crossed_modules()) {
        INFO(ncm.name);
        const TwoTermDiffAInf x = crossed_to_strict(ncm.cm);
        CHECK(is_strict(x));
        const CrossedModule back = strict_to_crossed(x);
        CHECK(back == ncm.cm);
    }
}

TEST_CASE("induced product symmetry witness") {
    const AssocAlgebra qc2 = algebra_qc2();
    const DifferenceAlgebra da{qc2, zero_lin(qc2.space, qc2.space)};
    const TwoTermDiffAInf x = crossed_to_strict(identity_crossed_module(da));
    CHECK(precompose(x.ainf.m01, 1, x.ainf.cx.delta) == precompose(x.ainf.m10, 2, x.ainf.cx.delta));
    // and the crossed module's top multiplication is that product
    const CrossedModule cm = strict_to_crossed(x);
    CHECK(cm.top.alg.mult == precompose(x.ainf.m01, 1, x.ainf.cx.delta));
}

TEST_CASE("strict object with trivial A1 gives a zero top algebra") {
    const AssocAlgebra dual = algebra_dual();
    const DifferenceAlgebra da{dual, neg(identity_lin(dual.space))};
    const TwoTermDiffAInf x = semidirect_diff(da, m1zero_diff_hbimod(da));
    REQUIRE(is_strict(x));
    REQUIRE(x.ainf.a1().dim == 0);
    const CrossedModule cm = strict_to_crossed(x);
    CHECK(cm.top.alg.space.dim == 0);
    CHECK(check_crossed_module(cm).ok());
}

TEST_CASE("strict_to_crossed rejects non-strict input") {
    const AssocAlgebra dual = algebra_dual();
    const DifferenceAlgebra da{dual, zero_lin(dual.space, dual.space)};
    const TwoTermDiffAInf sk = gen_skeletal(da, regular_diff_bimodule(da), 83);
    if (!is_strict(sk))
        CHECK_THROWS_AS(strict_to_crossed(sk), ValidationError);
}

TEST_CASE("the top algebra of strict_to_crossed is an honest difference algebra") {
    for (const NamedCrossedModule& ncm : catalog_crossed_modules()) {
        const TwoTermDiffAInf x = crossed_to_strict(ncm.cm);
        const CrossedModule back = strict_to_crossed(x);
        CHECK(check_associative(back.top.alg).ok());
        CHECK(check_difference(back.top.alg, back.top.d).ok());
    }
}
