#ifndef DA2_GENKIT_HPP
#define DA2_GENKIT_HPP

#include <da2/cohom.hpp>
#include <da2/corresp.hpp>
#include <da2/hbimod.hpp>

#include <random>

namespace da2 {

// Deterministic random source. mt19937_64 output is fully specified, and the
// draws below avoid std distributions, so a seed pins every generated
// structure byte for byte across platforms.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    int range(int n) { return static_cast<int>(eng() % static_cast<std::uint64_t>(n)); }

    // Small rationals keep structure-constant growth tame in chained tests.
    Rational rat() {
        const int num = range(7) - 3;
        const int den = 1 + range(3);
        return Rational(num, den);
    }

    Vec vec(const Space& s) {
        Vec v(static_cast<std::size_t>(s.dim));
        for (auto& x : v)
            x = rat();
        return v;
    }

    Lin lin(const Space& src, const Space& dst) {
        Lin f(src, dst);
        for (auto& x : f.a)
            x = rat();
        return f;
    }

    MultiMap multimap(std::vector<Space> srcs, const Space& dst) {
        MultiMap m(std::move(srcs), dst);
        for (auto& x : m.a)
            x = rat();
        return m;
    }

    // Product of unipotent elementary matrices; exactly invertible.
    Lin invertible(const Space& s) {
        Lin f = identity_lin(s);
        if (s.dim < 2)
            return f;
        for (int step = 0; step < 2 * s.dim; ++step) {
            const int i = range(s.dim);
            int j = range(s.dim - 1);
            if (j >= i)
                ++j;
            Rational c = rat();
            Lin e = identity_lin(s);
            e.at(i, j) = c;
            f = compose_lin(e, f);
        }
        return f;
    }
};

// ---- algebra catalog -------------------------------------------------------

struct NamedAlgebra {
    std::string name;
    AssocAlgebra alg;
};

namespace detail {

inline AssocAlgebra algebra_from_table(int dim, const char* label,
                                       const std::vector<std::tuple<int, int, int, int>>& entries) {
    // entries: (i, j, k, c) meaning e_i * e_j has coefficient c on e_k
    Space s(dim, label);
    MultiMap mult({s, s}, s);
    for (const auto& [i, j, k, c] : entries)
        mult.at({k, i, j}) = c;
    return AssocAlgebra{s, mult};
}

} // namespace detail

// The ground field as an algebra.
inline AssocAlgebra algebra_q() { return detail::algebra_from_table(1, "Q", {{0, 0, 0, 1}}); }

// Dual numbers Q[e]/(e^2); basis 1, e.
inline AssocAlgebra algebra_dual() {
    return detail::algebra_from_table(2, "dual", {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}});
}

// Truncated polynomials Q[x]/(x^3); basis 1, x, x^2.
inline AssocAlgebra algebra_poly3() {
    std::vector<std::tuple<int, int, int, int>> t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i + j < 3)
                t.emplace_back(i, j, i + j, 1);
    return detail::algebra_from_table(3, "poly3", t);
}

// Full 2x2 matrix algebra; basis E11, E12, E21, E22.
inline AssocAlgebra algebra_m2() {
    std::vector<std::tuple<int, int, int, int>> t;
    auto id = [](int r, int c) { return 2 * r + c; };
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    if (b == c)
                        t.emplace_back(id(a, b), id(c, d), id(a, d), 1);
    return detail::algebra_from_table(4, "m2", t);
}

// Upper-triangular 2x2 matrices; basis E11, E12, E22.
inline AssocAlgebra algebra_ut2() {
    return detail::algebra_from_table(
        3, "ut2", {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 2, 1, 1}, {2, 2, 2, 1}});
}

// Group algebra Q[C2]; basis e, g.
inline AssocAlgebra algebra_qc2() {
    return detail::algebra_from_table(2, "qc2",
                                      {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}});
}

// A space with the zero multiplication.
inline AssocAlgebra algebra_zero2() { return detail::algebra_from_table(2, "zero2", {}); }

inline std::vector<NamedAlgebra> catalog_algebras() {
    return {{"q", algebra_q()},     {"dual", algebra_dual()}, {"poly3", algebra_poly3()},
            {"m2", algebra_m2()},   {"ut2", algebra_ut2()},   {"qc2", algebra_qc2()},
            {"zero2", algebra_zero2()}};
}

// ---- endomorphisms and difference operators --------------------------------

namespace detail {

inline Lin conjugation_m2(const std::vector<std::vector<Rational>>& g) {
    // phi(X) = g X g^{-1} on the matrix-unit basis of m2
    const Space s(4, "m2");
    const Rational det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    if (det == 0)
        throw ShapeError("conjugation_m2: singular matrix");
    std::vector<std::vector<Rational>> gi{{g[1][1] / det, -g[0][1] / det},
                                          {-g[1][0] / det, g[0][0] / det}};
    Lin phi(s, s);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            // image of E_{rc}
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    phi.at(2 * i + j, 2 * r + c) = g[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] *
                                                   gi[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)];
        }
    return phi;
}

} // namespace detail

// A few multiplicative endomorphisms of each catalog algebra; every returned
// map satisfies phi(ab) = phi(a)phi(b) (asserted).
inline std::vector<Lin> algebra_endomorphisms(const NamedAlgebra& na) {
    const AssocAlgebra& alg = na.alg;
    const Space& s = alg.space;
    std::vector<Lin> out;
    out.push_back(identity_lin(s));
    out.push_back(zero_lin(s, s));
    if (na.name == "dual") {
        Lin f = identity_lin(s);
        f.at(1, 1) = 2;
        out.push_back(f);
        Lin g = identity_lin(s);
        g.at(1, 1) = -1;
        out.push_back(g);
        Lin h = identity_lin(s);
        h.at(1, 1) = 0;
        out.push_back(h);
    } else if (na.name == "poly3") {
        // x -> 2x + x^2, hence x^2 -> 4x^2
        Lin f = identity_lin(s);
        f.at(1, 1) = 2;
        f.at(2, 1) = 1;
        f.at(2, 2) = 4;
        out.push_back(f);
        Lin g = identity_lin(s);
        g.at(1, 1) = 0;
        g.at(2, 2) = 0;
        out.push_back(g);
    } else if (na.name == "m2") {
        out.push_back(detail::conjugation_m2({{Rational(1), Rational(1)}, {Rational(0), Rational(1)}}));
        out.push_back(detail::conjugation_m2({{Rational(2), Rational(0)}, {Rational(0), Rational(1)}}));
        out.push_back(detail::conjugation_m2({{Rational(1), Rational(0)}, {Rational(1), Rational(1)}}));
    } else if (na.name == "ut2") {
        // conjugation by [[1,1],[0,1]]: E11 -> E11 - E12, E22 -> E22 + E12
        Lin f = identity_lin(s);
        f.at(1, 0) = -1;
        f.at(1, 2) = 1;
        out.push_back(f);
        // diagonal projection
        Lin g = identity_lin(s);
        g.at(1, 1) = 0;
        out.push_back(g);
    } else if (na.name == "qc2") {
        Lin f = identity_lin(s);
        f.at(1, 1) = -1;
        out.push_back(f);
        Lin g = zero_lin(s, s);
        g.at(0, 0) = 1;
        g.at(0, 1) = 1;
        out.push_back(g);
    } else if (na.name == "zero2") {
        Lin f(s, s);
        f.at(0, 1) = 1;
        f.at(1, 0) = 2;
        out.push_back(f);
    }
    for (const Lin& phi : out)
        if (!is_endomorphism(alg, phi))
            throw ValidationError("algebra_endomorphisms: non-multiplicative entry for " + na.name);
    return out;
}

// Valid difference operators: 0, -Id and phi - Id over the endomorphism list.
inline std::vector<Lin> gen_difference_ops(const NamedAlgebra& na) {
    const Space& s = na.alg.space;
    std::vector<Lin> out;
    out.push_back(zero_lin(s, s));
    out.push_back(neg(identity_lin(s)));
    for (const Lin& phi : algebra_endomorphisms(na)) {
        Lin d = endo_to_diff(na.alg, phi);
        if (std::find(out.begin(), out.end(), d) == out.end())
            out.push_back(d);
    }
    return out;
}

struct NamedDiffAlgebra {
    std::string name;
    DifferenceAlgebra da;
};

inline std::vector<NamedDiffAlgebra> catalog_diff_algebras() {
    std::vector<NamedDiffAlgebra> out;
    for (const NamedAlgebra& na : catalog_algebras()) {
        const std::vector<Lin> ds = gen_difference_ops(na);
        for (std::size_t k = 0; k < ds.size(); ++k)
            out.push_back({na.name + "/d" + std::to_string(k), DifferenceAlgebra{na.alg, ds[k]}});
    }
    return out;
}

// Twisted-coefficient companion of the regular bimodule: M^d actions with the
// same Delta = d.
inline DiffBimodule twisted_regular_bimodule(const DifferenceAlgebra& da) {
    const DiffBimodule reg = regular_diff_bimodule(da);
    return DiffBimodule{twist_bimodule(da, reg.bim), reg.Delta};
}

// ---- cochains and skeletal structures --------------------------------------

inline DiffCochain random_cochain(const DifferenceAlgebra& da, const DiffBimodule& bm, int degree,
                                  Rng& rng) {
    const Space& a = da.alg.space;
    const Space& m = bm.bim.m;
    if (degree == 0)
        return make_cochain0(m, rng.vec(m));
    return make_cochain(degree, rng.multimap(std::vector<Space>(static_cast<std::size_t>(degree), a), m),
                        rng.multimap(std::vector<Space>(static_cast<std::size_t>(degree - 1), a), m));
}

// Coboundary-built skeletal structure: (mu, chi) = delta(random 2-cochain).
inline TwoTermDiffAInf gen_skeletal(const DifferenceAlgebra& da, const DiffBimodule& bm,
                                    std::uint64_t seed) {
    Rng rng(seed);
    const DiffCochain c2 = random_cochain(da, bm, 2, rng);
    const DiffCochain c3 = diff_coboundary(da, bm, c2);
    return cocycle_to_skeletal(da, bm, c3.f, *c3.chi);
}

// ---- crossed modules -------------------------------------------------------

struct NamedCrossedModule {
    std::string name;
    CrossedModule cm;
};

// ((A,d),(A,d), Id) with actions given by the multiplication.
inline CrossedModule identity_crossed_module(const DifferenceAlgebra& da) {
    return CrossedModule{da, da, da.alg.mult, da.alg.mult, identity_lin(da.alg.space)};
}

// Strictly upper-triangular ideal of ut2 with -Id difference operators (the
// plain crossed module of associative algebras, twisted by d = -Id).
inline CrossedModule ut2_ideal_crossed_module() {
    const AssocAlgebra ut2 = algebra_ut2();
    const Space ideal(1, "span(E12)");
    MultiMap top_mult({ideal, ideal}, ideal); // E12 * E12 = 0
    MultiMap left({ut2.space, ideal}, ideal);
    left.at({0, 0, 0}) = 1; // E11 . E12 = E12
    MultiMap right({ideal, ut2.space}, ideal);
    right.at({0, 0, 2}) = 1; // E12 . E22 = E12
    Lin partial(ideal, ut2.space);
    partial.at(1, 0) = 1;
    const Lin dneg = neg(identity_lin(ut2.space));
    const Lin dneg_top = neg(identity_lin(ideal));
    return CrossedModule{DifferenceAlgebra{ut2, dneg},
                         DifferenceAlgebra{AssocAlgebra{ideal, top_mult}, dneg_top}, left, right,
                         partial};
}

// Zero boundary map onto a zero-multiplication top algebra; works over any
// difference bimodule.
inline CrossedModule zero_partial_crossed_module(const DifferenceAlgebra& da, const DiffBimodule& bm) {
    const Space& m = bm.bim.m;
    return CrossedModule{da, DifferenceAlgebra{AssocAlgebra{m, zero_multimap({m, m}, m)}, bm.Delta},
                         bm.bim.left, bm.bim.right, zero_lin(m, da.alg.space)};
}

inline std::vector<NamedCrossedModule> catalog_crossed_modules() {
    std::vector<NamedCrossedModule> out;
    for (const NamedDiffAlgebra& nda : catalog_diff_algebras()) {
        out.push_back({"id/" + nda.name, identity_crossed_module(nda.da)});
        out.push_back({"zero-partial/" + nda.name,
                       zero_partial_crossed_module(nda.da, regular_diff_bimodule(nda.da))});
    }
    out.push_back({"ut2-ideal", ut2_ideal_crossed_module()});
    return out;
}

// ---- homotopy bimodules ----------------------------------------------------

// Strict instance: M0 = M1 = A regular, delta = Id.
inline HBimod2 strict_hbimod(const AssocAlgebra& alg) {
    const Space& a = alg.space;
    return HBimod2{.m0 = a,
                   .m1 = a,
                   .delta = identity_lin(a),
                   .act_am0 = alg.mult,
                   .act_m0a = alg.mult,
                   .act_am1 = alg.mult,
                   .act_m1a = alg.mult,
                   .nu_aav = zero_multimap({a, a, a}, a),
                   .nu_ava = zero_multimap({a, a, a}, a),
                   .nu_vaa = zero_multimap({a, a, a}, a)};
}

// M1 = 0 with the regular M0.
inline HBimod2 m1zero_hbimod(const AssocAlgebra& alg) {
    const Space& a = alg.space;
    const Space z(0, "0");
    return HBimod2{.m0 = a,
                   .m1 = z,
                   .delta = zero_lin(z, a),
                   .act_am0 = alg.mult,
                   .act_m0a = alg.mult,
                   .act_am1 = zero_multimap({a, z}, z),
                   .act_m1a = zero_multimap({z, a}, z),
                   .nu_aav = zero_multimap({a, a, a}, z),
                   .nu_ava = zero_multimap({a, a, a}, z),
                   .nu_vaa = zero_multimap({a, a, a}, z)};
}

namespace detail {

// Coboundary of a pair of 2-cochains with one M0 slot; lands on a valid nu
// triple whenever the actions are honest bimodule actions.
struct NuFromEta {
    MultiMap nu_aav, nu_ava, nu_vaa;
};

inline NuFromEta nu_coboundary(const AssocAlgebra& alg, const HBimod2& h, const MultiMap& eta_am,
                               const MultiMap& eta_ma) {
    NuFromEta out{zero_multimap({alg.space, alg.space, h.m0}, h.m1),
                  zero_multimap({alg.space, h.m0, alg.space}, h.m1),
                  zero_multimap({h.m0, alg.space, alg.space}, h.m1)};
    out.nu_aav = sub(add(insert_compose(h.act_am1, 2, eta_am), insert_compose(eta_am, 2, h.act_am0)),
                     insert_compose(eta_am, 1, alg.mult));
    out.nu_ava = insert_compose(h.act_am1, 2, eta_ma);
    out.nu_ava = sub(out.nu_ava, insert_compose(eta_ma, 1, h.act_am0));
    out.nu_ava = add(out.nu_ava, insert_compose(eta_am, 2, h.act_m0a));
    out.nu_ava = sub(out.nu_ava, insert_compose(h.act_m1a, 1, eta_am));
    out.nu_vaa = sub(insert_compose(eta_ma, 2, alg.mult), insert_compose(eta_ma, 1, h.act_m0a));
    out.nu_vaa = sub(out.nu_vaa, insert_compose(h.act_m1a, 1, eta_ma));
    return out;
}

} // namespace detail

// Skeletal homotopy bimodule (delta = 0) with nu a coboundary of random
// one-slot 2-cochains. M0 = M1 = A with the regular actions.
inline HBimod2 skeletal_hbimod(const AssocAlgebra& alg, std::uint64_t seed) {
    Rng rng(seed);
    const Space& a = alg.space;
    HBimod2 h = strict_hbimod(alg);
    h.delta = zero_lin(a, a);
    const MultiMap eta_am = rng.multimap({a, a}, a);
    const MultiMap eta_ma = rng.multimap({a, a}, a);
    const detail::NuFromEta nu = detail::nu_coboundary(alg, h, eta_am, eta_ma);
    h.nu_aav = nu.nu_aav;
    h.nu_ava = nu.nu_ava;
    h.nu_vaa = nu.nu_vaa;
    return h;
}

// Difference versions.
inline DiffHBimod2 strict_diff_hbimod(const DifferenceAlgebra& da) {
    const Space& a = da.alg.space;
    return DiffHBimod2{strict_hbimod(da.alg), da.d, da.d, zero_multimap({a, a}, a),
                       zero_multimap({a, a}, a)};
}

inline DiffHBimod2 m1zero_diff_hbimod(const DifferenceAlgebra& da) {
    const Space& a = da.alg.space;
    const Space z(0, "0");
    return DiffHBimod2{m1zero_hbimod(da.alg), da.d, zero_lin(z, z), zero_multimap({a, a}, z),
                       zero_multimap({a, a}, z)};
}

// Skeletal difference homotopy bimodule: nu = coboundary(eta), theta built
// from the difference part of the same coboundary plus a twisted coboundary
// of a random 1-cochain zeta : M0 -> M1.
inline DiffHBimod2 skeletal_diff_hbimod(const DifferenceAlgebra& da, std::uint64_t seed) {
    Rng rng(seed);
    const Space& a = da.alg.space;
    HBimod2 h = strict_hbimod(da.alg);
    h.delta = zero_lin(a, a);
    const MultiMap eta_am = rng.multimap({a, a}, a);
    const MultiMap eta_ma = rng.multimap({a, a}, a);
    const Lin zeta = rng.lin(a, a);
    const detail::NuFromEta nu = detail::nu_coboundary(da.alg, h, eta_am, eta_ma);
    h.nu_aav = nu.nu_aav;
    h.nu_ava = nu.nu_ava;
    h.nu_vaa = nu.nu_vaa;

    const Lin& d = da.d;
    const Lin shift = add(identity_lin(a), d);
    // theta = p^{d,Delta}(eta) + twisted-coboundary(zeta)
    MultiMap theta_am = add(add(precompose(eta_am, 1, d), precompose(eta_am, 2, d)),
                            precompose(precompose(eta_am, 1, d), 2, d));
    theta_am = sub(theta_am, postcompose(d, eta_am));
    theta_am = add(theta_am, precompose(insert_compose(h.act_am1, 2, to_multimap(zeta)), 1, shift));
    theta_am = sub(theta_am, postcompose(zeta, h.act_am0));

    MultiMap theta_ma = add(add(precompose(eta_ma, 1, d), precompose(eta_ma, 2, d)),
                            precompose(precompose(eta_ma, 1, d), 2, d));
    theta_ma = sub(theta_ma, postcompose(d, eta_ma));
    theta_ma = add(theta_ma, precompose(insert_compose(h.act_m1a, 1, to_multimap(zeta)), 2, shift));
    theta_ma = sub(theta_ma, postcompose(zeta, h.act_m0a));

    return DiffHBimod2{h, d, d, theta_am, theta_ma};
}

// The sanctioned test families: strict, trivial-M1 and coboundary-built
// skeletal instances.
inline std::vector<HBimod2> gen_hbimods(const AssocAlgebra& alg, std::uint64_t seed = 1) {
    return {strict_hbimod(alg), m1zero_hbimod(alg), skeletal_hbimod(alg, seed),
            skeletal_hbimod(alg, seed + 1)};
}

inline std::vector<DiffHBimod2> gen_diff_hbimods(const DifferenceAlgebra& da, std::uint64_t seed = 1) {
    return {strict_diff_hbimod(da), m1zero_diff_hbimod(da), skeletal_diff_hbimod(da, seed)};
}

// ---- transported structures and valid morphisms ----------------------------

// Conjugates every structure map by invertible maps (P0, P1). The pair
// (P0, P1, 0, 0) is then a valid morphism from x to the transported object.
inline TwoTermDiffAInf transport(const TwoTermDiffAInf& x, const Lin& p0, const Lin& p1) {
    const Lin q0 = inverse(p0);
    const Lin q1 = inverse(p1);
    const AInf2& a = x.ainf;
    AInf2 b{TwoTermComplex{a.a0(), a.a1(), compose_lin(p0, compose_lin(a.cx.delta, q1))},
            postcompose(p0, precompose(precompose(a.m00, 1, q0), 2, q0)),
            postcompose(p1, precompose(precompose(a.m01, 1, q0), 2, q1)),
            postcompose(p1, precompose(precompose(a.m10, 1, q1), 2, q0)),
            postcompose(p1, precompose(precompose(precompose(a.mu, 1, q0), 2, q0), 3, q0))};
    DiffOp2 d{compose_lin(p0, compose_lin(x.dop.d0, q0)), compose_lin(p1, compose_lin(x.dop.d1, q1)),
              postcompose(p1, precompose(precompose(x.dop.d2, 1, q0), 2, q0))};
    return TwoTermDiffAInf{std::move(b), std::move(d)};
}

inline DiffAInf2Morphism base_change_morphism(const Lin& p0, const Lin& p1, const Space& dst_a1) {
    return DiffAInf2Morphism{AInf2Morphism{p0, p1, zero_multimap({p0.src, p0.src}, dst_a1)},
                             zero_lin(p0.src, dst_a1)};
}

// Gauge endomorphism (Id, Id, b, l) of a skeletal object with d0 = d1 = 0:
// b and l are Hochschild coboundaries of a random 1- and 0-cochain.
inline DiffAInf2Morphism gauge_endomorphism(const TwoTermDiffAInf& x, std::uint64_t seed) {
    if (!is_skeletal(x) || !is_zero(x.dop.d0) || !is_zero(x.dop.d1))
        throw ValidationError("gauge_endomorphism: needs a skeletal object with zero d0, d1");
    Rng rng(seed);
    const Space& a0 = x.ainf.a0();
    const Space& a1 = x.ainf.a1();
    const Bimodule coeff{a1, x.ainf.m01, x.ainf.m10};
    const AssocAlgebra alg{a0, x.ainf.m00};
    const MultiMap b = hochschild_d(alg, coeff, to_multimap(rng.lin(a0, a1)));
    const Lin l = to_lin(hochschild_d(alg, coeff, constant_map(a1, rng.vec(a1))));
    return DiffAInf2Morphism{AInf2Morphism{identity_lin(a0), identity_lin(a1), b}, l};
}

// Blockwise direct sum; every identity holds componentwise.
inline TwoTermDiffAInf direct_sum(const TwoTermDiffAInf& x, const TwoTermDiffAInf& y) {
    const SumSpace a0({x.ainf.a0(), y.ainf.a0()}, "A0+A0'");
    const SumSpace a1({x.ainf.a1(), y.ainf.a1()}, "A1+A1'");
    auto mm = [&](const MultiMap& mx, const MultiMap& my, const std::vector<const SumSpace*>& slots,
                  const SumSpace& dst) {
        std::vector<Space> srcs;
        std::vector<SumSpace> sums;
        for (const SumSpace* s : slots) {
            srcs.push_back(s->whole);
            sums.push_back(*s);
        }
        MultiMap m(srcs, dst.whole);
        add_block(m, sums, dst, mx, std::vector<int>(slots.size(), 0), 0);
        add_block(m, sums, dst, my, std::vector<int>(slots.size(), 1), 1);
        return m;
    };
    AInf2 a{TwoTermComplex{a0.whole, a1.whole, direct_sum(a1, a0, {x.ainf.cx.delta, y.ainf.cx.delta})},
            mm(x.ainf.m00, y.ainf.m00, {&a0, &a0}, a0),
            mm(x.ainf.m01, y.ainf.m01, {&a0, &a1}, a1),
            mm(x.ainf.m10, y.ainf.m10, {&a1, &a0}, a1),
            mm(x.ainf.mu, y.ainf.mu, {&a0, &a0, &a0}, a1)};
    DiffOp2 d{direct_sum(a0, a0, {x.dop.d0, y.dop.d0}), direct_sum(a1, a1, {x.dop.d1, y.dop.d1}),
              mm(x.dop.d2, y.dop.d2, {&a0, &a0}, a1)};
    return TwoTermDiffAInf{std::move(a), std::move(d)};
}

} // namespace da2

#endif
