#ifndef DA2_TWOALG_HPP
#define DA2_TWOALG_HPP

#include <da2/diffainf2.hpp>

namespace da2 {

// 2-vector space: objects C0, morphisms C1, linear source/target/identity
// maps. Composition is not stored; it is forced by the structure maps as
//   g o f = f + g - i(t(f)),
// equivalently arrow parts add along composition.
struct TwoVec {
    Space c0;
    Space c1;
    Lin s; // C1 -> C0
    Lin t; // C1 -> C0
    Lin i; // C0 -> C1
};

// Difference associative 2-algebra: bilinear functor (bullet0, bullet1),
// associator A (stored by its value on object triples), difference functor
// (D0, D1) and its witness D (value on object pairs).
struct DiffAss2 {
    TwoVec tv;
    MultiMap bullet0; // C0 x C0 -> C0
    MultiMap bullet1; // C1 x C1 -> C1
    MultiMap assoc;   // C0^3 -> C1,  A_{x,y,z}
    Lin D0;           // C0 -> C0
    Lin D1;           // C1 -> C1
    MultiMap Dnat;    // C0^2 -> C1,  D_{x,y}

    friend bool operator==(const DiffAss2& x, const DiffAss2& y) {
        return x.tv.s == y.tv.s && x.tv.t == y.tv.t && x.tv.i == y.tv.i && x.bullet0 == y.bullet0 &&
               x.bullet1 == y.bullet1 && x.assoc == y.assoc && x.D0 == y.D0 && x.D1 == y.D1 &&
               x.Dnat == y.Dnat;
    }
};

struct DiffAss2Morphism {
    Lin F0;      // C0 -> C0'
    Lin F1;      // C1 -> C1'
    MultiMap F2; // C0 x C0 -> C1'
    Lin F3;      // C0 -> C1'

    friend bool operator==(const DiffAss2Morphism& f, const DiffAss2Morphism& g) {
        return f.F0 == g.F0 && f.F1 == g.F1 && f.F2 == g.F2 && f.F3 == g.F3;
    }
};

// f -> f - i(s(f)), the ker(s) component of a morphism.
inline Lin arrow_map(const TwoVec& tv) { return sub(identity_lin(tv.c1), compose_lin(tv.i, tv.s)); }

inline Vec arrow(const TwoVec& tv, const Vec& f) { return eval(arrow_map(tv), f); }

namespace detail {

inline Lin target_unit(const TwoVec& tv) { return compose_lin(tv.i, tv.t); }

// Forced composition of a chain of morphism-valued maps, first applied first.
inline MultiMap compose_chain(const TwoVec& tv, const std::vector<MultiMap>& chain) {
    const Lin it = target_unit(tv);
    MultiMap comp = chain.front();
    for (std::size_t k = 1; k < chain.size(); ++k)
        comp = sub(add(comp, chain[k]), postcompose(it, comp));
    return comp;
}

inline Lin compose_chain(const TwoVec& tv, const std::vector<Lin>& chain) {
    const Lin it = target_unit(tv);
    Lin comp = chain.front();
    for (std::size_t k = 1; k < chain.size(); ++k)
        comp = sub(add(comp, chain[k]), compose_lin(it, comp));
    return comp;
}

} // namespace detail

inline void require_diffass2_shapes(const DiffAss2& x) {
    const Space& c0 = x.tv.c0;
    const Space& c1 = x.tv.c1;
    if (x.tv.s.src != c1 || x.tv.s.dst != c0 || x.tv.t.src != c1 || x.tv.t.dst != c0)
        throw ShapeError("diffass2: s, t must map C1 -> C0");
    if (x.tv.i.src != c0 || x.tv.i.dst != c1)
        throw ShapeError("diffass2: i must map C0 -> C1");
    if (x.bullet0.srcs != std::vector<Space>{c0, c0} || x.bullet0.dst != c0)
        throw ShapeError("diffass2: bullet0 shape mismatch");
    if (x.bullet1.srcs != std::vector<Space>{c1, c1} || x.bullet1.dst != c1)
        throw ShapeError("diffass2: bullet1 shape mismatch");
    if (x.assoc.srcs != std::vector<Space>{c0, c0, c0} || x.assoc.dst != c1)
        throw ShapeError("diffass2: associator shape mismatch");
    if (x.D0.src != c0 || x.D0.dst != c0 || x.D1.src != c1 || x.D1.dst != c1)
        throw ShapeError("diffass2: D0, D1 must be endomorphisms");
    if (x.Dnat.srcs != std::vector<Space>{c0, c0} || x.Dnat.dst != c1)
        throw ShapeError("diffass2: D witness shape mismatch");
}

// Full coherence check: 2-vector space axioms, functoriality of the product
// (including the interchange law), source/target constraints and naturality
// of A and D, the pentagon, and the (2-diff) compatibility in its arrow-part
// form. Everything is an identity of multilinear maps, checked on bases.
inline CheckReport check_diffass2(const DiffAss2& x) {
    require_diffass2_shapes(x);
    CheckReport rep;
    const TwoVec& tv = x.tv;
    const Lin id0 = identity_lin(tv.c0);
    const Lin id1 = identity_lin(tv.c1);

    compare_maps(rep, "2vec:s-i", compose_lin(tv.s, tv.i), id0);
    compare_maps(rep, "2vec:t-i", compose_lin(tv.t, tv.i), id0);

    compare_maps(rep, "bullet:s", postcompose(tv.s, x.bullet1),
                 precompose(precompose(x.bullet0, 1, tv.s), 2, tv.s));
    compare_maps(rep, "bullet:t", postcompose(tv.t, x.bullet1),
                 precompose(precompose(x.bullet0, 1, tv.t), 2, tv.t));
    compare_maps(rep, "bullet:i", precompose(precompose(x.bullet1, 1, tv.i), 2, tv.i),
                 postcompose(tv.i, x.bullet0));

    // Interchange, reduced to: (f - i(t f)) . k = 0 and h . (f - i(t f)) = 0
    // for k, h in ker(s).
    {
        const std::vector<Vec> kb = kernel_basis(tv.s);
        const Space kspace(static_cast<int>(kb.size()), "ker(s)");
        const Lin incl = lin_from_columns(kspace, tv.c1, kb);
        const Lin co_unit = sub(id1, detail::target_unit(tv));
        require_zero(rep, "interchange",
                     precompose(precompose(x.bullet1, 2, incl), 1, co_unit));
        require_zero(rep, "interchange",
                     precompose(precompose(x.bullet1, 1, incl), 2, co_unit));
    }

    compare_maps(rep, "assoc:s", postcompose(tv.s, x.assoc), insert_compose(x.bullet0, 1, x.bullet0));
    compare_maps(rep, "assoc:t", postcompose(tv.t, x.assoc), insert_compose(x.bullet0, 2, x.bullet0));

    {
        const MultiMap d0_both = precompose(precompose(x.bullet0, 1, x.D0), 2, x.D0);
        const MultiMap t_of_d = add(add(precompose(x.bullet0, 1, x.D0), precompose(x.bullet0, 2, x.D0)), d0_both);
        compare_maps(rep, "dnat:s", postcompose(tv.s, x.Dnat), postcompose(x.D0, x.bullet0));
        compare_maps(rep, "dnat:t", postcompose(tv.t, x.Dnat), t_of_d);
    }

    compare_maps(rep, "D:s", compose_lin(tv.s, x.D1), compose_lin(x.D0, tv.s));
    compare_maps(rep, "D:t", compose_lin(tv.t, x.D1), compose_lin(x.D0, tv.t));
    compare_maps(rep, "D:i", compose_lin(x.D1, tv.i), compose_lin(tv.i, x.D0));

    // Naturality of A against basis morphism triples.
    {
        const MultiMap fg_h = insert_compose(x.bullet1, 1, x.bullet1);
        const MultiMap f_gh = insert_compose(x.bullet1, 2, x.bullet1);
        const MultiMap a_ttt =
            precompose(precompose(precompose(x.assoc, 1, tv.t), 2, tv.t), 3, tv.t);
        const MultiMap a_sss =
            precompose(precompose(precompose(x.assoc, 1, tv.s), 2, tv.s), 3, tv.s);
        const Lin it = detail::target_unit(tv);
        MultiMap lhs = sub(add(fg_h, a_ttt), postcompose(it, fg_h));
        MultiMap rhs = sub(add(a_sss, f_gh), postcompose(it, a_sss));
        compare_maps(rep, "assoc-naturality", lhs, rhs);
    }

    // Naturality of D against basis morphism pairs.
    {
        const MultiMap d_ss = precompose(precompose(x.Dnat, 1, tv.s), 2, tv.s);
        const MultiMap d_tt = precompose(precompose(x.Dnat, 1, tv.t), 2, tv.t);
        const MultiMap sum3 = add(add(precompose(x.bullet1, 1, x.D1), precompose(x.bullet1, 2, x.D1)),
                                  precompose(precompose(x.bullet1, 1, x.D1), 2, x.D1));
        const MultiMap d1_prod = postcompose(x.D1, x.bullet1);
        const Lin it = detail::target_unit(tv);
        MultiMap lhs = sub(add(d_ss, sum3), postcompose(it, d_ss));
        MultiMap rhs = sub(add(d1_prod, d_tt), postcompose(it, d1_prod));
        compare_maps(rep, "dnat-naturality", lhs, rhs);
    }

    // Pentagon.
    {
        const MultiMap p1 = insert_compose(x.assoc, 1, x.bullet0); // A_{x.y, z, t}
        const MultiMap p2 = insert_compose(x.assoc, 3, x.bullet0); // A_{x, y, z.t}
        const MultiMap r1 =
            precompose(insert_compose(x.bullet1, 1, x.assoc), 4, tv.i); // A_{x,y,z} . 1_t
        const MultiMap r2 = insert_compose(x.assoc, 2, x.bullet0);      // A_{x, y.z, t}
        const MultiMap r3 =
            precompose(insert_compose(x.bullet1, 2, x.assoc), 1, tv.i); // 1_x . A_{y,z,t}
        compare_maps(rep, "pentagon", detail::compose_chain(tv, {p1, p2}),
                     detail::compose_chain(tv, {r1, r2, r3}));
    }

    // (2-diff) in arrow-part form.
    {
        const Lin arr = arrow_map(tv);
        const MultiMap av = postcompose(arr, x.assoc);
        const MultiMap dv = postcompose(arr, x.Dnat);
        const Lin unit_shift = compose_lin(tv.i, add(id0, x.D0));
        MultiMap lhs = precompose(insert_compose(x.bullet1, 2, dv), 1, unit_shift);
        lhs = add(lhs, insert_compose(dv, 2, x.bullet0));
        lhs = add(lhs, postcompose(x.D1, av));
        MultiMap rhs = zero_multimap({tv.c0, tv.c0, tv.c0}, tv.c1);
        for (int mask = 1; mask < 8; ++mask) {
            MultiMap term = av;
            for (int k = 0; k < 3; ++k)
                if (mask & (1 << k))
                    term = precompose(term, k + 1, x.D0);
            rhs = add(rhs, term);
        }
        rhs = add(rhs, insert_compose(dv, 1, x.bullet0));
        rhs = add(rhs, precompose(insert_compose(x.bullet1, 1, dv), 3, unit_shift));
        compare_maps(rep, "(2-diff)", lhs, rhs);
    }

    return rep;
}

inline bool is_strict_2alg(const DiffAss2& x) {
    const Lin arr = arrow_map(x.tv);
    return is_zero(postcompose(arr, x.assoc)) && is_zero(postcompose(arr, x.Dnat));
}

inline CheckReport check_diffass2_morphism(const DiffAss2& src, const DiffAss2& dst,
                                           const DiffAss2Morphism& m) {
    if (m.F0.src != src.tv.c0 || m.F0.dst != dst.tv.c0 || m.F1.src != src.tv.c1 ||
        m.F1.dst != dst.tv.c1)
        throw ShapeError("diffass2 morphism: functor shape mismatch");
    if (m.F2.srcs != std::vector<Space>{src.tv.c0, src.tv.c0} || m.F2.dst != dst.tv.c1)
        throw ShapeError("diffass2 morphism: F2 shape mismatch");
    if (m.F3.src != src.tv.c0 || m.F3.dst != dst.tv.c1)
        throw ShapeError("diffass2 morphism: F3 shape mismatch");

    CheckReport rep;
    compare_maps(rep, "functor:s", compose_lin(dst.tv.s, m.F1), compose_lin(m.F0, src.tv.s));
    compare_maps(rep, "functor:t", compose_lin(dst.tv.t, m.F1), compose_lin(m.F0, src.tv.t));
    compare_maps(rep, "functor:i", compose_lin(m.F1, src.tv.i), compose_lin(dst.tv.i, m.F0));

    compare_maps(rep, "F2:s", postcompose(dst.tv.s, m.F2),
                 precompose(precompose(dst.bullet0, 1, m.F0), 2, m.F0));
    compare_maps(rep, "F2:t", postcompose(dst.tv.t, m.F2), postcompose(m.F0, src.bullet0));
    compare_maps(rep, "F3:s", compose_lin(dst.tv.s, m.F3), compose_lin(dst.D0, m.F0));
    compare_maps(rep, "F3:t", compose_lin(dst.tv.t, m.F3), compose_lin(m.F0, src.D0));

    // Naturality of F2 against basis morphism pairs.
    {
        const MultiMap f2_ss = precompose(precompose(m.F2, 1, src.tv.s), 2, src.tv.s);
        const MultiMap f2_tt = precompose(precompose(m.F2, 1, src.tv.t), 2, src.tv.t);
        const MultiMap f1_prod = postcompose(m.F1, src.bullet1);
        const MultiMap prod_f1 = precompose(precompose(dst.bullet1, 1, m.F1), 2, m.F1);
        const Lin it = detail::target_unit(dst.tv);
        compare_maps(rep, "F2-naturality", sub(add(f2_ss, f1_prod), postcompose(it, f2_ss)),
                     sub(add(prod_f1, f2_tt), postcompose(it, prod_f1)));
    }

    // Naturality of F3 against basis morphisms.
    {
        const Lin f3_s = compose_lin(m.F3, src.tv.s);
        const Lin f3_t = compose_lin(m.F3, src.tv.t);
        const Lin f1_d1 = compose_lin(m.F1, src.D1);
        const Lin d1_f1 = compose_lin(dst.D1, m.F1);
        const Lin it = detail::target_unit(dst.tv);
        compare_maps(rep, "F3-naturality", sub(add(f3_s, f1_d1), compose_lin(it, f3_s)),
                     sub(add(d1_f1, f3_t), compose_lin(it, d1_f1)));
    }

    // Compatibility with the associators (the 2-algebra homomorphism hexagon).
    {
        const Lin i_f0 = compose_lin(dst.tv.i, m.F0);
        const MultiMap l1 =
            precompose(insert_compose(dst.bullet1, 1, m.F2), 3, i_f0); // F2(x,y) . 1
        const MultiMap l2 = insert_compose(m.F2, 1, src.bullet0);      // F2(x.y, z)
        const MultiMap l3 = postcompose(m.F1, src.assoc);              // F1(A_{x,y,z})
        const MultiMap r1 =
            precompose(precompose(precompose(dst.assoc, 1, m.F0), 2, m.F0), 3, m.F0);
        const MultiMap r2 =
            precompose(insert_compose(dst.bullet1, 2, m.F2), 1, i_f0); // 1 . F2(y,z)
        const MultiMap r3 = insert_compose(m.F2, 2, src.bullet0);      // F2(x, y.z)
        compare_maps(rep, "hom-assoc", detail::compose_chain(dst.tv, {l1, l2, l3}),
                     detail::compose_chain(dst.tv, {r1, r2, r3}));
    }

    // (2-diff-homo) in arrow-part form.
    {
        const Lin arr_src = arrow_map(src.tv);
        const Lin arr_dst = arrow_map(dst.tv);
        const MultiMap f2v = postcompose(arr_dst, m.F2);
        const Lin f3v = compose_lin(arr_dst, m.F3);
        const MultiMap dv_src = postcompose(arr_src, src.Dnat);
        const MultiMap dv_dst = postcompose(arr_dst, dst.Dnat);
        const Lin i_f0 = compose_lin(dst.tv.i, m.F0);
        MultiMap lhs = add(add(precompose(f2v, 1, src.D0), precompose(f2v, 2, src.D0)),
                           precompose(precompose(f2v, 1, src.D0), 2, src.D0));
        lhs = add(lhs, precompose(insert_compose(dst.bullet1, 1, to_multimap(f3v)), 2, i_f0));
        lhs = add(lhs, precompose(insert_compose(dst.bullet1, 2, to_multimap(f3v)), 1, i_f0));
        lhs = add(lhs, precompose(precompose(dv_dst, 1, m.F0), 2, m.F0));
        MultiMap rhs = postcompose(m.F1, dv_src);
        rhs = add(rhs, postcompose(f3v, src.bullet0));
        rhs = add(rhs, postcompose(dst.D1, f2v));
        compare_maps(rep, "(2-diff-homo)", lhs, rhs);
    }

    return rep;
}

inline DiffAss2Morphism identity_diffass2_morphism(const DiffAss2& x) {
    return DiffAss2Morphism{identity_lin(x.tv.c0), identity_lin(x.tv.c1),
                            postcompose(x.tv.i, x.bullet0), compose_lin(x.tv.i, x.D0)};
}

inline DiffAss2Morphism compose_diffass2_morphism(const DiffAss2& last_target,
                                                  const DiffAss2Morphism& g,
                                                  const DiffAss2Morphism& f) {
    if (f.F0.dst != g.F0.src || f.F1.dst != g.F1.src)
        throw ShapeError("compose_diffass2_morphism: endpoints do not match");
    const Lin it = detail::target_unit(last_target.tv);
    const MultiMap first2 = precompose(precompose(g.F2, 1, f.F0), 2, f.F0);
    const MultiMap second2 = postcompose(g.F1, f.F2);
    const Lin first3 = compose_lin(g.F3, f.F0);
    const Lin second3 = compose_lin(g.F1, f.F3);
    return DiffAss2Morphism{compose_lin(g.F0, f.F0), compose_lin(g.F1, f.F1),
                            sub(add(first2, second2), postcompose(it, first2)),
                            sub(add(first3, second3), compose_lin(it, first3))};
}

// ---- the equivalence functors ---------------------------------------------

// Kernel presentation of A1 = ker(s) inside C1.
struct KernelData {
    Space space;
    Lin incl; // A1 -> C1
    Lin proj; // C1 -> A1, a left inverse of incl
};

inline KernelData kernel_data(const TwoVec& tv) {
    const std::vector<Vec> kb = kernel_basis(tv.s);
    const Space ks(static_cast<int>(kb.size()), "ker(s)");
    const Lin incl = lin_from_columns(ks, tv.c1, kb);
    return KernelData{ks, incl, left_inverse(incl)};
}

namespace detail {

inline MultiMap restrict_to_kernel(const KernelData& k, const TwoVec& tv, const MultiMap& raw,
                                   const char* what) {
    if (!is_zero(postcompose(tv.s, raw)))
        throw ValidationError(std::string("functor S: ") + what + " does not land in ker(s)");
    return postcompose(k.proj, raw);
}

inline Lin restrict_to_kernel(const KernelData& k, const TwoVec& tv, const Lin& raw, const char* what) {
    if (!is_zero(compose_lin(tv.s, raw)))
        throw ValidationError(std::string("functor S: ") + what + " does not land in ker(s)");
    return compose_lin(k.proj, raw);
}

} // namespace detail

// S : DiffAss2 -> 2TermDiffAInf.
inline TwoTermDiffAInf functor_S(const DiffAss2& x) {
    const TwoVec& tv = x.tv;
    const KernelData k = kernel_data(tv);
    const Lin arr = arrow_map(tv);
    const Lin delta = compose_lin(tv.t, k.incl);
    const MultiMap m01 = detail::restrict_to_kernel(
        k, tv, precompose(precompose(x.bullet1, 1, tv.i), 2, k.incl), "i_x . h");
    const MultiMap m10 = detail::restrict_to_kernel(
        k, tv, precompose(precompose(x.bullet1, 1, k.incl), 2, tv.i), "h . i_x");
    const MultiMap mu =
        detail::restrict_to_kernel(k, tv, postcompose(arr, x.assoc), "arrow(A)");
    const Lin d1 = detail::restrict_to_kernel(k, tv, compose_lin(x.D1, k.incl), "D1|ker(s)");
    const MultiMap d2 = detail::restrict_to_kernel(k, tv, postcompose(arr, x.Dnat), "arrow(D)");
    return TwoTermDiffAInf{AInf2{TwoTermComplex{tv.c0, k.space, delta}, x.bullet0, m01, m10, mu},
                           DiffOp2{x.D0, d1, d2}};
}

inline DiffAInf2Morphism functor_S_mor(const DiffAss2& src, const DiffAss2& dst,
                                       const DiffAss2Morphism& m) {
    const KernelData ks = kernel_data(src.tv);
    const KernelData kd = kernel_data(dst.tv);
    const Lin arr = arrow_map(dst.tv);
    const Lin phi1 =
        detail::restrict_to_kernel(kd, dst.tv, compose_lin(m.F1, ks.incl), "F1|ker(s)");
    const MultiMap phi2 =
        detail::restrict_to_kernel(kd, dst.tv, postcompose(arr, m.F2), "arrow(F2)");
    const Lin phi3 = detail::restrict_to_kernel(kd, dst.tv, compose_lin(arr, m.F3), "arrow(F3)");
    return DiffAInf2Morphism{AInf2Morphism{m.F0, phi1, phi2}, phi3};
}

// T : 2TermDiffAInf -> DiffAss2, with C1 = A0 + A1.
inline SumSpace t_image_sum(const TwoTermDiffAInf& x) {
    return SumSpace({x.ainf.a0(), x.ainf.a1()}, "A0+A1");
}

inline DiffAss2 functor_T(const TwoTermDiffAInf& x) {
    const AInf2& a = x.ainf;
    const SumSpace c1 = t_image_sum(x);
    TwoVec tv;
    tv.c0 = a.a0();
    tv.c1 = c1.whole;
    tv.s = c1.projection(0);
    tv.t = add(c1.projection(0), compose_lin(a.cx.delta, c1.projection(1)));
    tv.i = c1.inclusion(0);

    MultiMap bullet1({c1.whole, c1.whole}, c1.whole);
    const std::vector<SumSpace> slots{c1, c1};
    add_block(bullet1, slots, c1, a.m00, {0, 0}, 0);
    add_block(bullet1, slots, c1, a.m01, {0, 1}, 1);
    add_block(bullet1, slots, c1, a.m10, {1, 0}, 1);
    add_block(bullet1, slots, c1, precompose(a.m01, 1, a.cx.delta), {1, 1}, 1);

    const MultiMap assoc = add(postcompose(c1.inclusion(0), insert_compose(a.m00, 1, a.m00)),
                               postcompose(c1.inclusion(1), a.mu));
    const Lin d1 = direct_sum(c1, c1, {x.dop.d0, x.dop.d1});
    const MultiMap dnat = add(postcompose(c1.inclusion(0), postcompose(x.dop.d0, a.m00)),
                              postcompose(c1.inclusion(1), x.dop.d2));
    return DiffAss2{tv, a.m00, bullet1, assoc, x.dop.d0, d1, dnat};
}

inline DiffAss2Morphism functor_T_mor(const TwoTermDiffAInf& src, const TwoTermDiffAInf& dst,
                                      const DiffAInf2Morphism& m) {
    const SumSpace cs = t_image_sum(src);
    const SumSpace cd = t_image_sum(dst);
    const Lin f1 = direct_sum(cs, cd, {m.base.phi0, m.base.phi1});
    const MultiMap f2 =
        add(postcompose(cd.inclusion(0),
                        precompose(precompose(dst.ainf.m00, 1, m.base.phi0), 2, m.base.phi0)),
            postcompose(cd.inclusion(1), m.base.phi2));
    const Lin f3 = add(compose_lin(cd.inclusion(0), compose_lin(dst.dop.d0, m.base.phi0)),
                       compose_lin(cd.inclusion(1), m.phi3));
    return DiffAss2Morphism{m.base.phi0, f1, f2, f3};
}

// The natural isomorphism alpha_C : T(S(C)) -> C of the round trip, together
// with its exact inverse. alpha_0 = id, alpha_1(x, h) = i_x + h, and alpha_2,
// alpha_3 are identity natural transformations.
inline DiffAss2Morphism alpha_iso(const DiffAss2& c) {
    const KernelData k = kernel_data(c.tv);
    const SumSpace c1p({c.tv.c0, k.space}, "C0+ker(s)");
    const Lin a1 = add(compose_lin(c.tv.i, c1p.projection(0)), compose_lin(k.incl, c1p.projection(1)));
    return DiffAss2Morphism{identity_lin(c.tv.c0), a1, postcompose(c.tv.i, c.bullet0),
                            compose_lin(c.tv.i, c.D0)};
}

inline DiffAss2Morphism alpha_iso_inverse(const DiffAss2& c) {
    const KernelData k = kernel_data(c.tv);
    const SumSpace c1p({c.tv.c0, k.space}, "C0+ker(s)");
    const Lin a1 = add(compose_lin(c1p.inclusion(0), c.tv.s),
                       compose_lin(c1p.inclusion(1), compose_lin(k.proj, arrow_map(c.tv))));
    return DiffAss2Morphism{identity_lin(c.tv.c0), a1,
                            postcompose(c1p.inclusion(0), c.bullet0),
                            compose_lin(c1p.inclusion(0), c.D0)};
}

} // namespace da2

#endif
