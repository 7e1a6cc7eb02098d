#ifndef DA2_HBIMOD_HPP
#define DA2_HBIMOD_HPP

#include <da2/twoalg.hpp>

namespace da2 {

// 2-term bimodule up to homotopy over an associative algebra. The three
// associativity homotopies share one name in the usual notation; the slot
// signature is what distinguishes them, so they are stored as typed fields.
struct HBimod2 {
    Space m0;
    Space m1;
    Lin delta;       // M1 -> M0
    MultiMap act_am0; // A x M0 -> M0
    MultiMap act_m0a; // M0 x A -> M0
    MultiMap act_am1; // A x M1 -> M1
    MultiMap act_m1a; // M1 x A -> M1
    MultiMap nu_aav;  // A x A x M0 -> M1
    MultiMap nu_ava;  // A x M0 x A -> M1
    MultiMap nu_vaa;  // M0 x A x A -> M1
};

struct DiffHBimod2 {
    HBimod2 base;
    Lin Delta0;        // M0 -> M0
    Lin Delta1;        // M1 -> M1
    MultiMap theta_am; // A x M0 -> M1
    MultiMap theta_ma; // M0 x A -> M1
};

inline void require_hbimod_shapes(const AssocAlgebra& alg, const HBimod2& h) {
    const Space& a = alg.space;
    if (h.delta.src != h.m1 || h.delta.dst != h.m0)
        throw ShapeError("hbimod: delta must map M1 -> M0");
    if (h.act_am0.srcs != std::vector<Space>{a, h.m0} || h.act_am0.dst != h.m0 ||
        h.act_m0a.srcs != std::vector<Space>{h.m0, a} || h.act_m0a.dst != h.m0 ||
        h.act_am1.srcs != std::vector<Space>{a, h.m1} || h.act_am1.dst != h.m1 ||
        h.act_m1a.srcs != std::vector<Space>{h.m1, a} || h.act_m1a.dst != h.m1)
        throw ShapeError("hbimod: action shape mismatch");
    if (h.nu_aav.srcs != std::vector<Space>{a, a, h.m0} || h.nu_aav.dst != h.m1 ||
        h.nu_ava.srcs != std::vector<Space>{a, h.m0, a} || h.nu_ava.dst != h.m1 ||
        h.nu_vaa.srcs != std::vector<Space>{h.m0, a, a} || h.nu_vaa.dst != h.m1)
        throw ShapeError("hbimod: nu shape mismatch");
}

inline CheckReport check_hbimod(const AssocAlgebra& alg, const HBimod2& h) {
    require_hbimod_shapes(alg, h);
    CheckReport rep;
    const MultiMap& mult = alg.mult;
    compare_maps(rep, "delta-left", postcompose(h.delta, h.act_am1), precompose(h.act_am0, 2, h.delta));
    compare_maps(rep, "delta-right", postcompose(h.delta, h.act_m1a), precompose(h.act_m0a, 1, h.delta));

    compare_maps(rep, "hb:a(bv)-(ab)v",
                 sub(insert_compose(h.act_am0, 2, h.act_am0), insert_compose(h.act_am0, 1, mult)),
                 postcompose(h.delta, h.nu_aav));
    compare_maps(rep, "hb:a(vb)-(av)b",
                 sub(insert_compose(h.act_am0, 2, h.act_m0a), insert_compose(h.act_m0a, 1, h.act_am0)),
                 postcompose(h.delta, h.nu_ava));
    compare_maps(rep, "hb:v(ab)-(va)b",
                 sub(insert_compose(h.act_m0a, 2, mult), insert_compose(h.act_m0a, 1, h.act_m0a)),
                 postcompose(h.delta, h.nu_vaa));

    compare_maps(rep, "hb:a(bxi)-(ab)xi",
                 sub(insert_compose(h.act_am1, 2, h.act_am1), insert_compose(h.act_am1, 1, mult)),
                 precompose(h.nu_aav, 3, h.delta));
    compare_maps(rep, "hb:a(xib)-(axi)b",
                 sub(insert_compose(h.act_am1, 2, h.act_m1a), insert_compose(h.act_m1a, 1, h.act_am1)),
                 precompose(h.nu_ava, 2, h.delta));
    compare_maps(rep, "hb:xi(ab)-(xia)b",
                 sub(insert_compose(h.act_m1a, 2, mult), insert_compose(h.act_m1a, 1, h.act_m1a)),
                 precompose(h.nu_vaa, 1, h.delta));

    // (id-nu1): a nu(b,c,v) - nu(ab,c,v) + nu(a,bc,v) - nu(a,b,cv) = 0
    {
        MultiMap e = insert_compose(h.act_am1, 2, h.nu_aav);
        e = sub(e, insert_compose(h.nu_aav, 1, mult));
        e = add(e, insert_compose(h.nu_aav, 2, mult));
        e = sub(e, insert_compose(h.nu_aav, 3, h.act_am0));
        require_zero(rep, "(id-nu1)", e);
    }
    // (id-nu2): a nu(b,v,c) - nu(ab,v,c) + nu(a,bv,c) - nu(a,b,vc) + nu(a,b,v)c = 0
    {
        MultiMap e = insert_compose(h.act_am1, 2, h.nu_ava);
        e = sub(e, insert_compose(h.nu_ava, 1, mult));
        e = add(e, insert_compose(h.nu_ava, 2, h.act_am0));
        e = sub(e, insert_compose(h.nu_aav, 3, h.act_m0a));
        e = add(e, insert_compose(h.act_m1a, 1, h.nu_aav));
        require_zero(rep, "(id-nu2)", e);
    }
    // (id-nu3): a nu(v,b,c) - nu(av,b,c) + nu(a,vb,c) - nu(a,v,bc) + nu(a,v,b)c = 0
    {
        MultiMap e = insert_compose(h.act_am1, 2, h.nu_vaa);
        e = sub(e, insert_compose(h.nu_vaa, 1, h.act_am0));
        e = add(e, insert_compose(h.nu_ava, 2, h.act_m0a));
        e = sub(e, insert_compose(h.nu_ava, 3, mult));
        e = add(e, insert_compose(h.act_m1a, 1, h.nu_ava));
        require_zero(rep, "(id-nu3)", e);
    }
    // (id-nu4): nu(va,b,c) - nu(v,ab,c) + nu(v,a,bc) - nu(v,a,b)c = 0
    {
        MultiMap e = insert_compose(h.nu_vaa, 1, h.act_m0a);
        e = sub(e, insert_compose(h.nu_vaa, 2, mult));
        e = add(e, insert_compose(h.nu_vaa, 3, mult));
        e = sub(e, insert_compose(h.act_m1a, 1, h.nu_vaa));
        require_zero(rep, "(id-nu4)", e);
    }
    return rep;
}

inline CheckReport check_diff_hbimod(const DifferenceAlgebra& da, const DiffHBimod2& dh) {
    CheckReport rep = check_hbimod(da.alg, dh.base);
    const HBimod2& h = dh.base;
    const Space& a = da.alg.space;
    if (dh.Delta0.src != h.m0 || dh.Delta0.dst != h.m0 || dh.Delta1.src != h.m1 || dh.Delta1.dst != h.m1)
        throw ShapeError("diff hbimod: Delta shape mismatch");
    if (dh.theta_am.srcs != std::vector<Space>{a, h.m0} || dh.theta_am.dst != h.m1 ||
        dh.theta_ma.srcs != std::vector<Space>{h.m0, a} || dh.theta_ma.dst != h.m1)
        throw ShapeError("diff hbimod: theta shape mismatch");

    compare_maps(rep, "Delta-chain", compose_lin(dh.Delta0, h.delta), compose_lin(h.delta, dh.Delta1));

    auto three = [](const MultiMap& m, const Lin& f, const Lin& g) {
        return add(add(precompose(m, 1, f), precompose(m, 2, g)), precompose(precompose(m, 1, f), 2, g));
    };
    compare_maps(rep, "(condi1)", sub(three(h.act_am0, da.d, dh.Delta0), postcompose(dh.Delta0, h.act_am0)),
                 postcompose(h.delta, dh.theta_am));
    compare_maps(rep, "(condi2)", sub(three(h.act_m0a, dh.Delta0, da.d), postcompose(dh.Delta0, h.act_m0a)),
                 postcompose(h.delta, dh.theta_ma));
    compare_maps(rep, "(condi3)", sub(three(h.act_am1, da.d, dh.Delta1), postcompose(dh.Delta1, h.act_am1)),
                 precompose(dh.theta_am, 2, h.delta));
    compare_maps(rep, "(condi4)", sub(three(h.act_m1a, dh.Delta1, da.d), postcompose(dh.Delta1, h.act_m1a)),
                 precompose(dh.theta_ma, 1, h.delta));

    // Sum of nu over all nonzero insertion patterns of (f, g, k) into the
    // three slots, minus Delta1 of nu.
    auto nu_side = [&](const MultiMap& nu, const Lin& f1, const Lin& f2, const Lin& f3) {
        MultiMap out = neg(postcompose(dh.Delta1, nu));
        const Lin* ins[3] = {&f1, &f2, &f3};
        for (int mask = 1; mask < 8; ++mask) {
            MultiMap term = nu;
            for (int k = 0; k < 3; ++k)
                if (mask & (1 << k))
                    term = precompose(term, k + 1, *ins[k]);
            out = add(out, term);
        }
        return out;
    };
    const Lin shift = add(identity_lin(a), da.d);

    // (condi5): (a+da) th(b,v) - th(ab,v) + th(a,bv) = [nu terms].
    {
        MultiMap lhs = precompose(insert_compose(h.act_am1, 2, dh.theta_am), 1, shift);
        lhs = sub(lhs, insert_compose(dh.theta_am, 1, da.alg.mult));
        lhs = add(lhs, insert_compose(dh.theta_am, 2, h.act_am0));
        compare_maps(rep, "(condi5)", lhs, nu_side(h.nu_aav, da.d, da.d, dh.Delta0));
    }
    // (condi6): (a+da) th(v,b) - th(av,b) + th(a,vb) - th(a,v)(b+db) = [nu terms].
    {
        MultiMap lhs = precompose(insert_compose(h.act_am1, 2, dh.theta_ma), 1, shift);
        lhs = sub(lhs, insert_compose(dh.theta_ma, 1, h.act_am0));
        lhs = add(lhs, insert_compose(dh.theta_am, 2, h.act_m0a));
        lhs = sub(lhs, precompose(insert_compose(h.act_m1a, 1, dh.theta_am), 3, shift));
        compare_maps(rep, "(condi6)", lhs, nu_side(h.nu_ava, da.d, dh.Delta0, da.d));
    }
    // (condi7): -th(va,b) + th(v,ab) - th(v,a)(b+db) = [nu terms].
    {
        MultiMap lhs = neg(insert_compose(dh.theta_ma, 1, h.act_m0a));
        lhs = add(lhs, insert_compose(dh.theta_ma, 2, da.alg.mult));
        lhs = sub(lhs, precompose(insert_compose(h.act_m1a, 1, dh.theta_ma), 3, shift));
        compare_maps(rep, "(condi7)", lhs, nu_side(h.nu_vaa, dh.Delta0, da.d, da.d));
    }
    return rep;
}

inline bool is_skeletal(const DiffHBimod2& dh) { return is_zero(dh.base.delta); }

inline bool is_strict(const DiffHBimod2& dh) {
    return is_zero(dh.base.nu_aav) && is_zero(dh.base.nu_ava) && is_zero(dh.base.nu_vaa) &&
           is_zero(dh.theta_am) && is_zero(dh.theta_ma);
}

// ---- semidirect products ---------------------------------------------------

// Carrier bookkeeping for A + M0.
inline SumSpace semidirect_sum(const AssocAlgebra& alg, const HBimod2& h) {
    return SumSpace({alg.space, h.m0}, "A+M0");
}

// Semidirect product: (a,u) . (b,v) = (ab, av + ub), with mu assembled from
// the three nu components.
inline AInf2 semidirect_ainf2(const AssocAlgebra& alg, const HBimod2& h, bool validate = true) {
    if (validate) {
        CheckReport pre = check_associative(alg);
        pre.merge(check_hbimod(alg, h));
        if (!pre.ok())
            throw ValidationError("semidirect_ainf2: invalid input:\n" + pre.describe());
    }
    const SumSpace a0 = semidirect_sum(alg, h);
    const std::vector<SumSpace> slots2{a0, a0};
    MultiMap m00({a0.whole, a0.whole}, a0.whole);
    add_block(m00, slots2, a0, alg.mult, {0, 0}, 0);
    add_block(m00, slots2, a0, h.act_am0, {0, 1}, 1);
    add_block(m00, slots2, a0, h.act_m0a, {1, 0}, 1);

    const SumSpace m1s({h.m1});
    MultiMap m01({a0.whole, h.m1}, h.m1);
    add_block(m01, {a0, m1s}, m1s, h.act_am1, {0, 0}, 0);
    MultiMap m10({h.m1, a0.whole}, h.m1);
    add_block(m10, {m1s, a0}, m1s, h.act_m1a, {0, 0}, 0);

    // mu((a,u),(b,v),(c,w)) = nu(a,b,w) + nu(a,v,c) + nu(u,b,c)
    MultiMap mu({a0.whole, a0.whole, a0.whole}, h.m1);
    add_block(mu, {a0, a0, a0}, m1s, h.nu_aav, {0, 0, 1}, 0);
    add_block(mu, {a0, a0, a0}, m1s, h.nu_ava, {0, 1, 0}, 0);
    add_block(mu, {a0, a0, a0}, m1s, h.nu_vaa, {1, 0, 0}, 0);

    const Lin delta = compose_lin(a0.inclusion(1), h.delta);

    AInf2 out{TwoTermComplex{a0.whole, h.m1, delta}, m00, m01, m10, mu};
    if (validate) {
        CheckReport post = check_ainf2(out);
        if (!post.ok())
            throw ValidationError("semidirect_ainf2: output fails (A1)-(A8):\n" + post.describe());
    }
    return out;
}

// Difference semidirect product: d0 = d + Delta0, d1 = Delta1,
// d2((a,u),(b,v)) = theta(a,v) + theta(u,b).
inline TwoTermDiffAInf semidirect_diff(const DifferenceAlgebra& da, const DiffHBimod2& dh,
                                       bool validate = true) {
    if (validate) {
        CheckReport pre = check_associative(da.alg);
        pre.merge(check_difference(da.alg, da.d));
        pre.merge(check_diff_hbimod(da, dh));
        if (!pre.ok())
            throw ValidationError("semidirect_diff: invalid input:\n" + pre.describe());
    }
    const HBimod2& h = dh.base;
    AInf2 a = semidirect_ainf2(da.alg, h, false);
    const SumSpace a0 = semidirect_sum(da.alg, h);
    const Lin d0 = direct_sum(a0, a0, {da.d, dh.Delta0});
    MultiMap d2({a0.whole, a0.whole}, h.m1);
    add_block(d2, {a0, a0}, SumSpace({h.m1}), dh.theta_am, {0, 1}, 0);
    add_block(d2, {a0, a0}, SumSpace({h.m1}), dh.theta_ma, {1, 0}, 0);
    TwoTermDiffAInf out{std::move(a), DiffOp2{d0, dh.Delta1, d2}};
    if (validate) {
        CheckReport post = check_diffop2(out.ainf, out.dop);
        if (!post.ok())
            throw ValidationError("semidirect_diff: output fails (D1)-(D4):\n" + post.describe());
    }
    return out;
}

// The difference associative 2-algebra on (A + M0 + M1 => A + M0); equals
// functor T applied to the difference semidirect product.
inline DiffAss2 semidirect_2alg(const DifferenceAlgebra& da, const DiffHBimod2& dh,
                                bool validate = true) {
    return functor_T(semidirect_diff(da, dh, validate));
}

} // namespace da2

#endif
