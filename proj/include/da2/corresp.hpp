#ifndef DA2_CORRESP_HPP
#define DA2_CORRESP_HPP

#include <da2/cohom.hpp>
#include <da2/diffainf2.hpp>

namespace da2 {

// Crossed module of difference algebras: partial : (top, d') -> (base, d)
// with the Peiffer-type identities (crm1)-(crm2). Actions and multiplications
// are stored separately even when the spaces coincide.
struct CrossedModule {
    DifferenceAlgebra base;
    DifferenceAlgebra top;
    MultiMap left;  // A x A' -> A'
    MultiMap right; // A' x A -> A'
    Lin partial;    // A' -> A

    friend bool operator==(const CrossedModule& x, const CrossedModule& y) {
        return x.base.alg.mult == y.base.alg.mult && x.base.d == y.base.d &&
               x.top.alg.mult == y.top.alg.mult && x.top.d == y.top.d && x.left == y.left &&
               x.right == y.right && x.partial == y.partial;
    }
};

inline CheckReport check_crossed_module(const CrossedModule& cm) {
    const Space& a = cm.base.alg.space;
    const Space& ap = cm.top.alg.space;
    if (cm.left.srcs != std::vector<Space>{a, ap} || cm.left.dst != ap)
        throw ShapeError("crossed module: left action shape mismatch");
    if (cm.right.srcs != std::vector<Space>{ap, a} || cm.right.dst != ap)
        throw ShapeError("crossed module: right action shape mismatch");
    if (cm.partial.src != ap || cm.partial.dst != a)
        throw ShapeError("crossed module: partial shape mismatch");

    CheckReport rep = check_associative(cm.base.alg);
    rep.merge(check_associative(cm.top.alg));
    rep.merge(check_difference(cm.base.alg, cm.base.d));
    rep.merge(check_difference(cm.top.alg, cm.top.d));
    rep.merge(check_diff_bimodule(cm.base, DiffBimodule{Bimodule{ap, cm.left, cm.right}, cm.top.d}));

    const MultiMap& tm = cm.top.alg.mult;
    compare_maps(rep, "partial-mult", postcompose(cm.partial, tm),
                 precompose(precompose(cm.base.alg.mult, 1, cm.partial), 2, cm.partial));
    compare_maps(rep, "partial-chain", compose_lin(cm.base.d, cm.partial),
                 compose_lin(cm.partial, cm.top.d));
    compare_maps(rep, "(crm1)", insert_compose(cm.left, 2, tm), insert_compose(tm, 1, cm.left));
    compare_maps(rep, "(crm1)", insert_compose(tm, 2, cm.left), insert_compose(tm, 1, cm.right));
    compare_maps(rep, "(crm1)", insert_compose(tm, 2, cm.right), insert_compose(cm.right, 1, tm));
    compare_maps(rep, "(crm2)", postcompose(cm.partial, cm.left),
                 precompose(cm.base.alg.mult, 2, cm.partial));
    compare_maps(rep, "(crm2)", postcompose(cm.partial, cm.right),
                 precompose(cm.base.alg.mult, 1, cm.partial));
    compare_maps(rep, "(crm2)", precompose(cm.left, 1, cm.partial), tm);
    compare_maps(rep, "(crm2)", precompose(cm.right, 2, cm.partial), tm);
    return rep;
}

// ---- skeletal <-> 3-cocycle (difference algebra, bimodule, (mu, chi)) -----

struct SkeletalData {
    DifferenceAlgebra da;
    DiffBimodule bm;
    MultiMap mu;  // A^3 -> M
    MultiMap chi; // A^2 -> M
};

inline SkeletalData skeletal_to_cocycle(const TwoTermDiffAInf& x) {
    if (!is_skeletal(x))
        throw ValidationError("skeletal_to_cocycle: input is not skeletal");
    SkeletalData out{DifferenceAlgebra{AssocAlgebra{x.ainf.a0(), x.ainf.m00}, x.dop.d0},
                     DiffBimodule{Bimodule{x.ainf.a1(), x.ainf.m01, x.ainf.m10}, x.dop.d1},
                     x.ainf.mu, x.dop.d2};
    CheckReport rep = check_difference(out.da.alg, out.da.d);
    rep.merge(check_diff_bimodule(out.da, out.bm));
    if (!rep.ok())
        throw ValidationError("skeletal_to_cocycle: extracted data fails its checks:\n" + rep.describe());
    if (!is_3_cocycle(out.da, out.bm, out.mu, out.chi))
        throw ValidationError("skeletal_to_cocycle: (mu, d2) is not a 3-cocycle");
    return out;
}

inline TwoTermDiffAInf cocycle_to_skeletal(const DifferenceAlgebra& da, const DiffBimodule& bm,
                                           const MultiMap& mu, const MultiMap& chi) {
    CheckReport pre = check_associative(da.alg);
    pre.merge(check_difference(da.alg, da.d));
    pre.merge(check_diff_bimodule(da, bm));
    if (!pre.ok())
        throw ValidationError("cocycle_to_skeletal: invalid input data:\n" + pre.describe());
    if (!is_3_cocycle(da, bm, mu, chi))
        throw ValidationError("cocycle_to_skeletal: (mu, chi) is not a 3-cocycle");
    TwoTermDiffAInf x{AInf2{TwoTermComplex{da.alg.space, bm.bim.m, zero_lin(bm.bim.m, da.alg.space)},
                            da.alg.mult, bm.bim.left, bm.bim.right, mu},
                      DiffOp2{da.d, bm.Delta, chi}};
    CheckReport post = check_2term_diff_ainf(x);
    if (!post.ok())
        throw ValidationError("cocycle_to_skeletal: output fails its checks:\n" + post.describe());
    return x;
}

// ---- strict <-> crossed module --------------------------------------------

inline CrossedModule strict_to_crossed(const TwoTermDiffAInf& x) {
    if (!is_strict(x))
        throw ValidationError("strict_to_crossed: input is not strict");
    const Lin& delta = x.ainf.cx.delta;
    // h o1 k := delta(h) . k; (A3) makes this equal h . delta(k), which we
    // assert rather than assume.
    const MultiMap top_mult = precompose(x.ainf.m01, 1, delta);
    if (top_mult != precompose(x.ainf.m10, 2, delta))
        throw ValidationError("strict_to_crossed: (A3) symmetry of the induced product fails");
    CrossedModule cm{DifferenceAlgebra{AssocAlgebra{x.ainf.a0(), x.ainf.m00}, x.dop.d0},
                     DifferenceAlgebra{AssocAlgebra{x.ainf.a1(), top_mult}, x.dop.d1},
                     x.ainf.m01, x.ainf.m10, delta};
    CheckReport rep = check_crossed_module(cm);
    if (!rep.ok())
        throw ValidationError("strict_to_crossed: output fails crossed-module checks:\n" + rep.describe());
    return cm;
}

inline TwoTermDiffAInf crossed_to_strict(const CrossedModule& cm) {
    CheckReport pre = check_crossed_module(cm);
    if (!pre.ok())
        throw ValidationError("crossed_to_strict: invalid crossed module:\n" + pre.describe());
    const Space& a = cm.base.alg.space;
    const Space& ap = cm.top.alg.space;
    TwoTermDiffAInf x{AInf2{TwoTermComplex{a, ap, cm.partial}, cm.base.alg.mult, cm.left, cm.right,
                            zero_multimap({a, a, a}, ap)},
                      DiffOp2{cm.base.d, cm.top.d, zero_multimap({a, a}, ap)}};
    CheckReport post = check_2term_diff_ainf(x);
    if (!post.ok())
        throw ValidationError("crossed_to_strict: output fails its checks:\n" + post.describe());
    return x;
}

} // namespace da2

#endif
