#ifndef DA2_DIFFAINF2_HPP
#define DA2_DIFFAINF2_HPP

#include <da2/ainf2.hpp>

namespace da2 {

// Difference operator on a 2-term A-infinity algebra.
struct DiffOp2 {
    Lin d0;      // A0 -> A0
    Lin d1;      // A1 -> A1
    MultiMap d2; // A0 x A0 -> A1

    friend bool operator==(const DiffOp2& a, const DiffOp2& b) {
        return a.d0 == b.d0 && a.d1 == b.d1 && a.d2 == b.d2;
    }
};

struct TwoTermDiffAInf {
    AInf2 ainf;
    DiffOp2 dop;

    friend bool operator==(const TwoTermDiffAInf& x, const TwoTermDiffAInf& y) {
        return x.ainf == y.ainf && x.dop == y.dop;
    }
};

struct DiffAInf2Morphism {
    AInf2Morphism base;
    Lin phi3; // A0 -> A1'

    friend bool operator==(const DiffAInf2Morphism& f, const DiffAInf2Morphism& g) {
        return f.base == g.base && f.phi3 == g.phi3;
    }
};

inline void require_diffop2_shapes(const AInf2& a, const DiffOp2& d) {
    if (d.d0.src != a.a0() || d.d0.dst != a.a0())
        throw ShapeError("diffop2: d0 must be an endomorphism of A0");
    if (d.d1.src != a.a1() || d.d1.dst != a.a1())
        throw ShapeError("diffop2: d1 must be an endomorphism of A1");
    if (d.d2.srcs != std::vector<Space>{a.a0(), a.a0()} || d.d2.dst != a.a1())
        throw ShapeError("diffop2: d2 shape mismatch");
}

// Chain condition and identities (D1)-(D4). The mixed (D4) terms
// (x + d0(x)) . d2(y,z) and d2(x,y) . (z + d0(z)) run through m01 / m10
// extended linearly in the A0 slot.
inline CheckReport check_diffop2(const AInf2& a, const DiffOp2& d) {
    require_diffop2_shapes(a, d);
    CheckReport rep;
    const Lin& delta = a.cx.delta;
    compare_maps(rep, "chain", compose_lin(d.d0, delta), compose_lin(delta, d.d1));

    auto three_insertions = [](const MultiMap& m, const Lin& f, const Lin& g) {
        return add(add(precompose(m, 1, f), precompose(m, 2, g)),
                   precompose(precompose(m, 1, f), 2, g));
    };
    compare_maps(rep, "(D1)", sub(three_insertions(a.m00, d.d0, d.d0), postcompose(d.d0, a.m00)),
                 postcompose(delta, d.d2));
    compare_maps(rep, "(D2)", sub(three_insertions(a.m01, d.d0, d.d1), postcompose(d.d1, a.m01)),
                 precompose(d.d2, 2, delta));
    compare_maps(rep, "(D3)", sub(three_insertions(a.m10, d.d1, d.d0), postcompose(d.d1, a.m10)),
                 precompose(d.d2, 1, delta));

    const Lin shift0 = add(identity_lin(a.a0()), d.d0);
    MultiMap lhs = precompose(insert_compose(a.m01, 2, d.d2), 1, shift0);
    lhs = sub(lhs, insert_compose(d.d2, 1, a.m00));
    lhs = add(lhs, insert_compose(d.d2, 2, a.m00));
    lhs = sub(lhs, precompose(insert_compose(a.m10, 1, d.d2), 3, shift0));
    MultiMap rhs = zero_multimap({a.a0(), a.a0(), a.a0()}, a.a1());
    for (int mask = 1; mask < 8; ++mask) {
        MultiMap term = a.mu;
        for (int i = 0; i < 3; ++i)
            if (mask & (1 << i))
                term = precompose(term, i + 1, d.d0);
        rhs = add(rhs, term);
    }
    rhs = sub(rhs, postcompose(d.d1, a.mu));
    compare_maps(rep, "(D4)", lhs, rhs);
    return rep;
}

inline CheckReport check_2term_diff_ainf(const TwoTermDiffAInf& x) {
    CheckReport rep = check_ainf2(x.ainf);
    rep.merge(check_diffop2(x.ainf, x.dop));
    return rep;
}

// Identities (hd-eq1)-(hd-eq3); base morphism violations are reported too.
inline CheckReport check_diff_morphism(const TwoTermDiffAInf& src, const TwoTermDiffAInf& dst,
                                       const DiffAInf2Morphism& m) {
    CheckReport rep = check_ainf2_morphism(src.ainf, dst.ainf, m.base);
    if (m.phi3.src != src.ainf.a0() || m.phi3.dst != dst.ainf.a1())
        throw ShapeError("diff morphism: phi3 shape mismatch");
    const Lin& phi0 = m.base.phi0;
    const Lin& phi1 = m.base.phi1;
    const MultiMap& phi2 = m.base.phi2;
    compare_maps(rep, "(hd-eq1)",
                 sub(compose_lin(phi0, src.dop.d0), compose_lin(dst.dop.d0, phi0)),
                 compose_lin(dst.ainf.cx.delta, m.phi3));
    compare_maps(rep, "(hd-eq2)",
                 sub(compose_lin(phi1, src.dop.d1), compose_lin(dst.dop.d1, phi1)),
                 compose_lin(m.phi3, src.ainf.cx.delta));
    const MultiMap lhs = sub(postcompose(phi1, src.dop.d2),
                             precompose(precompose(dst.dop.d2, 1, phi0), 2, phi0));
    MultiMap rhs = add(add(precompose(phi2, 1, src.dop.d0), precompose(phi2, 2, src.dop.d0)),
                       precompose(precompose(phi2, 1, src.dop.d0), 2, src.dop.d0));
    rhs = sub(rhs, postcompose(m.phi3, src.ainf.m00));
    rhs = add(rhs, precompose(precompose(dst.ainf.m10, 1, m.phi3), 2, phi0));
    rhs = add(rhs, precompose(precompose(dst.ainf.m01, 1, phi0), 2, m.phi3));
    rhs = sub(rhs, postcompose(dst.dop.d1, phi2));
    compare_maps(rep, "(hd-eq3)", lhs, rhs);
    return rep;
}

inline DiffAInf2Morphism identity_diff_morphism(const TwoTermDiffAInf& x) {
    return DiffAInf2Morphism{identity_ainf2_morphism(x.ainf),
                             zero_lin(x.ainf.a0(), x.ainf.a1())};
}

// (g o f)_3(x) = g_3(f_0 x) + g_1(f_3 x).
inline DiffAInf2Morphism compose_diff_morphism(const DiffAInf2Morphism& g, const DiffAInf2Morphism& f) {
    return DiffAInf2Morphism{compose_ainf2_morphism(g.base, f.base),
                             add(compose_lin(g.phi3, f.base.phi0), compose_lin(g.base.phi1, f.phi3))};
}

inline bool is_skeletal(const TwoTermDiffAInf& x) { return is_zero(x.ainf.cx.delta); }

inline bool is_strict(const TwoTermDiffAInf& x) { return is_zero(x.ainf.mu) && is_zero(x.dop.d2); }

} // namespace da2

#endif
