#ifndef DA2_AINF2_HPP
#define DA2_AINF2_HPP

#include <da2/diffalg.hpp>

namespace da2 {

struct TwoTermComplex {
    Space a0;
    Space a1;
    Lin delta; // A1 -> A0
};

// 2-term A-infinity algebra: complex A1 -> A0 with the three graded
// components of the product and the associativity homotopy mu.
struct AInf2 {
    TwoTermComplex cx;
    MultiMap m00; // A0 x A0 -> A0
    MultiMap m01; // A0 x A1 -> A1
    MultiMap m10; // A1 x A0 -> A1
    MultiMap mu;  // A0 x A0 x A0 -> A1

    const Space& a0() const { return cx.a0; }
    const Space& a1() const { return cx.a1; }

    friend bool operator==(const AInf2& x, const AInf2& y) {
        return x.cx.delta == y.cx.delta && x.m00 == y.m00 && x.m01 == y.m01 && x.m10 == y.m10 &&
               x.mu == y.mu;
    }
};

struct AInf2Morphism {
    Lin phi0;      // A0 -> A0'
    Lin phi1;      // A1 -> A1'
    MultiMap phi2; // A0 x A0 -> A1'

    friend bool operator==(const AInf2Morphism& f, const AInf2Morphism& g) {
        return f.phi0 == g.phi0 && f.phi1 == g.phi1 && f.phi2 == g.phi2;
    }
};

inline void require_ainf2_shapes(const AInf2& x) {
    const Space& a0 = x.a0();
    const Space& a1 = x.a1();
    if (x.cx.delta.src != a1 || x.cx.delta.dst != a0)
        throw ShapeError("ainf2: delta must map A1 -> A0");
    if (x.m00.srcs != std::vector<Space>{a0, a0} || x.m00.dst != a0)
        throw ShapeError("ainf2: m00 shape mismatch");
    if (x.m01.srcs != std::vector<Space>{a0, a1} || x.m01.dst != a1)
        throw ShapeError("ainf2: m01 shape mismatch");
    if (x.m10.srcs != std::vector<Space>{a1, a0} || x.m10.dst != a1)
        throw ShapeError("ainf2: m10 shape mismatch");
    if (x.mu.srcs != std::vector<Space>{a0, a0, a0} || x.mu.dst != a1)
        throw ShapeError("ainf2: mu shape mismatch");
}

// Identities (A1)-(A8), evaluated exhaustively on basis tuples.
inline CheckReport check_ainf2(const AInf2& x) {
    require_ainf2_shapes(x);
    CheckReport rep;
    const Lin& delta = x.cx.delta;
    compare_maps(rep, "(A1)", postcompose(delta, x.m01), precompose(x.m00, 2, delta));
    compare_maps(rep, "(A2)", postcompose(delta, x.m10), precompose(x.m00, 1, delta));
    compare_maps(rep, "(A3)", precompose(x.m01, 1, delta), precompose(x.m10, 2, delta));
    compare_maps(rep, "(A4)",
                 sub(insert_compose(x.m00, 2, x.m00), insert_compose(x.m00, 1, x.m00)),
                 postcompose(delta, x.mu));
    compare_maps(rep, "(A5)",
                 sub(insert_compose(x.m01, 2, x.m01), insert_compose(x.m01, 1, x.m00)),
                 precompose(x.mu, 3, delta));
    compare_maps(rep, "(A6)",
                 sub(insert_compose(x.m01, 2, x.m10), insert_compose(x.m10, 1, x.m01)),
                 precompose(x.mu, 2, delta));
    compare_maps(rep, "(A7)",
                 sub(insert_compose(x.m10, 2, x.m00), insert_compose(x.m10, 1, x.m10)),
                 precompose(x.mu, 1, delta));
    MultiMap a8 = insert_compose(x.m01, 2, x.mu);
    a8 = sub(a8, insert_compose(x.mu, 1, x.m00));
    a8 = add(a8, insert_compose(x.mu, 2, x.m00));
    a8 = sub(a8, insert_compose(x.mu, 3, x.m00));
    a8 = add(a8, insert_compose(x.m10, 1, x.mu));
    require_zero(rep, "(A8)", a8);
    return rep;
}

inline void require_morphism_shapes(const AInf2& src, const AInf2& dst, const AInf2Morphism& m) {
    if (m.phi0.src != src.a0() || m.phi0.dst != dst.a0())
        throw ShapeError("ainf2 morphism: phi0 shape mismatch");
    if (m.phi1.src != src.a1() || m.phi1.dst != dst.a1())
        throw ShapeError("ainf2 morphism: phi1 shape mismatch");
    if (m.phi2.srcs != std::vector<Space>{src.a0(), src.a0()} || m.phi2.dst != dst.a1())
        throw ShapeError("ainf2 morphism: phi2 shape mismatch");
}

inline CheckReport check_ainf2_morphism(const AInf2& src, const AInf2& dst, const AInf2Morphism& m) {
    require_morphism_shapes(src, dst, m);
    CheckReport rep;
    compare_maps(rep, "chain", compose_lin(m.phi0, src.cx.delta), compose_lin(dst.cx.delta, m.phi1));
    compare_maps(rep, "(H1)",
                 sub(postcompose(m.phi0, src.m00),
                     precompose(precompose(dst.m00, 1, m.phi0), 2, m.phi0)),
                 postcompose(dst.cx.delta, m.phi2));
    compare_maps(rep, "(H2)",
                 sub(postcompose(m.phi1, src.m01),
                     precompose(precompose(dst.m01, 1, m.phi0), 2, m.phi1)),
                 precompose(m.phi2, 2, src.cx.delta));
    compare_maps(rep, "(H3)",
                 sub(postcompose(m.phi1, src.m10),
                     precompose(precompose(dst.m10, 1, m.phi1), 2, m.phi0)),
                 precompose(m.phi2, 1, src.cx.delta));
    const MultiMap lhs4 = sub(postcompose(m.phi1, src.mu),
                              precompose(precompose(precompose(dst.mu, 1, m.phi0), 2, m.phi0), 3, m.phi0));
    MultiMap rhs4 = insert_compose(m.phi2, 2, src.m00);
    rhs4 = sub(rhs4, insert_compose(m.phi2, 1, src.m00));
    rhs4 = add(rhs4, precompose(insert_compose(dst.m01, 2, m.phi2), 1, m.phi0));
    rhs4 = sub(rhs4, precompose(insert_compose(dst.m10, 1, m.phi2), 3, m.phi0));
    compare_maps(rep, "(H4)", lhs4, rhs4);
    return rep;
}

inline AInf2Morphism identity_ainf2_morphism(const AInf2& x) {
    return AInf2Morphism{identity_lin(x.a0()), identity_lin(x.a1()),
                         zero_multimap({x.a0(), x.a0()}, x.a1())};
}

// (g o f)_2(x, y) = g_2(f_0 x, f_0 y) + g_1(f_2(x, y)).
inline AInf2Morphism compose_ainf2_morphism(const AInf2Morphism& g, const AInf2Morphism& f) {
    if (f.phi0.dst != g.phi0.src || f.phi1.dst != g.phi1.src)
        throw ShapeError("compose_ainf2_morphism: endpoints do not match");
    return AInf2Morphism{compose_lin(g.phi0, f.phi0), compose_lin(g.phi1, f.phi1),
                         add(precompose(precompose(g.phi2, 1, f.phi0), 2, f.phi0),
                             postcompose(g.phi1, f.phi2))};
}

} // namespace da2

#endif
