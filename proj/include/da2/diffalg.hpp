#ifndef DA2_DIFFALG_HPP
#define DA2_DIFFALG_HPP

#include <da2/report.hpp>

namespace da2 {

struct AssocAlgebra {
    Space space;
    MultiMap mult; // space x space -> space
};

struct DifferenceAlgebra {
    AssocAlgebra alg;
    Lin d; // endomorphism of alg.space
};

// Plain A-bimodule data; Delta-free.
struct Bimodule {
    Space m;
    MultiMap left;  // A x M -> M
    MultiMap right; // M x A -> M
};

struct DiffBimodule {
    Bimodule bim;
    Lin Delta; // M -> M
};

inline AssocAlgebra make_algebra(const Space& space, const MultiMap& mult) {
    if (mult.srcs != std::vector<Space>{space, space} || mult.dst != space)
        throw ShapeError("make_algebra: multiplication shape mismatch");
    return AssocAlgebra{space, mult};
}

inline CheckReport check_associative(const AssocAlgebra& a) {
    CheckReport rep;
    compare_maps(rep, "assoc", insert_compose(a.mult, 1, a.mult), insert_compose(a.mult, 2, a.mult));
    return rep;
}

// The defining identity of a difference operator:
//   d(ab) = d(a)b + a d(b) + d(a)d(b).
inline CheckReport check_difference(const AssocAlgebra& alg, const Lin& d) {
    if (d.src != alg.space || d.dst != alg.space)
        throw ShapeError("check_difference: d is not an endomorphism of the algebra");
    CheckReport rep;
    const MultiMap lhs = postcompose(d, alg.mult);
    const MultiMap rhs = add(add(precompose(alg.mult, 1, d), precompose(alg.mult, 2, d)),
                             precompose(precompose(alg.mult, 1, d), 2, d));
    compare_maps(rep, "difference", lhs, rhs);
    return rep;
}

inline CheckReport check_bimodule(const AssocAlgebra& a, const Bimodule& b) {
    if (b.left.srcs != std::vector<Space>{a.space, b.m} || b.left.dst != b.m)
        throw ShapeError("check_bimodule: left action shape mismatch");
    if (b.right.srcs != std::vector<Space>{b.m, a.space} || b.right.dst != b.m)
        throw ShapeError("check_bimodule: right action shape mismatch");
    CheckReport rep;
    compare_maps(rep, "bimodule:(ab)u=a(bu)", insert_compose(b.left, 1, a.mult), insert_compose(b.left, 2, b.left));
    compare_maps(rep, "bimodule:u(ab)=(ua)b", insert_compose(b.right, 2, a.mult), insert_compose(b.right, 1, b.right));
    compare_maps(rep, "bimodule:(au)b=a(ub)", insert_compose(b.right, 1, b.left), insert_compose(b.left, 2, b.right));
    return rep;
}

// Bimodule over a difference algebra: plain axioms plus the two Delta
// identities mirroring the difference identity.
inline CheckReport check_diff_bimodule(const DifferenceAlgebra& da, const DiffBimodule& bm) {
    CheckReport rep = check_bimodule(da.alg, bm.bim);
    if (bm.Delta.src != bm.bim.m || bm.Delta.dst != bm.bim.m)
        throw ShapeError("check_diff_bimodule: Delta is not an endomorphism of M");
    const MultiMap& left = bm.bim.left;
    const MultiMap& right = bm.bim.right;
    compare_maps(rep, "diff-bimodule:Delta(au)", postcompose(bm.Delta, left),
                 add(add(precompose(left, 1, da.d), precompose(left, 2, bm.Delta)),
                     precompose(precompose(left, 1, da.d), 2, bm.Delta)));
    compare_maps(rep, "diff-bimodule:Delta(ua)", postcompose(bm.Delta, right),
                 add(add(precompose(right, 1, bm.Delta), precompose(right, 2, da.d)),
                     precompose(precompose(right, 1, bm.Delta), 2, da.d)));
    return rep;
}

// The twisted bimodule M^d: actions shifted through a -> a + d(a).
inline Bimodule twist_bimodule(const DifferenceAlgebra& da, const Bimodule& b) {
    CheckReport pre = check_bimodule(da.alg, b);
    if (!pre.ok())
        throw ValidationError("twist_bimodule: input is not a bimodule:\n" + pre.describe());
    const Lin shift = add(identity_lin(da.alg.space), da.d);
    return Bimodule{b.m, precompose(b.left, 1, shift), precompose(b.right, 2, shift)};
}

inline bool is_endomorphism(const AssocAlgebra& alg, const Lin& phi) {
    if (phi.src != alg.space || phi.dst != alg.space)
        return false;
    return postcompose(phi, alg.mult) == precompose(precompose(alg.mult, 1, phi), 2, phi);
}

// d = phi - Id for an algebra endomorphism phi; always a difference operator.
inline Lin endo_to_diff(const AssocAlgebra& alg, const Lin& phi) {
    if (phi.src != alg.space || phi.dst != alg.space)
        throw ShapeError("endo_to_diff: phi is not an endomorphism of the algebra space");
    CheckReport rep;
    compare_maps(rep, "endomorphism", postcompose(phi, alg.mult),
                 precompose(precompose(alg.mult, 1, phi), 2, phi));
    if (!rep.ok())
        throw ValidationError("endo_to_diff: phi is not multiplicative:\n" + rep.describe());
    return sub(phi, identity_lin(alg.space));
}

// The regular bimodule of a difference algebra: M = A acting on itself with
// Delta = d.
inline DiffBimodule regular_diff_bimodule(const DifferenceAlgebra& da) {
    return DiffBimodule{Bimodule{da.alg.space, da.alg.mult, da.alg.mult}, da.d};
}

} // namespace da2

#endif
