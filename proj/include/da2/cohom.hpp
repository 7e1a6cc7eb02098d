#ifndef DA2_COHOM_HPP
#define DA2_COHOM_HPP

#include <da2/diffalg.hpp>

#include <optional>

namespace da2 {

// Cochain of the difference complex of (A, d) with coefficients in (M, Delta).
// Degree 0 is a bare element of M (stored as an arity-0 map). In positive
// degree a cochain carries a pair (f : A^n -> M, chi : A^{n-1} -> M); chi in
// degree 1 is again an element of M. Keeping the degree-1 chi slot is what
// makes the coboundary square to zero from degree 0 on.
struct DiffCochain {
    int degree = 0;
    MultiMap f;                  // arity = degree
    std::optional<MultiMap> chi; // arity = degree - 1; present iff degree >= 1

    friend bool operator==(const DiffCochain& a, const DiffCochain& b) {
        return a.degree == b.degree && a.f == b.f && a.chi == b.chi;
    }
};

inline MultiMap constant_map(const Space& m, const Vec& u) {
    MultiMap c({}, m);
    c.a = u;
    return c;
}

inline DiffCochain make_cochain0(const Space& m, const Vec& u) {
    return DiffCochain{0, constant_map(m, u), std::nullopt};
}

inline DiffCochain make_cochain(int degree, MultiMap f, MultiMap chi) {
    if (degree < 1 || f.arity() != degree || chi.arity() != degree - 1)
        throw ShapeError("make_cochain: component arities do not match the degree");
    return DiffCochain{degree, std::move(f), std::move(chi)};
}

// Standard normalized Hochschild coboundary with the given bimodule actions:
//   (df)(a_1..a_{n+1}) = a_1 f(a_2..) + sum_i (-1)^i f(.., a_i a_{i+1}, ..)
//                        + (-1)^{n+1} f(..a_n) a_{n+1}.
// Arity 0 is the commutator map u -> (a -> a u - u a).
inline MultiMap hochschild_d(const AssocAlgebra& alg, const Bimodule& coeff, const MultiMap& f) {
    for (const Space& s : f.srcs)
        if (s != alg.space)
            throw ShapeError("hochschild_d: cochain sources must be the algebra");
    if (f.dst != coeff.m)
        throw ShapeError("hochschild_d: cochain target must be the module");
    const int n = f.arity();
    MultiMap out = insert_compose(coeff.left, 2, f); // a_1 . f(rest)
    for (int i = 1; i <= n; ++i) {
        const MultiMap term = insert_compose(f, i, alg.mult);
        out = (i % 2 == 0) ? add(out, term) : sub(out, term);
    }
    const MultiMap last = insert_compose(coeff.right, 1, f);
    out = (n % 2 == 0) ? sub(out, last) : add(out, last);
    return out;
}

// The operator mixing d into every nonempty subset of argument slots:
//   (pf)(a_1..a_n) = sum_{S nonempty} f(.., d(a_i) for i in S, ..) - Delta(f(..)).
inline MultiMap partial_d_delta(const MultiMap& f, const Lin& d, const Lin& Delta) {
    const int n = f.arity();
    for (const Space& s : f.srcs)
        if (s != d.src)
            throw ShapeError("partial_d_delta: cochain sources must match d");
    if (Delta.src != f.dst || Delta.dst != f.dst)
        throw ShapeError("partial_d_delta: Delta must be an endomorphism of the target");
    MultiMap out = neg(postcompose(Delta, f));
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
        MultiMap term = f;
        for (int i = 0; i < n; ++i)
            if (mask & (std::uint64_t(1) << i))
                term = precompose(term, i + 1, d);
        out = add(out, term);
    }
    return out;
}

// One step of the difference-complex coboundary
//   delta(f, chi) = (delta_Hoch f, delta_Hoch^d chi + (-1)^n p^{d,Delta} f),
// with the twisted module M^d carrying the chi component. The degree-0 and
// degree-1 instances are the same formula with the absent pieces dropped.
inline DiffCochain diff_coboundary(const DifferenceAlgebra& da, const DiffBimodule& bm, const DiffCochain& c) {
    const Bimodule twisted = twist_bimodule(da, bm.bim);
    const int n = c.degree;
    MultiMap f_out = hochschild_d(da.alg, bm.bim, c.f);
    MultiMap chi_out = partial_d_delta(c.f, da.d, bm.Delta);
    if (n % 2 != 0)
        chi_out = neg(chi_out);
    if (c.chi)
        chi_out = add(chi_out, hochschild_d(da.alg, twisted, *c.chi));
    return DiffCochain{n + 1, std::move(f_out), std::move(chi_out)};
}

inline bool is_cocycle(const DifferenceAlgebra& da, const DiffBimodule& bm, const DiffCochain& c) {
    const DiffCochain d = diff_coboundary(da, bm, c);
    return is_zero(d.f) && is_zero(*d.chi);
}

// Third-cocycle test for a pair (mu : A^3 -> M, chi : A^2 -> M).
inline bool is_3_cocycle(const DifferenceAlgebra& da, const DiffBimodule& bm, const MultiMap& mu,
                         const MultiMap& chi) {
    return is_cocycle(da, bm, make_cochain(3, mu, chi));
}

} // namespace da2

#endif
