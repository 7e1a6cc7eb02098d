#ifndef DA2_DERIVED_HPP
#define DA2_DERIVED_HPP

#include <da2/diffalg.hpp>

namespace da2 {

// The doubled algebra (Abar + A, *) with
//   (abar, x) * (bbar, y) = (overline{ab}, ay + xb + xy).
// Basis order: the Abar copy first, then the A copy.
struct StarAlgebra {
    AssocAlgebra base;
    SumSpace carrier;
    MultiMap mult; // carrier x carrier -> carrier

    StarAlgebra(const AssocAlgebra& alg, SumSpace c, MultiMap m)
        : base(alg), carrier(std::move(c)), mult(std::move(m)) {}
};

inline StarAlgebra build_star(const AssocAlgebra& alg) {
    SumSpace carrier({alg.space, alg.space}, alg.space.label + "bar+" + alg.space.label);
    MultiMap mult({carrier.whole, carrier.whole}, carrier.whole);
    const std::vector<SumSpace> slots{carrier, carrier};
    add_block(mult, slots, carrier, alg.mult, {0, 0}, 0); // abar * bbar -> overline{ab}
    add_block(mult, slots, carrier, alg.mult, {0, 1}, 1); // a y
    add_block(mult, slots, carrier, alg.mult, {1, 0}, 1); // x b
    add_block(mult, slots, carrier, alg.mult, {1, 1}, 1); // x y
    return StarAlgebra(alg, std::move(carrier), std::move(mult));
}

// Graph criterion: d is a difference operator iff Graph(d) is closed under *.
// Closure of products of graph generators amounts to the A component of
// (abar, d a) * (bbar, d b) being d(ab).
inline bool graph_subalgebra_check(const AssocAlgebra& alg, const Lin& d) {
    if (d.src != alg.space || d.dst != alg.space)
        throw ShapeError("graph_subalgebra_check: d is not an endomorphism");
    const StarAlgebra star = build_star(alg);
    // gamma : A -> carrier, a -> (abar, d a)
    Lin gamma = compose_lin(star.carrier.inclusion(0), identity_lin(alg.space));
    gamma = add(gamma, compose_lin(star.carrier.inclusion(1), d));
    const MultiMap prod = precompose(precompose(star.mult, 1, gamma), 2, gamma);
    const MultiMap a_part = postcompose(star.carrier.projection(1), prod);
    return a_part == postcompose(d, alg.mult);
}

// Multilinear maps V^k -> V over a single space, the home of the
// Gerstenhaber bracket.
inline MultiMap arity_map(const Space& v, int k) {
    return zero_multimap(std::vector<Space>(static_cast<std::size_t>(k), v), v);
}

// Insertion composition with the classical signs:
//   (f obar g)(x_1..x_{k+l-1}) = sum_i (-1)^{(i-1)(l-1)} f(.., g(x_i..), ..).
inline MultiMap bar_compose(const MultiMap& f, const MultiMap& g) {
    const int k = f.arity();
    const int l = g.arity();
    MultiMap out = arity_map(f.dst, k + l - 1);
    for (int i = 1; i <= k; ++i) {
        const MultiMap term = insert_compose(f, i, g);
        out = (((i - 1) * (l - 1)) % 2 == 0) ? add(out, term) : sub(out, term);
    }
    return out;
}

// [f, g] = f obar g - (-1)^{(k-1)(l-1)} g obar f.
inline MultiMap gerstenhaber(const MultiMap& f, const MultiMap& g, int arity_cap = 3) {
    const int k = f.arity();
    const int l = g.arity();
    if (k < 1 || l < 1)
        throw ShapeError("gerstenhaber: arities must be positive");
    if (k + l - 1 > arity_cap)
        throw ShapeError("gerstenhaber: arity cap exceeded");
    const MultiMap fg = bar_compose(f, g);
    const MultiMap gf = bar_compose(g, f);
    return (((k - 1) * (l - 1)) % 2 == 0) ? sub(fg, gf) : add(fg, gf);
}

// Embedding of Hom(Abar^k, A) into maps on the doubled carrier: feed the Abar
// components in, land in the A summand.
inline MultiMap embed_h(const StarAlgebra& star, const MultiMap& h) {
    const int k = h.arity();
    MultiMap out = arity_map(star.carrier.whole, k);
    add_block(out, std::vector<SumSpace>(static_cast<std::size_t>(k), star.carrier), star.carrier, h,
              std::vector<int>(static_cast<std::size_t>(k), 0), 1);
    return out;
}

// Projection P of a carrier map onto Hom(Abar^k, A).
inline MultiMap project_h(const StarAlgebra& star, const MultiMap& m) {
    MultiMap out = m;
    for (int s = 1; s <= m.arity(); ++s)
        out = precompose(out, s, star.carrier.inclusion(0));
    return postcompose(star.carrier.projection(1), out);
}

inline MultiMap l1(const StarAlgebra& star, const MultiMap& h) {
    return project_h(star, gerstenhaber(star.mult, embed_h(star, h)));
}

inline MultiMap l2(const StarAlgebra& star, const MultiMap& h1, const MultiMap& h2) {
    return project_h(star, gerstenhaber(gerstenhaber(star.mult, embed_h(star, h1)), embed_h(star, h2)));
}

// Maurer-Cartan residual l1(d) + 1/2 l2(d, d) of d viewed in Hom(Abar, A).
inline MultiMap mc_residual(const AssocAlgebra& alg, const Lin& d) {
    if (d.src != alg.space || d.dst != alg.space)
        throw ShapeError("mc_residual: d is not an endomorphism");
    const StarAlgebra star = build_star(alg);
    const MultiMap dh = to_multimap(d);
    return add(l1(star, dh), scale(Rational(1, 2), l2(star, dh, dh)));
}

inline bool mc_check(const AssocAlgebra& alg, const Lin& d) { return is_zero(mc_residual(alg, d)); }

} // namespace da2

#endif
