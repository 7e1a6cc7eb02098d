#ifndef DA2_LINALG_HPP
#define DA2_LINALG_HPP

#include <da2/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace da2 {

// Basis-indexed finite-dimensional space. Compatibility of maps is a matter
// of dimensions; labels only decorate diagnostics.
struct Space {
    int dim = 0;
    std::string label;

    Space() = default;
    Space(int d, std::string l = "") : dim(d), label(std::move(l)) {
        if (d < 0)
            throw ShapeError("space dimension must be nonnegative");
    }

    friend bool operator==(const Space& a, const Space& b) { return a.dim == b.dim; }
    friend bool operator!=(const Space& a, const Space& b) { return !(a == b); }
};

using Vec = std::vector<Rational>;

inline Vec zero_vec(const Space& s) { return Vec(static_cast<std::size_t>(s.dim)); }

inline bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

inline Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw ShapeError("vector dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw ShapeError("vector dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

inline Vec scale(const Rational& c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = c * a[i];
    return r;
}

inline Vec basis_vec(const Space& s, int i) {
    Vec v = zero_vec(s);
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

// Linear map stored as a dense dst.dim x src.dim coefficient array.
struct Lin {
    Space src;
    Space dst;
    std::vector<Rational> a; // a[r*src.dim + c]

    Lin() = default;
    Lin(Space s, Space d) : src(s), dst(d), a(static_cast<std::size_t>(s.dim) * d.dim) {}

    Rational& at(int r, int c) { return a[static_cast<std::size_t>(r) * src.dim + c]; }
    const Rational& at(int r, int c) const { return a[static_cast<std::size_t>(r) * src.dim + c]; }

    friend bool operator==(const Lin& f, const Lin& g) {
        return f.src == g.src && f.dst == g.dst && f.a == g.a;
    }
    friend bool operator!=(const Lin& f, const Lin& g) { return !(f == g); }
};

inline Lin zero_lin(const Space& src, const Space& dst) { return Lin(src, dst); }

inline Lin identity_lin(const Space& s) {
    Lin f(s, s);
    for (int i = 0; i < s.dim; ++i)
        f.at(i, i) = 1;
    return f;
}

inline bool is_zero(const Lin& f) {
    return std::all_of(f.a.begin(), f.a.end(), [](const Rational& x) { return x == 0; });
}

inline Vec eval(const Lin& f, const Vec& v) {
    if (static_cast<int>(v.size()) != f.src.dim)
        throw ShapeError("eval: vector does not match source dimension");
    Vec r = zero_vec(f.dst);
    for (int i = 0; i < f.dst.dim; ++i)
        for (int j = 0; j < f.src.dim; ++j)
            if (f.at(i, j) != 0)
                r[static_cast<std::size_t>(i)] += f.at(i, j) * v[static_cast<std::size_t>(j)];
    return r;
}

inline Lin compose_lin(const Lin& g, const Lin& f) {
    if (f.dst != g.src)
        throw ShapeError("compose_lin: spaces do not match");
    Lin r(f.src, g.dst);
    for (int i = 0; i < g.dst.dim; ++i)
        for (int k = 0; k < f.dst.dim; ++k) {
            const Rational& gik = g.at(i, k);
            if (gik == 0)
                continue;
            for (int j = 0; j < f.src.dim; ++j)
                if (f.at(k, j) != 0)
                    r.at(i, j) += gik * f.at(k, j);
        }
    return r;
}

inline Lin add(const Lin& f, const Lin& g) {
    if (f.src != g.src || f.dst != g.dst)
        throw ShapeError("add: map shapes differ");
    Lin r = f;
    for (std::size_t i = 0; i < r.a.size(); ++i)
        r.a[i] += g.a[i];
    return r;
}

inline Lin sub(const Lin& f, const Lin& g) {
    if (f.src != g.src || f.dst != g.dst)
        throw ShapeError("sub: map shapes differ");
    Lin r = f;
    for (std::size_t i = 0; i < r.a.size(); ++i)
        r.a[i] -= g.a[i];
    return r;
}

inline Lin scale(const Rational& c, const Lin& f) {
    Lin r = f;
    for (auto& x : r.a)
        x *= c;
    return r;
}

inline Lin neg(const Lin& f) { return scale(Rational(-1), f); }

// Column-built map: columns[j] is the image of the j-th source basis vector.
inline Lin lin_from_columns(const Space& src, const Space& dst, const std::vector<Vec>& columns) {
    if (static_cast<int>(columns.size()) != src.dim)
        throw ShapeError("lin_from_columns: column count mismatch");
    Lin f(src, dst);
    for (int j = 0; j < src.dim; ++j) {
        if (static_cast<int>(columns[static_cast<std::size_t>(j)].size()) != dst.dim)
            throw ShapeError("lin_from_columns: column dimension mismatch");
        for (int i = 0; i < dst.dim; ++i)
            f.at(i, j) = columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }
    return f;
}

// Dense multilinear map. Coefficients are indexed by (dst basis index,
// src1 index, ..., srcN index), dst slowest. Arity 0 is allowed and stands
// for a constant element of dst; the public operations below only ever
// produce it when a caller asks for it explicitly.
struct MultiMap {
    std::vector<Space> srcs;
    Space dst;
    std::vector<Rational> a;

    MultiMap() = default;
    MultiMap(std::vector<Space> ss, Space d) : srcs(std::move(ss)), dst(d) {
        std::size_t n = static_cast<std::size_t>(dst.dim);
        for (const Space& s : srcs)
            n *= static_cast<std::size_t>(s.dim);
        a.assign(n, Rational(0));
    }

    int arity() const { return static_cast<int>(srcs.size()); }

    std::size_t flat_index(const std::vector<int>& idx) const {
        // idx = (dst, src1, ..., srcN)
        std::size_t k = static_cast<std::size_t>(idx[0]);
        for (std::size_t s = 0; s < srcs.size(); ++s)
            k = k * srcs[s].dim + static_cast<std::size_t>(idx[s + 1]);
        return k;
    }

    Rational& at(const std::vector<int>& idx) { return a[flat_index(idx)]; }
    const Rational& at(const std::vector<int>& idx) const { return a[flat_index(idx)]; }

    friend bool operator==(const MultiMap& f, const MultiMap& g) {
        return f.srcs == g.srcs && f.dst == g.dst && f.a == g.a;
    }
    friend bool operator!=(const MultiMap& f, const MultiMap& g) { return !(f == g); }
};

inline bool is_zero(const MultiMap& m) {
    return std::all_of(m.a.begin(), m.a.end(), [](const Rational& x) { return x == 0; });
}

inline MultiMap zero_multimap(std::vector<Space> srcs, const Space& dst) {
    return MultiMap(std::move(srcs), dst);
}

inline MultiMap to_multimap(const Lin& f) {
    MultiMap m({f.src}, f.dst);
    m.a = f.a;
    return m;
}

inline Lin to_lin(const MultiMap& m) {
    if (m.arity() != 1)
        throw ShapeError("to_lin: arity must be 1");
    Lin f(m.srcs[0], m.dst);
    f.a = m.a;
    return f;
}

// Iterates over all source index tuples of m (dst not included).
template <typename F>
inline void for_each_src_tuple(const MultiMap& m, F&& fn) {
    for (const Space& s : m.srcs)
        if (s.dim == 0)
            return;
    std::vector<int> idx(m.srcs.size(), 0);
    while (true) {
        fn(idx);
        int k = static_cast<int>(idx.size()) - 1;
        while (k >= 0) {
            if (++idx[static_cast<std::size_t>(k)] < m.srcs[static_cast<std::size_t>(k)].dim)
                break;
            idx[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0)
            break;
    }
}

inline Vec eval(const MultiMap& m, const std::vector<Vec>& args) {
    if (static_cast<int>(args.size()) != m.arity())
        throw ShapeError("eval: argument count does not match arity");
    for (std::size_t s = 0; s < args.size(); ++s)
        if (static_cast<int>(args[s].size()) != m.srcs[s].dim)
            throw ShapeError("eval: argument dimension mismatch");
    Vec out = zero_vec(m.dst);
    if (m.a.empty())
        return out;
    std::vector<int> idx(m.srcs.size(), 0);
    for (;;) {
        Rational w(1);
        bool nz = true;
        for (std::size_t s = 0; s < idx.size(); ++s) {
            const Rational& x = args[s][static_cast<std::size_t>(idx[s])];
            if (x == 0) {
                nz = false;
                break;
            }
            w *= x;
        }
        if (nz) {
            std::size_t base = 0;
            for (std::size_t s = 0; s < idx.size(); ++s)
                base = base * m.srcs[s].dim + static_cast<std::size_t>(idx[s]);
            std::size_t stride = m.a.size() / std::max<std::size_t>(1, m.dst.dim);
            for (int d = 0; d < m.dst.dim; ++d) {
                const Rational& c = m.a[static_cast<std::size_t>(d) * stride + base];
                if (c != 0)
                    out[static_cast<std::size_t>(d)] += c * w;
            }
        }
        int k = static_cast<int>(idx.size()) - 1;
        while (k >= 0) {
            if (++idx[static_cast<std::size_t>(k)] < m.srcs[static_cast<std::size_t>(k)].dim)
                break;
            idx[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0)
            break;
    }
    return out;
}

inline MultiMap add(const MultiMap& f, const MultiMap& g) {
    if (f.srcs != g.srcs || f.dst != g.dst)
        throw ShapeError("add: multimap shapes differ");
    MultiMap r = f;
    for (std::size_t i = 0; i < r.a.size(); ++i)
        r.a[i] += g.a[i];
    return r;
}

inline MultiMap sub(const MultiMap& f, const MultiMap& g) {
    if (f.srcs != g.srcs || f.dst != g.dst)
        throw ShapeError("sub: multimap shapes differ");
    MultiMap r = f;
    for (std::size_t i = 0; i < r.a.size(); ++i)
        r.a[i] -= g.a[i];
    return r;
}

inline MultiMap scale(const Rational& c, const MultiMap& f) {
    MultiMap r = f;
    for (auto& x : r.a)
        x *= c;
    return r;
}

inline MultiMap neg(const MultiMap& f) { return scale(Rational(-1), f); }

// m with slot `slot` (1-based) precomposed by f: the result feeds f's source
// space into that slot.
inline MultiMap precompose(const MultiMap& m, int slot, const Lin& f) {
    if (slot < 1 || slot > m.arity())
        throw ShapeError("precompose: slot out of range");
    if (f.dst != m.srcs[static_cast<std::size_t>(slot - 1)])
        throw ShapeError("precompose: map target does not match slot space");
    std::vector<Space> srcs = m.srcs;
    srcs[static_cast<std::size_t>(slot - 1)] = f.src;
    MultiMap r(srcs, m.dst);
    if (r.a.empty())
        return r;
    std::vector<int> idx(srcs.size() + 1, 0);
    // idx = (dst, new src tuple); contract over the old slot index.
    std::vector<int> inner(m.srcs.size() + 1, 0);
    for (std::size_t flat = 0; flat < r.a.size(); ++flat) {
        // decode flat -> idx
        std::size_t rem = flat;
        for (int s = static_cast<int>(srcs.size()); s >= 1; --s) {
            idx[static_cast<std::size_t>(s)] = static_cast<int>(rem % srcs[static_cast<std::size_t>(s - 1)].dim);
            rem /= static_cast<std::size_t>(srcs[static_cast<std::size_t>(s - 1)].dim);
        }
        idx[0] = static_cast<int>(rem);
        Rational acc(0);
        inner = idx;
        for (int k = 0; k < f.dst.dim; ++k) {
            const Rational& fk = f.at(k, idx[static_cast<std::size_t>(slot)]);
            if (fk == 0)
                continue;
            inner[static_cast<std::size_t>(slot)] = k;
            const Rational& mv = m.at(inner);
            if (mv != 0)
                acc += mv * fk;
        }
        r.a[flat] = acc;
    }
    return r;
}

inline MultiMap postcompose(const Lin& f, const MultiMap& m) {
    if (f.src != m.dst)
        throw ShapeError("postcompose: map source does not match multimap target");
    MultiMap r(m.srcs, f.dst);
    if (m.a.empty() || r.a.empty())
        return r;
    const std::size_t block = m.a.size() / std::max<std::size_t>(1, m.dst.dim);
    for (int i = 0; i < f.dst.dim; ++i)
        for (int k = 0; k < m.dst.dim; ++k) {
            const Rational& fik = f.at(i, k);
            if (fik == 0)
                continue;
            for (std::size_t b = 0; b < block; ++b) {
                const Rational& mv = m.a[static_cast<std::size_t>(k) * block + b];
                if (mv != 0)
                    r.a[static_cast<std::size_t>(i) * block + b] += fik * mv;
            }
        }
    return r;
}

// Operadic partial composition: (f o_pos g)(x_1..x_{k+l-1}) plugs g's value
// into slot `pos` of f. No signs here; callers add their own.
inline MultiMap insert_compose(const MultiMap& f, int pos, const MultiMap& g) {
    if (pos < 1 || pos > f.arity())
        throw ShapeError("insert_compose: position out of range");
    if (g.dst != f.srcs[static_cast<std::size_t>(pos - 1)])
        throw ShapeError("insert_compose: inner target does not match slot space");
    std::vector<Space> srcs;
    srcs.reserve(f.srcs.size() + g.srcs.size() - 1);
    for (int s = 0; s < pos - 1; ++s)
        srcs.push_back(f.srcs[static_cast<std::size_t>(s)]);
    for (const Space& s : g.srcs)
        srcs.push_back(s);
    for (int s = pos; s < f.arity(); ++s)
        srcs.push_back(f.srcs[static_cast<std::size_t>(s)]);
    MultiMap r(srcs, f.dst);
    if (r.a.empty())
        return r;
    const int gk = g.arity();
    std::vector<int> idx(srcs.size() + 1, 0);
    std::vector<int> fidx(f.srcs.size() + 1, 0);
    std::vector<int> gidx(g.srcs.size() + 1, 0);
    for (std::size_t flat = 0; flat < r.a.size(); ++flat) {
        std::size_t rem = flat;
        for (int s = static_cast<int>(srcs.size()); s >= 1; --s) {
            idx[static_cast<std::size_t>(s)] = static_cast<int>(rem % srcs[static_cast<std::size_t>(s - 1)].dim);
            rem /= static_cast<std::size_t>(srcs[static_cast<std::size_t>(s - 1)].dim);
        }
        idx[0] = static_cast<int>(rem);
        // split outer/inner indices
        fidx[0] = idx[0];
        for (int s = 1; s <= pos - 1; ++s)
            fidx[static_cast<std::size_t>(s)] = idx[static_cast<std::size_t>(s)];
        for (int s = pos + 1; s <= f.arity(); ++s)
            fidx[static_cast<std::size_t>(s)] = idx[static_cast<std::size_t>(s + gk - 1)];
        for (int s = 1; s <= gk; ++s)
            gidx[static_cast<std::size_t>(s)] = idx[static_cast<std::size_t>(pos - 1 + s)];
        Rational acc(0);
        for (int m = 0; m < g.dst.dim; ++m) {
            gidx[0] = m;
            const Rational& gv = g.at(gidx);
            if (gv == 0)
                continue;
            fidx[static_cast<std::size_t>(pos)] = m;
            const Rational& fv = f.at(fidx);
            if (fv != 0)
                acc += fv * gv;
        }
        r.a[flat] = acc;
    }
    return r;
}

// ---- kernels and solving -------------------------------------------------

namespace detail {

// Fraction-free (Bareiss) row echelon form of an integer matrix. Returns the
// pivot column of each echelon row, in order.
inline std::vector<int> bareiss_echelon(std::vector<std::vector<Integer>>& m) {
    std::vector<int> pivots;
    if (m.empty())
        return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    Integer prev(1);
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int p = -1;
        for (int r = row; r < rows; ++r)
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                p = r;
                break;
            }
        if (p < 0)
            continue;
        std::swap(m[static_cast<std::size_t>(p)], m[static_cast<std::size_t>(row)]);
        const Integer pivot = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        for (int r = row + 1; r < rows; ++r) {
            const Integer head = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            for (int c = 0; c < cols; ++c) {
                Integer v = pivot * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]
                            - head * m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v / prev; // exact
            }
        }
        prev = pivot;
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::vector<std::vector<Integer>> clear_denominators(const Lin& f) {
    std::vector<std::vector<Integer>> m(static_cast<std::size_t>(f.dst.dim),
                                        std::vector<Integer>(static_cast<std::size_t>(f.src.dim)));
    for (int r = 0; r < f.dst.dim; ++r) {
        Integer l(1);
        for (int c = 0; c < f.src.dim; ++c)
            l = lcm(l, denominator(f.at(r, c)));
        for (int c = 0; c < f.src.dim; ++c)
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                numerator(f.at(r, c)) * (l / denominator(f.at(r, c)));
    }
    return m;
}

} // namespace detail

// Exact basis of ker(f), one vector per free column. Empty when the kernel
// is trivial.
inline std::vector<Vec> kernel_basis(const Lin& f) {
    std::vector<Vec> basis;
    if (f.src.dim == 0)
        return basis;
    auto m = detail::clear_denominators(f);
    const std::vector<int> pivots = detail::bareiss_echelon(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(f.src.dim), false);
    for (int c : pivots)
        is_pivot[static_cast<std::size_t>(c)] = true;
    for (int free = 0; free < f.src.dim; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)])
            continue;
        Vec v(static_cast<std::size_t>(f.src.dim));
        v[static_cast<std::size_t>(free)] = 1;
        // back-substitute through the echelon rows
        for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
            const int pc = pivots[static_cast<std::size_t>(r)];
            Rational acc(0);
            for (int c = pc + 1; c < f.src.dim; ++c)
                if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0 && v[static_cast<std::size_t>(c)] != 0)
                    acc += Rational(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) * v[static_cast<std::size_t>(c)];
            v[static_cast<std::size_t>(pc)] = -acc / Rational(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(pc)]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Left inverse P of an injective column map K (P * K = Id). Used to express
// vectors known to lie in span(K) in K-coordinates.
inline Lin left_inverse(const Lin& k) {
    const int n = k.dst.dim;
    const int m = k.src.dim;
    // rational Gauss-Jordan on [K | I], tracking row operations
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(m + n)));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < m; ++c)
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = k.at(r, c);
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(m + r)] = 1;
    }
    int row = 0;
    std::vector<int> pivot_rows;
    for (int col = 0; col < m && row < n; ++col) {
        int p = -1;
        for (int r = row; r < n; ++r)
            if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                p = r;
                break;
            }
        if (p < 0)
            throw ShapeError("left_inverse: columns are not independent");
        std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(row)]);
        const Rational piv = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        for (int c = 0; c < m + n; ++c)
            a[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] /= piv;
        for (int r = 0; r < n; ++r) {
            if (r == row)
                continue;
            const Rational head = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (head == 0)
                continue;
            for (int c = 0; c < m + n; ++c)
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    head * a[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
        }
        pivot_rows.push_back(row);
        ++row;
    }
    if (static_cast<int>(pivot_rows.size()) != m)
        throw ShapeError("left_inverse: columns are not independent");
    Lin p(k.dst, k.src);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c)
            p.at(r, c) = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(m + c)];
    return p;
}

// Exact inverse of a square invertible map.
inline Lin inverse(const Lin& f) {
    if (f.src.dim != f.dst.dim)
        throw ShapeError("inverse: map is not square");
    return left_inverse(f);
}

// ---- direct sums ---------------------------------------------------------

struct SumSpace {
    Space whole;
    std::vector<Space> parts;
    std::vector<int> offset;

    explicit SumSpace(std::vector<Space> ps, std::string label = "") : parts(std::move(ps)) {
        int d = 0;
        for (const Space& p : parts) {
            offset.push_back(d);
            d += p.dim;
        }
        whole = Space(d, std::move(label));
    }

    Lin inclusion(int part) const {
        const Space& p = parts[static_cast<std::size_t>(part)];
        Lin f(p, whole);
        for (int i = 0; i < p.dim; ++i)
            f.at(offset[static_cast<std::size_t>(part)] + i, i) = 1;
        return f;
    }

    Lin projection(int part) const {
        const Space& p = parts[static_cast<std::size_t>(part)];
        Lin f(whole, p);
        for (int i = 0; i < p.dim; ++i)
            f.at(i, offset[static_cast<std::size_t>(part)] + i) = 1;
        return f;
    }
};

inline Lin direct_sum(const SumSpace& src, const SumSpace& dst, const std::vector<Lin>& blocks) {
    if (blocks.size() != src.parts.size() || blocks.size() != dst.parts.size())
        throw ShapeError("direct_sum: block count mismatch");
    Lin f(src.whole, dst.whole);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const Lin& blk = blocks[b];
        if (blk.src != src.parts[b] || blk.dst != dst.parts[b])
            throw ShapeError("direct_sum: block shape mismatch");
        for (int i = 0; i < blk.dst.dim; ++i)
            for (int j = 0; j < blk.src.dim; ++j)
                f.at(dst.offset[b] + i, src.offset[b] + j) = blk.at(i, j);
    }
    return f;
}

// Adds `part` into `whole`, routing slot s of `part` through summand
// choice[s] of the corresponding sum space and the target through summand
// dst_part. Shapes of `part` must match the chosen summands.
inline void add_block(MultiMap& whole, const std::vector<SumSpace>& slot_sums, const SumSpace& dst_sum,
                      const MultiMap& part, const std::vector<int>& choice, int dst_part) {
    if (static_cast<int>(slot_sums.size()) != whole.arity() || static_cast<int>(choice.size()) != whole.arity())
        throw ShapeError("add_block: slot count mismatch");
    if (part.dst != dst_sum.parts[static_cast<std::size_t>(dst_part)])
        throw ShapeError("add_block: target summand mismatch");
    for (int s = 0; s < whole.arity(); ++s)
        if (part.srcs[static_cast<std::size_t>(s)] != slot_sums[static_cast<std::size_t>(s)].parts[static_cast<std::size_t>(choice[static_cast<std::size_t>(s)])])
            throw ShapeError("add_block: slot summand mismatch");
    if (part.a.empty())
        return;
    std::vector<int> pidx(part.srcs.size() + 1, 0);
    std::vector<int> widx(part.srcs.size() + 1, 0);
    for (std::size_t flat = 0; flat < part.a.size(); ++flat) {
        if (part.a[flat] == 0)
            continue;
        std::size_t rem = flat;
        for (int s = part.arity(); s >= 1; --s) {
            pidx[static_cast<std::size_t>(s)] = static_cast<int>(rem % part.srcs[static_cast<std::size_t>(s - 1)].dim);
            rem /= static_cast<std::size_t>(part.srcs[static_cast<std::size_t>(s - 1)].dim);
        }
        pidx[0] = static_cast<int>(rem);
        widx[0] = dst_sum.offset[static_cast<std::size_t>(dst_part)] + pidx[0];
        for (int s = 1; s <= part.arity(); ++s)
            widx[static_cast<std::size_t>(s)] =
                slot_sums[static_cast<std::size_t>(s - 1)].offset[static_cast<std::size_t>(choice[static_cast<std::size_t>(s - 1)])] + pidx[static_cast<std::size_t>(s)];
        whole.at(widx) += part.a[flat];
    }
}

} // namespace da2

#endif
