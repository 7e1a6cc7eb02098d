#ifndef DA2_IO_HPP
#define DA2_IO_HPP

#include <da2/cohom.hpp>
#include <da2/corresp.hpp>
#include <da2/hbimod.hpp>
#include <da2/twoalg.hpp>

#include <json.hpp>

#include <variant>

namespace da2 {

// On-disk structure kinds. Every file is a self-contained JSON object with a
// "kind", a "version", dimension declarations and named sparse coefficient
// lists; unspecified entries are zero. Printing is canonical: fixed key
// order, entries sorted by index tuple, rationals in lowest terms.

struct DiffBimoduleFile {
    DifferenceAlgebra da;
    DiffBimodule bm;
};

struct CochainFile {
    DifferenceAlgebra da;
    DiffBimodule bm;
    DiffCochain c;
};

struct DiffMorphismFile {
    TwoTermDiffAInf src;
    TwoTermDiffAInf dst;
    DiffAInf2Morphism mor;
};

struct HBimodFile {
    AssocAlgebra alg;
    HBimod2 h;
};

struct DiffHBimodFile {
    DifferenceAlgebra da;
    DiffHBimod2 dh;
};

using Structure = std::variant<AssocAlgebra, DifferenceAlgebra, DiffBimoduleFile, AInf2,
                               TwoTermDiffAInf, DiffMorphismFile, CochainFile, CrossedModule,
                               HBimodFile, DiffHBimodFile, DiffAss2>;

inline std::string kind_of(const Structure& s) {
    struct Visitor {
        std::string operator()(const AssocAlgebra&) const { return "algebra"; }
        std::string operator()(const DifferenceAlgebra&) const { return "diff_algebra"; }
        std::string operator()(const DiffBimoduleFile&) const { return "diff_bimodule"; }
        std::string operator()(const AInf2&) const { return "ainf2"; }
        std::string operator()(const TwoTermDiffAInf&) const { return "diff_ainf2"; }
        std::string operator()(const DiffMorphismFile&) const { return "diff_morphism"; }
        std::string operator()(const CochainFile&) const { return "cochain"; }
        std::string operator()(const CrossedModule&) const { return "crossed_module"; }
        std::string operator()(const HBimodFile&) const { return "hbimod"; }
        std::string operator()(const DiffHBimodFile&) const { return "diff_hbimod"; }
        std::string operator()(const DiffAss2&) const { return "diffass2"; }
    };
    return std::visit(Visitor{}, s);
}

namespace io_detail {

using json = nlohmann::ordered_json;

inline json map_entries(const std::vector<Rational>& coeffs, const std::vector<int>& dims) {
    json out = json::array();
    if (coeffs.empty())
        return out;
    std::vector<int> idx(dims.size(), 0);
    for (std::size_t flat = 0; flat < coeffs.size(); ++flat) {
        if (coeffs[flat] != 0) {
            json e = json::array();
            e.push_back(idx);
            e.push_back(rational_str(coeffs[flat]));
            out.push_back(std::move(e));
        }
        for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
            if (++idx[static_cast<std::size_t>(k)] < dims[static_cast<std::size_t>(k)])
                break;
            idx[static_cast<std::size_t>(k)] = 0;
        }
    }
    return out;
}

inline json to_json(const Lin& f) { return map_entries(f.a, {f.dst.dim, f.src.dim}); }

inline json to_json(const MultiMap& m) {
    std::vector<int> dims{m.dst.dim};
    for (const Space& s : m.srcs)
        dims.push_back(s.dim);
    return map_entries(m.a, dims);
}

inline void fill_entries(std::vector<Rational>& coeffs, const std::vector<int>& dims, const json& j,
                         const std::string& name) {
    if (!j.is_array())
        throw ParseError("map '" + name + "' must be an array of entries");
    for (const json& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_array() || !e[1].is_string())
            throw ParseError("map '" + name + "': each entry must be [[indices...], \"p/q\"]");
        if (e[0].size() != dims.size())
            throw ParseError("map '" + name + "': index tuple has wrong length");
        std::size_t flat = 0;
        for (std::size_t k = 0; k < dims.size(); ++k) {
            if (!e[0][k].is_number_integer())
                throw ParseError("map '" + name + "': indices must be integers");
            const long long v = e[0][k].get<long long>();
            if (v < 0 || v >= dims[k])
                throw ParseError("map '" + name + "': index out of range");
            flat = flat * static_cast<std::size_t>(dims[k]) + static_cast<std::size_t>(v);
        }
        coeffs[flat] = parse_rational(e[1].get<std::string>());
    }
}

inline Lin read_lin(const json& maps, const std::string& name, const Space& src, const Space& dst) {
    Lin f(src, dst);
    if (maps.contains(name))
        fill_entries(f.a, {dst.dim, src.dim}, maps.at(name), name);
    return f;
}

inline MultiMap read_multimap(const json& maps, const std::string& name, std::vector<Space> srcs,
                              const Space& dst) {
    MultiMap m(std::move(srcs), dst);
    std::vector<int> dims{m.dst.dim};
    for (const Space& s : m.srcs)
        dims.push_back(s.dim);
    if (maps.contains(name))
        fill_entries(m.a, dims, maps.at(name), name);
    return m;
}

inline int read_dim(const json& dims, const std::string& name, int max_dim) {
    if (!dims.contains(name) || !dims.at(name).is_number_integer())
        throw ParseError("missing dimension '" + name + "'");
    const long long v = dims.at(name).get<long long>();
    if (v < 0)
        throw ParseError("dimension '" + name + "' must be nonnegative");
    if (v > max_dim)
        throw ParseError("dimension '" + name + "' exceeds the --max-dim limit");
    return static_cast<int>(v);
}

// --- per-kind emitters -----------------------------------------------------

inline void emit_algebra(json& dims, json& maps, const AssocAlgebra& a) {
    dims["A"] = a.space.dim;
    maps["mult"] = to_json(a.mult);
}

inline void emit_diff_algebra(json& dims, json& maps, const DifferenceAlgebra& da) {
    emit_algebra(dims, maps, da.alg);
    maps["d"] = to_json(da.d);
}

inline void emit_diff_bimodule(json& dims, json& maps, const DifferenceAlgebra& da,
                               const DiffBimodule& bm) {
    emit_diff_algebra(dims, maps, da);
    dims["M"] = bm.bim.m.dim;
    maps["left"] = to_json(bm.bim.left);
    maps["right"] = to_json(bm.bim.right);
    maps["Delta"] = to_json(bm.Delta);
}

inline void emit_ainf2(json& dims, json& maps, const AInf2& a) {
    dims["A0"] = a.a0().dim;
    dims["A1"] = a.a1().dim;
    maps["delta"] = to_json(a.cx.delta);
    maps["m00"] = to_json(a.m00);
    maps["m01"] = to_json(a.m01);
    maps["m10"] = to_json(a.m10);
    maps["mu"] = to_json(a.mu);
}

inline void emit_diff_ainf2(json& dims, json& maps, const TwoTermDiffAInf& x) {
    emit_ainf2(dims, maps, x.ainf);
    maps["d0"] = to_json(x.dop.d0);
    maps["d1"] = to_json(x.dop.d1);
    maps["d2"] = to_json(x.dop.d2);
}

inline json structure_json(const Structure& s);

inline json object_json(const std::string& kind, const json& dims, const json& maps) {
    json out;
    out["kind"] = kind;
    out["version"] = 1;
    out["dims"] = dims;
    out["maps"] = maps;
    return out;
}

inline json structure_json(const Structure& s) {
    json dims = json::object();
    json maps = json::object();
    const std::string kind = kind_of(s);
    if (const auto* a = std::get_if<AssocAlgebra>(&s)) {
        emit_algebra(dims, maps, *a);
    } else if (const auto* da = std::get_if<DifferenceAlgebra>(&s)) {
        emit_diff_algebra(dims, maps, *da);
    } else if (const auto* bf = std::get_if<DiffBimoduleFile>(&s)) {
        emit_diff_bimodule(dims, maps, bf->da, bf->bm);
    } else if (const auto* ai = std::get_if<AInf2>(&s)) {
        emit_ainf2(dims, maps, *ai);
    } else if (const auto* x = std::get_if<TwoTermDiffAInf>(&s)) {
        emit_diff_ainf2(dims, maps, *x);
    } else if (const auto* mf = std::get_if<DiffMorphismFile>(&s)) {
        json out;
        out["kind"] = kind;
        out["version"] = 1;
        out["src"] = structure_json(Structure{mf->src});
        out["dst"] = structure_json(Structure{mf->dst});
        json mm = json::object();
        mm["phi0"] = to_json(mf->mor.base.phi0);
        mm["phi1"] = to_json(mf->mor.base.phi1);
        mm["phi2"] = to_json(mf->mor.base.phi2);
        mm["phi3"] = to_json(mf->mor.phi3);
        out["maps"] = mm;
        return out;
    } else if (const auto* cf = std::get_if<CochainFile>(&s)) {
        emit_diff_bimodule(dims, maps, cf->da, cf->bm);
        json out;
        out["kind"] = kind;
        out["version"] = 1;
        out["degree"] = cf->c.degree;
        out["dims"] = dims;
        maps["f"] = to_json(cf->c.f);
        if (cf->c.chi)
            maps["chi"] = to_json(*cf->c.chi);
        out["maps"] = maps;
        return out;
    } else if (const auto* cm = std::get_if<CrossedModule>(&s)) {
        dims["A"] = cm->base.alg.space.dim;
        dims["Ap"] = cm->top.alg.space.dim;
        maps["mult"] = to_json(cm->base.alg.mult);
        maps["d"] = to_json(cm->base.d);
        maps["top_mult"] = to_json(cm->top.alg.mult);
        maps["top_d"] = to_json(cm->top.d);
        maps["left"] = to_json(cm->left);
        maps["right"] = to_json(cm->right);
        maps["partial"] = to_json(cm->partial);
    } else if (const auto* hf = std::get_if<HBimodFile>(&s)) {
        dims["A"] = hf->alg.space.dim;
        dims["M0"] = hf->h.m0.dim;
        dims["M1"] = hf->h.m1.dim;
        maps["mult"] = to_json(hf->alg.mult);
        maps["delta"] = to_json(hf->h.delta);
        maps["act_am0"] = to_json(hf->h.act_am0);
        maps["act_m0a"] = to_json(hf->h.act_m0a);
        maps["act_am1"] = to_json(hf->h.act_am1);
        maps["act_m1a"] = to_json(hf->h.act_m1a);
        maps["nu_aav"] = to_json(hf->h.nu_aav);
        maps["nu_ava"] = to_json(hf->h.nu_ava);
        maps["nu_vaa"] = to_json(hf->h.nu_vaa);
    } else if (const auto* df = std::get_if<DiffHBimodFile>(&s)) {
        dims["A"] = df->da.alg.space.dim;
        dims["M0"] = df->dh.base.m0.dim;
        dims["M1"] = df->dh.base.m1.dim;
        maps["mult"] = to_json(df->da.alg.mult);
        maps["d"] = to_json(df->da.d);
        maps["delta"] = to_json(df->dh.base.delta);
        maps["act_am0"] = to_json(df->dh.base.act_am0);
        maps["act_m0a"] = to_json(df->dh.base.act_m0a);
        maps["act_am1"] = to_json(df->dh.base.act_am1);
        maps["act_m1a"] = to_json(df->dh.base.act_m1a);
        maps["nu_aav"] = to_json(df->dh.base.nu_aav);
        maps["nu_ava"] = to_json(df->dh.base.nu_ava);
        maps["nu_vaa"] = to_json(df->dh.base.nu_vaa);
        maps["Delta0"] = to_json(df->dh.Delta0);
        maps["Delta1"] = to_json(df->dh.Delta1);
        maps["theta_am"] = to_json(df->dh.theta_am);
        maps["theta_ma"] = to_json(df->dh.theta_ma);
    } else if (const auto* c2 = std::get_if<DiffAss2>(&s)) {
        dims["C0"] = c2->tv.c0.dim;
        dims["C1"] = c2->tv.c1.dim;
        maps["s"] = to_json(c2->tv.s);
        maps["t"] = to_json(c2->tv.t);
        maps["i"] = to_json(c2->tv.i);
        maps["bullet0"] = to_json(c2->bullet0);
        maps["bullet1"] = to_json(c2->bullet1);
        maps["assoc"] = to_json(c2->assoc);
        maps["D0"] = to_json(c2->D0);
        maps["D1"] = to_json(c2->D1);
        maps["Dnat"] = to_json(c2->Dnat);
    }
    return object_json(kind, dims, maps);
}

// --- per-kind readers --------------------------------------------------------

inline AssocAlgebra read_algebra(const json& dims, const json& maps, int max_dim) {
    const Space a(read_dim(dims, "A", max_dim), "A");
    return AssocAlgebra{a, read_multimap(maps, "mult", {a, a}, a)};
}

inline DifferenceAlgebra read_diff_algebra(const json& dims, const json& maps, int max_dim) {
    AssocAlgebra alg = read_algebra(dims, maps, max_dim);
    Lin d = read_lin(maps, "d", alg.space, alg.space);
    return DifferenceAlgebra{std::move(alg), std::move(d)};
}

inline DiffBimoduleFile read_diff_bimodule(const json& dims, const json& maps, int max_dim) {
    DifferenceAlgebra da = read_diff_algebra(dims, maps, max_dim);
    const Space m(read_dim(dims, "M", max_dim), "M");
    DiffBimodule bm{Bimodule{m, read_multimap(maps, "left", {da.alg.space, m}, m),
                             read_multimap(maps, "right", {m, da.alg.space}, m)},
                    read_lin(maps, "Delta", m, m)};
    return DiffBimoduleFile{std::move(da), std::move(bm)};
}

inline AInf2 read_ainf2(const json& dims, const json& maps, int max_dim) {
    const Space a0(read_dim(dims, "A0", max_dim), "A0");
    const Space a1(read_dim(dims, "A1", max_dim), "A1");
    return AInf2{TwoTermComplex{a0, a1, read_lin(maps, "delta", a1, a0)},
                 read_multimap(maps, "m00", {a0, a0}, a0), read_multimap(maps, "m01", {a0, a1}, a1),
                 read_multimap(maps, "m10", {a1, a0}, a1),
                 read_multimap(maps, "mu", {a0, a0, a0}, a1)};
}

inline TwoTermDiffAInf read_diff_ainf2(const json& dims, const json& maps, int max_dim) {
    AInf2 a = read_ainf2(dims, maps, max_dim);
    DiffOp2 d{read_lin(maps, "d0", a.a0(), a.a0()), read_lin(maps, "d1", a.a1(), a.a1()),
              read_multimap(maps, "d2", {a.a0(), a.a0()}, a.a1())};
    return TwoTermDiffAInf{std::move(a), std::move(d)};
}

inline Structure structure_from_json(const json& j, int max_dim);

inline Structure structure_from_json(const json& j, int max_dim) {
    if (!j.is_object())
        throw ParseError("structure file must be a JSON object");
    if (!j.contains("kind") || !j.at("kind").is_string())
        throw ParseError("missing 'kind'");
    if (!j.contains("version") || !j.at("version").is_number_integer() ||
        j.at("version").get<int>() != 1)
        throw ParseError("missing or unsupported 'version' (expected 1)");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "diff_morphism") {
        if (!j.contains("src") || !j.contains("dst") || !j.contains("maps"))
            throw ParseError("diff_morphism needs 'src', 'dst' and 'maps'");
        const Structure src = structure_from_json(j.at("src"), max_dim);
        const Structure dst = structure_from_json(j.at("dst"), max_dim);
        const auto* sx = std::get_if<TwoTermDiffAInf>(&src);
        const auto* dx = std::get_if<TwoTermDiffAInf>(&dst);
        if (!sx || !dx)
            throw ParseError("diff_morphism endpoints must be diff_ainf2 structures");
        const json& maps = j.at("maps");
        DiffAInf2Morphism mor{
            AInf2Morphism{read_lin(maps, "phi0", sx->ainf.a0(), dx->ainf.a0()),
                          read_lin(maps, "phi1", sx->ainf.a1(), dx->ainf.a1()),
                          read_multimap(maps, "phi2", {sx->ainf.a0(), sx->ainf.a0()}, dx->ainf.a1())},
            read_lin(maps, "phi3", sx->ainf.a0(), dx->ainf.a1())};
        return DiffMorphismFile{*sx, *dx, std::move(mor)};
    }
    if (!j.contains("dims") || !j.contains("maps"))
        throw ParseError("structure file needs 'dims' and 'maps'");
    const json& dims = j.at("dims");
    const json& maps = j.at("maps");
    if (kind == "algebra")
        return read_algebra(dims, maps, max_dim);
    if (kind == "diff_algebra")
        return read_diff_algebra(dims, maps, max_dim);
    if (kind == "diff_bimodule")
        return read_diff_bimodule(dims, maps, max_dim);
    if (kind == "ainf2")
        return read_ainf2(dims, maps, max_dim);
    if (kind == "diff_ainf2")
        return read_diff_ainf2(dims, maps, max_dim);
    if (kind == "cochain") {
        DiffBimoduleFile ctx = read_diff_bimodule(dims, maps, max_dim);
        if (!j.contains("degree") || !j.at("degree").is_number_integer())
            throw ParseError("cochain needs an integer 'degree'");
        const int degree = j.at("degree").get<int>();
        if (degree < 0 || degree > 5)
            throw ParseError("cochain degree must be between 0 and 5");
        const Space& a = ctx.da.alg.space;
        const Space& m = ctx.bm.bim.m;
        DiffCochain c;
        c.degree = degree;
        c.f = read_multimap(maps, "f", std::vector<Space>(static_cast<std::size_t>(degree), a), m);
        if (degree >= 1)
            c.chi = read_multimap(maps, "chi",
                                  std::vector<Space>(static_cast<std::size_t>(degree - 1), a), m);
        return CochainFile{std::move(ctx.da), std::move(ctx.bm), std::move(c)};
    }
    if (kind == "crossed_module") {
        const Space a(read_dim(dims, "A", max_dim), "A");
        const Space ap(read_dim(dims, "Ap", max_dim), "Ap");
        return CrossedModule{
            DifferenceAlgebra{AssocAlgebra{a, read_multimap(maps, "mult", {a, a}, a)},
                              read_lin(maps, "d", a, a)},
            DifferenceAlgebra{AssocAlgebra{ap, read_multimap(maps, "top_mult", {ap, ap}, ap)},
                              read_lin(maps, "top_d", ap, ap)},
            read_multimap(maps, "left", {a, ap}, ap), read_multimap(maps, "right", {ap, a}, ap),
            read_lin(maps, "partial", ap, a)};
    }
    if (kind == "hbimod" || kind == "diff_hbimod") {
        const Space a(read_dim(dims, "A", max_dim), "A");
        const Space m0(read_dim(dims, "M0", max_dim), "M0");
        const Space m1(read_dim(dims, "M1", max_dim), "M1");
        AssocAlgebra alg{a, read_multimap(maps, "mult", {a, a}, a)};
        HBimod2 h{m0,
                  m1,
                  read_lin(maps, "delta", m1, m0),
                  read_multimap(maps, "act_am0", {a, m0}, m0),
                  read_multimap(maps, "act_m0a", {m0, a}, m0),
                  read_multimap(maps, "act_am1", {a, m1}, m1),
                  read_multimap(maps, "act_m1a", {m1, a}, m1),
                  read_multimap(maps, "nu_aav", {a, a, m0}, m1),
                  read_multimap(maps, "nu_ava", {a, m0, a}, m1),
                  read_multimap(maps, "nu_vaa", {m0, a, a}, m1)};
        if (kind == "hbimod")
            return HBimodFile{std::move(alg), std::move(h)};
        DifferenceAlgebra da{std::move(alg), read_lin(maps, "d", a, a)};
        DiffHBimod2 dh{std::move(h), read_lin(maps, "Delta0", m0, m0),
                       read_lin(maps, "Delta1", m1, m1),
                       read_multimap(maps, "theta_am", {a, m0}, m1),
                       read_multimap(maps, "theta_ma", {m0, a}, m1)};
        return DiffHBimodFile{std::move(da), std::move(dh)};
    }
    if (kind == "diffass2") {
        const Space c0(read_dim(dims, "C0", max_dim), "C0");
        const Space c1(read_dim(dims, "C1", max_dim), "C1");
        return DiffAss2{TwoVec{c0, c1, read_lin(maps, "s", c1, c0), read_lin(maps, "t", c1, c0),
                               read_lin(maps, "i", c0, c1)},
                        read_multimap(maps, "bullet0", {c0, c0}, c0),
                        read_multimap(maps, "bullet1", {c1, c1}, c1),
                        read_multimap(maps, "assoc", {c0, c0, c0}, c1),
                        read_lin(maps, "D0", c0, c0), read_lin(maps, "D1", c1, c1),
                        read_multimap(maps, "Dnat", {c0, c0}, c1)};
    }
    throw ParseError("unknown structure kind '" + kind + "'");
}

} // namespace io_detail

inline std::string serialize(const Structure& s) {
    return io_detail::structure_json(s).dump(2) + "\n";
}

inline Structure parse_structure(const std::string& text, int max_dim = 16) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return io_detail::structure_from_json(j, max_dim);
}

} // namespace da2

#endif
