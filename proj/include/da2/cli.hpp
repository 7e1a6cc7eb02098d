#ifndef DA2_CLI_HPP
#define DA2_CLI_HPP

#include <da2/derived.hpp>
#include <da2/genkit.hpp>
#include <da2/io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace da2::cli {

// Exit codes: 0 pass, 1 identity violation / failed precondition, 2 parse or
// shape error, 3 internal-consistency failure (the mc cross-check; must never
// happen).
constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_parse = 2;
constexpr int exit_inconsistent = 3;

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot write '" + path + "'");
    out << text;
}

inline CheckReport check_structure(const Structure& s) {
    struct Visitor {
        CheckReport operator()(const AssocAlgebra& a) const { return check_associative(a); }
        CheckReport operator()(const DifferenceAlgebra& da) const {
            CheckReport r = check_associative(da.alg);
            r.merge(check_difference(da.alg, da.d));
            return r;
        }
        CheckReport operator()(const DiffBimoduleFile& f) const {
            CheckReport r = (*this)(f.da);
            r.merge(check_diff_bimodule(f.da, f.bm));
            return r;
        }
        CheckReport operator()(const AInf2& a) const { return check_ainf2(a); }
        CheckReport operator()(const TwoTermDiffAInf& x) const { return check_2term_diff_ainf(x); }
        CheckReport operator()(const DiffMorphismFile& f) const {
            CheckReport r = check_2term_diff_ainf(f.src);
            r.merge(check_2term_diff_ainf(f.dst));
            r.merge(check_diff_morphism(f.src, f.dst, f.mor));
            return r;
        }
        CheckReport operator()(const CochainFile& f) const {
            CheckReport r = (*this)(DiffBimoduleFile{f.da, f.bm});
            return r;
        }
        CheckReport operator()(const CrossedModule& cm) const { return check_crossed_module(cm); }
        CheckReport operator()(const HBimodFile& f) const {
            CheckReport r = check_associative(f.alg);
            r.merge(check_hbimod(f.alg, f.h));
            return r;
        }
        CheckReport operator()(const DiffHBimodFile& f) const {
            CheckReport r = (*this)(f.da);
            r.merge(check_diff_hbimod(f.da, f.dh));
            return r;
        }
        CheckReport operator()(const DiffAss2& c) const { return check_diffass2(c); }
    };
    return std::visit(Visitor{}, s);
}

inline nlohmann::ordered_json report_json(const CheckReport& rep) {
    nlohmann::ordered_json v = nlohmann::ordered_json::array();
    for (const Violation& x : rep.violations) {
        nlohmann::ordered_json e;
        e["tag"] = x.tag;
        e["indices"] = x.indices;
        e["lhs"] = x.lhs;
        e["rhs"] = x.rhs;
        v.push_back(std::move(e));
    }
    return v;
}

inline void print_report(std::ostream& out, const std::string& kind, const CheckReport& rep,
                         bool as_json, const std::string& extra_key = "",
                         const nlohmann::ordered_json& extra = {}) {
    if (as_json) {
        nlohmann::ordered_json j;
        j["kind"] = kind;
        j["valid"] = rep.ok();
        j["violations"] = report_json(rep);
        if (!extra_key.empty())
            j[extra_key] = extra;
        out << j.dump(2) << "\n";
        return;
    }
    out << "kind: " << kind << "\n";
    if (rep.ok()) {
        out << "result: OK\n";
    } else {
        out << "result: INVALID (" << rep.violations.size() << " violations)\n";
        std::size_t shown = 0;
        for (const Violation& v : rep.violations) {
            out << "  " << v.describe() << "\n";
            if (++shown == 20 && rep.violations.size() > 20) {
                out << "  ... " << (rep.violations.size() - 20) << " more\n";
                break;
            }
        }
    }
    if (!extra_key.empty())
        out << extra_key << ": " << extra.dump() << "\n";
}

// ---- the generator registry -------------------------------------------------

struct GenEntry {
    std::string name;
    std::function<Structure(std::uint64_t seed)> build;
};

inline std::vector<GenEntry> gen_registry() {
    std::vector<GenEntry> out;
    for (const NamedAlgebra& na : catalog_algebras())
        out.push_back({"algebra/" + na.name, [alg = na.alg](std::uint64_t) { return Structure{alg}; }});
    for (const NamedDiffAlgebra& nda : catalog_diff_algebras()) {
        out.push_back(
            {"diff-algebra/" + nda.name, [da = nda.da](std::uint64_t) { return Structure{da}; }});
        out.push_back({"diff-bimodule/regular/" + nda.name, [da = nda.da](std::uint64_t) {
                           return Structure{DiffBimoduleFile{da, regular_diff_bimodule(da)}};
                       }});
        out.push_back({"diff-bimodule/twisted/" + nda.name, [da = nda.da](std::uint64_t) {
                           return Structure{DiffBimoduleFile{da, twisted_regular_bimodule(da)}};
                       }});
        if (nda.da.alg.space.dim <= 4) {
            out.push_back({"cochain/random2/" + nda.name, [da = nda.da](std::uint64_t seed) {
                               Rng rng(seed);
                               const DiffBimodule bm = regular_diff_bimodule(da);
                               return Structure{CochainFile{da, bm, random_cochain(da, bm, 2, rng)}};
                           }});
            out.push_back({"cochain/cocycle3/" + nda.name, [da = nda.da](std::uint64_t seed) {
                               Rng rng(seed);
                               const DiffBimodule bm = regular_diff_bimodule(da);
                               return Structure{CochainFile{
                                   da, bm, diff_coboundary(da, bm, random_cochain(da, bm, 2, rng))}};
                           }});
            out.push_back({"diff-ainf2/skeletal/" + nda.name, [da = nda.da](std::uint64_t seed) {
                               return Structure{gen_skeletal(da, regular_diff_bimodule(da), seed)};
                           }});
            out.push_back({"diff-ainf2/semidirect/" + nda.name, [da = nda.da](std::uint64_t seed) {
                               return Structure{semidirect_diff(da, skeletal_diff_hbimod(da, seed))};
                           }});
            out.push_back({"diff-hbimod/strict/" + nda.name, [da = nda.da](std::uint64_t) {
                               return Structure{DiffHBimodFile{da, strict_diff_hbimod(da)}};
                           }});
            out.push_back({"diff-hbimod/skeletal/" + nda.name, [da = nda.da](std::uint64_t seed) {
                               return Structure{DiffHBimodFile{da, skeletal_diff_hbimod(da, seed)}};
                           }});
            out.push_back({"diffass2/T-skeletal/" + nda.name, [da = nda.da](std::uint64_t seed) {
                               return Structure{
                                   functor_T(gen_skeletal(da, regular_diff_bimodule(da), seed))};
                           }});
            out.push_back({"diffass2/semidirect/" + nda.name, [da = nda.da](std::uint64_t seed) {
                               return Structure{semidirect_2alg(da, skeletal_diff_hbimod(da, seed))};
                           }});
        }
    }
    for (const NamedAlgebra& na : catalog_algebras()) {
        out.push_back({"hbimod/strict/" + na.name, [alg = na.alg](std::uint64_t) {
                           return Structure{HBimodFile{alg, strict_hbimod(alg)}};
                       }});
        out.push_back({"hbimod/m1zero/" + na.name, [alg = na.alg](std::uint64_t) {
                           return Structure{HBimodFile{alg, m1zero_hbimod(alg)}};
                       }});
        out.push_back({"hbimod/skeletal/" + na.name, [alg = na.alg](std::uint64_t seed) {
                           return Structure{HBimodFile{alg, skeletal_hbimod(alg, seed)}};
                       }});
        out.push_back({"ainf2/semidirect/" + na.name, [alg = na.alg](std::uint64_t seed) {
                           return Structure{semidirect_ainf2(alg, skeletal_hbimod(alg, seed))};
                       }});
    }
    for (const NamedCrossedModule& ncm : catalog_crossed_modules()) {
        out.push_back(
            {"crossed-module/" + ncm.name, [cm = ncm.cm](std::uint64_t) { return Structure{cm}; }});
        out.push_back({"diff-ainf2/strict/" + ncm.name,
                       [cm = ncm.cm](std::uint64_t) { return Structure{crossed_to_strict(cm)}; }});
    }
    for (const NamedAlgebra& na : catalog_algebras()) {
        if (na.alg.space.dim > 4)
            continue;
        out.push_back({"diff-morphism/gauge/" + na.name, [alg = na.alg](std::uint64_t seed) {
                           const DifferenceAlgebra da{alg, zero_lin(alg.space, alg.space)};
                           const TwoTermDiffAInf x =
                               gen_skeletal(da, regular_diff_bimodule(da), seed);
                           return Structure{DiffMorphismFile{x, x, gauge_endomorphism(x, seed + 1)}};
                       }});
    }
    return out;
}

// ---- subcommand bodies --------------------------------------------------------

inline int do_check(const std::string& path, bool as_json, int max_dim, std::ostream& out) {
    const Structure s = parse_structure(read_file(path), max_dim);
    const CheckReport rep = check_structure(s);
    if (const auto* cf = std::get_if<CochainFile>(&s); cf && rep.ok()) {
        nlohmann::ordered_json extra = is_cocycle(cf->da, cf->bm, cf->c);
        print_report(out, kind_of(s), rep, as_json, "cocycle", extra);
    } else {
        print_report(out, kind_of(s), rep, as_json);
    }
    return rep.ok() ? exit_ok : exit_invalid;
}

inline int do_convert(const std::string& path, bool to_2alg, bool to_ainf, const std::string& out_path,
                      bool as_json, int max_dim, std::ostream& out) {
    if (to_2alg == to_ainf)
        throw ParseError("convert needs exactly one of --to-2alg / --to-ainf");
    const Structure s = parse_structure(read_file(path), max_dim);
    const CheckReport rep = check_structure(s);
    if (!rep.ok()) {
        print_report(out, kind_of(s), rep, as_json);
        return exit_invalid;
    }
    std::string note;
    Structure converted = s;
    if (to_2alg) {
        const auto* x = std::get_if<TwoTermDiffAInf>(&s);
        if (!x)
            throw ParseError("--to-2alg expects a diff_ainf2 file");
        const DiffAss2 c = functor_T(*x);
        converted = c;
        note = functor_S(c) == *x ? "round trip S(T(x)) = x: exact (beta)"
                                  : "round trip S(T(x)) differs (unexpected)";
        if (functor_S(c) != *x)
            return exit_inconsistent;
    } else {
        const auto* c = std::get_if<DiffAss2>(&s);
        if (!c)
            throw ParseError("--to-ainf expects a diffass2 file");
        const TwoTermDiffAInf x = functor_S(*c);
        converted = x;
        const DiffAss2 ts = functor_T(x);
        const DiffAss2Morphism a = alpha_iso(*c);
        const DiffAss2Morphism ainv = alpha_iso_inverse(*c);
        const bool iso_ok = check_diffass2_morphism(ts, *c, a).ok() &&
                            check_diffass2_morphism(*c, ts, ainv).ok() &&
                            compose_diffass2_morphism(*c, a, ainv) == identity_diffass2_morphism(*c) &&
                            compose_diffass2_morphism(ts, ainv, a) == identity_diffass2_morphism(ts);
        note = iso_ok ? "round trip T(S(C)): isomorphic to C via alpha (verified)"
                      : "round trip T(S(C)): alpha failed (unexpected)";
        if (!iso_ok)
            return exit_inconsistent;
    }
    write_file(out_path, serialize(converted));
    if (as_json) {
        nlohmann::ordered_json j;
        j["input_kind"] = kind_of(s);
        j["output_kind"] = kind_of(converted);
        j["output"] = out_path;
        j["round_trip"] = note;
        out << j.dump(2) << "\n";
    } else {
        out << "wrote " << kind_of(converted) << " to " << out_path << "\n" << note << "\n";
    }
    return exit_ok;
}

inline int do_construct(const std::string& what, const std::string& path, const std::string& out_path,
                        bool as_json, int max_dim, std::ostream& out) {
    const Structure s = parse_structure(read_file(path), max_dim);
    Structure built = s;
    try {
        if (what == "from-cocycle") {
            const auto* cf = std::get_if<CochainFile>(&s);
            if (!cf)
                throw ParseError("from-cocycle expects a cochain file");
            if (cf->c.degree != 3)
                throw ValidationError("from-cocycle: the cochain must have degree 3");
            built = cocycle_to_skeletal(cf->da, cf->bm, cf->c.f, *cf->c.chi);
        } else if (what == "from-crossed-module") {
            const auto* cm = std::get_if<CrossedModule>(&s);
            if (!cm)
                throw ParseError("from-crossed-module expects a crossed_module file");
            built = crossed_to_strict(*cm);
        } else if (what == "semidirect") {
            const auto* hf = std::get_if<HBimodFile>(&s);
            if (!hf)
                throw ParseError("semidirect expects an hbimod file");
            built = semidirect_ainf2(hf->alg, hf->h);
        } else if (what == "semidirect-diff") {
            const auto* df = std::get_if<DiffHBimodFile>(&s);
            if (!df)
                throw ParseError("semidirect-diff expects a diff_hbimod file");
            built = semidirect_diff(df->da, df->dh);
        } else {
            throw ParseError("unknown construct target '" + what + "'");
        }
    } catch (const ValidationError& e) {
        if (as_json) {
            nlohmann::ordered_json j;
            j["error"] = e.what();
            out << j.dump(2) << "\n";
        } else {
            out << "construct failed: " << e.what() << "\n";
        }
        return exit_invalid;
    }
    write_file(out_path, serialize(built));
    nlohmann::ordered_json extra;
    if (const auto* x = std::get_if<TwoTermDiffAInf>(&built)) {
        extra["skeletal"] = is_skeletal(*x);
        extra["strict"] = is_strict(*x);
    }
    if (as_json) {
        nlohmann::ordered_json j;
        j["output_kind"] = kind_of(built);
        j["output"] = out_path;
        if (!extra.empty())
            j["flags"] = extra;
        out << j.dump(2) << "\n";
    } else {
        out << "wrote " << kind_of(built) << " to " << out_path << "\n";
        if (!extra.empty())
            out << "flags: " << extra.dump() << "\n";
    }
    return exit_ok;
}

inline int do_mc(const std::string& path, bool as_json, int max_dim, std::ostream& out) {
    const Structure s = parse_structure(read_file(path), max_dim);
    const auto* da = std::get_if<DifferenceAlgebra>(&s);
    if (!da)
        throw ParseError("mc expects a diff_algebra file");
    const CheckReport assoc = check_associative(da->alg);
    if (!assoc.ok()) {
        print_report(out, kind_of(s), assoc, as_json);
        return exit_invalid;
    }
    const bool identity_ok = check_difference(da->alg, da->d).ok();
    const bool graph_ok = graph_subalgebra_check(da->alg, da->d);
    const MultiMap residual = mc_residual(da->alg, da->d);
    const bool mc_ok = is_zero(residual);
    nlohmann::ordered_json j;
    j["difference_identity"] = identity_ok ? "pass" : "fail";
    j["graph_subalgebra"] = graph_ok ? "pass" : "fail";
    j["maurer_cartan"] = mc_ok ? "pass" : "fail";
    if (!mc_ok)
        j["mc_residual"] = io_detail::to_json(residual);
    if (as_json)
        out << j.dump(2) << "\n";
    else
        for (auto& [k, v] : j.items())
            out << k << ": " << v.dump() << "\n";
    if (identity_ok != graph_ok || graph_ok != mc_ok) {
        out << "internal consistency failure: the three checks disagree\n";
        return exit_inconsistent;
    }
    return identity_ok ? exit_ok : exit_invalid;
}

inline int do_gen(const std::string& name, const std::string& out_path, bool list, std::uint64_t seed,
                  int max_dim, std::ostream& out) {
    const std::vector<GenEntry> reg = gen_registry();
    if (list) {
        for (const GenEntry& e : reg)
            out << e.name << "\n";
        return exit_ok;
    }
    for (const GenEntry& e : reg) {
        if (e.name != name)
            continue;
        const Structure s = e.build(seed);
        const std::string text = serialize(s);
        // honor --max-dim on output too
        (void)parse_structure(text, max_dim);
        if (out_path.empty())
            out << text;
        else
            write_file(out_path, text);
        return exit_ok;
    }
    throw ParseError("unknown generator '" + name + "' (use gen --list)");
}

inline int do_roundtrip(const std::string& path, bool as_json, int max_dim, std::ostream& out) {
    const Structure s = parse_structure(read_file(path), max_dim);
    const CheckReport rep = check_structure(s);
    if (!rep.ok()) {
        print_report(out, kind_of(s), rep, as_json);
        return exit_invalid;
    }
    nlohmann::ordered_json results = nlohmann::ordered_json::object();
    bool all_ok = true;
    auto record = [&](const std::string& name, bool ok) {
        results[name] = ok ? "exact" : "MISMATCH";
        all_ok = all_ok && ok;
    };
    if (const auto* x = std::get_if<TwoTermDiffAInf>(&s)) {
        record("S(T(x)) = x", functor_S(functor_T(*x)) == *x);
        if (is_skeletal(*x)) {
            const SkeletalData data = skeletal_to_cocycle(*x);
            record("cocycle_to_skeletal(skeletal_to_cocycle(x)) = x",
                   cocycle_to_skeletal(data.da, data.bm, data.mu, data.chi) == *x);
        }
        if (is_strict(*x))
            record("crossed_to_strict(strict_to_crossed(x)) = x",
                   crossed_to_strict(strict_to_crossed(*x)) == *x);
    } else if (const auto* c = std::get_if<DiffAss2>(&s)) {
        const TwoTermDiffAInf x = functor_S(*c);
        const DiffAss2 ts = functor_T(x);
        record("S(C) valid", check_2term_diff_ainf(x).ok());
        record("alpha morphism valid", check_diffass2_morphism(ts, *c, alpha_iso(*c)).ok());
        record("alpha o alpha^-1 = id",
               compose_diffass2_morphism(*c, alpha_iso(*c), alpha_iso_inverse(*c)) ==
                   identity_diffass2_morphism(*c));
        record("alpha^-1 o alpha = id",
               compose_diffass2_morphism(ts, alpha_iso_inverse(*c), alpha_iso(*c)) ==
                   identity_diffass2_morphism(ts));
    } else if (const auto* cm = std::get_if<CrossedModule>(&s)) {
        record("strict_to_crossed(crossed_to_strict(cm)) = cm",
               strict_to_crossed(crossed_to_strict(*cm)) == *cm);
    } else if (const auto* cf = std::get_if<CochainFile>(&s)) {
        if (cf->c.degree != 3 || !is_cocycle(cf->da, cf->bm, cf->c))
            throw ValidationError("roundtrip on a cochain needs a degree-3 cocycle");
        const TwoTermDiffAInf x = cocycle_to_skeletal(cf->da, cf->bm, cf->c.f, *cf->c.chi);
        const SkeletalData data = skeletal_to_cocycle(x);
        record("skeletal_to_cocycle(cocycle_to_skeletal(c)) = c",
               data.mu == cf->c.f && data.chi == *cf->c.chi);
    } else {
        throw ParseError("roundtrip supports diff_ainf2, diffass2, crossed_module and cochain files");
    }
    if (as_json) {
        nlohmann::ordered_json j;
        j["kind"] = kind_of(s);
        j["roundtrips"] = results;
        out << j.dump(2) << "\n";
    } else {
        out << "kind: " << kind_of(s) << "\n";
        for (auto& [k, v] : results.items())
            out << k << ": " << v.get<std::string>() << "\n";
    }
    return all_ok ? exit_ok : exit_invalid;
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"exact checker and converter for difference algebras, 2-term difference "
                 "A-infinity algebras and difference associative 2-algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    std::uint64_t seed = 1;
    int max_dim = 16;
    app.add_flag("--json", as_json, "machine-readable reports");
    app.add_option("--seed", seed, "seed for generated structures");
    app.add_option("--max-dim", max_dim, "largest accepted space dimension");

    std::string path, out_path, gen_name, construct_what;
    bool to_2alg = false, to_ainf = false, gen_list = false;

    CLI::App* check = app.add_subcommand("check", "validate a structure file");
    check->add_option("file", path)->required();

    CLI::App* convert = app.add_subcommand("convert", "apply the equivalence functors S / T");
    convert->add_option("file", path)->required();
    convert->add_flag("--to-2alg", to_2alg, "diff_ainf2 -> diffass2 (functor T)");
    convert->add_flag("--to-ainf", to_ainf, "diffass2 -> diff_ainf2 (functor S)");
    convert->add_option("-o,--output", out_path)->required();

    CLI::App* construct = app.add_subcommand("construct", "build structures from input data");
    construct->add_option("what", construct_what,
                          "from-cocycle | semidirect | from-crossed-module | semidirect-diff")
        ->required();
    construct->add_option("file", path)->required();
    construct->add_option("-o,--output", out_path)->required();

    CLI::App* mc = app.add_subcommand("mc", "difference identity, graph and Maurer-Cartan checks");
    mc->add_option("file", path)->required();

    CLI::App* gen = app.add_subcommand("gen", "emit catalog instances");
    gen->add_option("name", gen_name);
    gen->add_flag("--list", gen_list, "list generator names");
    gen->add_option("-o,--output", out_path);

    CLI::App* roundtrip = app.add_subcommand("roundtrip", "verify the structural round trips");
    roundtrip->add_option("file", path)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return exit_ok;
        }
        out << "usage error: " << e.what() << "\n";
        return exit_parse;
    }

    try {
        if (check->parsed())
            return detail::do_check(path, as_json, max_dim, out);
        if (convert->parsed())
            return detail::do_convert(path, to_2alg, to_ainf, out_path, as_json, max_dim, out);
        if (construct->parsed())
            return detail::do_construct(construct_what, path, out_path, as_json, max_dim, out);
        if (mc->parsed())
            return detail::do_mc(path, as_json, max_dim, out);
        if (gen->parsed()) {
            if (!gen_list && gen_name.empty())
                throw ParseError("gen needs a name or --list");
            return detail::do_gen(gen_name, out_path, gen_list, seed, max_dim, out);
        }
        if (roundtrip->parsed())
            return detail::do_roundtrip(path, as_json, max_dim, out);
    } catch (const ParseError& e) {
        out << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const ShapeError& e) {
        out << "shape error: " << e.what() << "\n";
        return exit_parse;
    } catch (const ValidationError& e) {
        out << "validation error: " << e.what() << "\n";
        return exit_invalid;
    }
    return exit_parse;
}

} // namespace da2::cli

#endif
