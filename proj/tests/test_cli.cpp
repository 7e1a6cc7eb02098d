#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <da2/cli.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace da2;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() / ("da2test-" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~TempDir() { std::error_code ec; fs::remove_all(dir, ec); }
    std::string file(const std::string& name) const { return (dir / name).string(); }
};

int run_cli(const std::vector<std::string>& args, std::string* output = nullptr) {
    std::ostringstream os;
    const int rc = cli::run(args, os);
    if (output)
        *output = os.str();
    return rc;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

} // namespace

TEST_CASE("serialization round trip is the identity for every kind") {
    std::vector<std::string> names;
    for (const cli::detail::GenEntry& e : cli::detail::gen_registry())
        names.push_back(e.name);
    // one representative per kind
    const std::vector<std::string> picks{
        "algebra/dual",           "diff-algebra/dual/d1",       "diff-bimodule/twisted/dual/d1",
        "ainf2/semidirect/dual",  "diff-ainf2/skeletal/dual/d1", "diff-morphism/gauge/dual",
        "cochain/cocycle3/dual/d1", "crossed-module/ut2-ideal",  "hbimod/skeletal/ut2",
        "diff-hbimod/skeletal/dual/d1", "diffass2/semidirect/dual/d1"};
    for (const std::string& pick : picks) {
        INFO(pick);
        CHECK(std::find(names.begin(), names.end(), pick) != names.end());
        for (const cli::detail::GenEntry& e : cli::detail::gen_registry())
            if (e.name == pick) {
                const Structure s = e.build(5);
                const std::string text = serialize(s);
                const Structure back = parse_structure(text);
                CHECK(serialize(back) == text);
            }
    }
}

TEST_CASE("check: exit codes follow the checker verdicts") {
    TempDir td;
    const std::string good = td.file("good.json");
    REQUIRE(run_cli({"gen", "diff-ainf2/skeletal/qc2/d1", "--seed", "3", "-o", good}) == 0);
    CHECK(run_cli({"check", good}) == 0);

    // perturb one mu coefficient: exit 1 and the (A8) tag in the report
    Structure s = parse_structure(slurp(good));
    auto& x = std::get<TwoTermDiffAInf>(s);
    x.ainf.mu.a[0] += 1;
    const std::string bad = td.file("bad.json");
    spit(bad, serialize(s));
    std::string out;
    CHECK(run_cli({"check", bad}, &out) == 1);
    CHECK(out.find("(A8)") != std::string::npos);

    std::string json_out;
    CHECK(run_cli({"check", bad, "--json"}, &json_out) == 1);
    CHECK(json_out.find("\"valid\": false") != std::string::npos);

    // malformed rational
    const std::string malformed = td.file("malformed.json");
    spit(malformed,
         R"({"kind":"algebra","version":1,"dims":{"A":1},"maps":{"mult":[[[0,0,0],"1/0"]]}})");
    CHECK(run_cli({"check", malformed}) == 2);

    // not JSON at all
    const std::string garbage = td.file("garbage.json");
    spit(garbage, "not json");
    CHECK(run_cli({"check", garbage}) == 2);

    // index out of range
    const std::string oor = td.file("oor.json");
    spit(oor, R"({"kind":"algebra","version":1,"dims":{"A":1},"maps":{"mult":[[[0,0,5],"1"]]}})");
    CHECK(run_cli({"check", oor}) == 2);

    // unknown kind and missing version
    const std::string unk = td.file("unk.json");
    spit(unk, R"({"kind":"mystery","version":1,"dims":{},"maps":{}})");
    CHECK(run_cli({"check", unk}) == 2);
    const std::string nover = td.file("nover.json");
    spit(nover, R"({"kind":"algebra","dims":{"A":1},"maps":{}})");
    CHECK(run_cli({"check", nover}) == 2);

    // max-dim guard
    CHECK(run_cli({"check", good, "--max-dim", "1"}) == 2);
}

TEST_CASE("convert: functors with byte-identical round trip") {
    TempDir td;
    const std::string src = td.file("x.json");
    REQUIRE(run_cli({"gen", "diff-ainf2/semidirect/dual/d2", "--seed", "9", "-o", src}) == 0);
    const std::string c2 = td.file("c2.json");
    std::string out;
    CHECK(run_cli({"convert", src, "--to-2alg", "-o", c2}, &out) == 0);
    CHECK(out.find("exact (beta)") != std::string::npos);
    const std::string back = td.file("back.json");
    CHECK(run_cli({"convert", c2, "--to-ainf", "-o", back}, &out) == 0);
    CHECK(out.find("alpha") != std::string::npos);
    CHECK(slurp(back) == slurp(src));

    // converting an invalid file fails with exit 1
    Structure s = parse_structure(slurp(src));
    std::get<TwoTermDiffAInf>(s).dop.d2.a[1] += 1;
    const std::string bad = td.file("badx.json");
    spit(bad, serialize(s));
    CHECK(run_cli({"convert", bad, "--to-2alg", "-o", td.file("nope.json")}) == 1);

    // flag misuse is a usage error
    CHECK(run_cli({"convert", src, "-o", td.file("nope2.json")}) == 2);
}

TEST_CASE("construct: the four constructions") {
    TempDir td;
    std::string out;

    const std::string coc = td.file("coc.json");
    REQUIRE(run_cli({"gen", "cochain/cocycle3/ut2/d1", "--seed", "11", "-o", coc}) == 0);
    const std::string skel = td.file("skel.json");
    CHECK(run_cli({"construct", "from-cocycle", coc, "-o", skel}, &out) == 0);
    CHECK(out.find("\"skeletal\":true") != std::string::npos);
    CHECK(run_cli({"check", skel}) == 0);

    // a non-cocycle cochain is refused with exit 1
    const std::string c2 = td.file("c2.json");
    REQUIRE(run_cli({"gen", "cochain/random2/ut2/d1", "--seed", "11", "-o", c2}) == 0);
    CHECK(run_cli({"construct", "from-cocycle", c2, "-o", td.file("no.json")}) == 1);

    const std::string cm = td.file("cm.json");
    REQUIRE(run_cli({"gen", "crossed-module/id/qc2/d1", "-o", cm}) == 0);
    const std::string strict = td.file("strict.json");
    CHECK(run_cli({"construct", "from-crossed-module", cm, "-o", strict}, &out) == 0);
    CHECK(out.find("\"strict\":true") != std::string::npos);
    CHECK(run_cli({"check", strict}) == 0);

    const std::string hb = td.file("hb.json");
    REQUIRE(run_cli({"gen", "hbimod/skeletal/dual", "--seed", "13", "-o", hb}) == 0);
    CHECK(run_cli({"construct", "semidirect", hb, "-o", td.file("sd.json")}) == 0);
    CHECK(run_cli({"check", td.file("sd.json")}) == 0);

    const std::string dhb = td.file("dhb.json");
    REQUIRE(run_cli({"gen", "diff-hbimod/strict/qc2/d1", "-o", dhb}) == 0);
    CHECK(run_cli({"construct", "semidirect-diff", dhb, "-o", td.file("sdd.json")}, &out) == 0);
    CHECK(out.find("\"strict\":true") != std::string::npos);

    // an invalid homotopy bimodule is refused with the failing precondition
    Structure s = parse_structure(slurp(dhb));
    std::get<DiffHBimodFile>(s).dh.theta_am.a[0] += 1;
    const std::string badhb = td.file("badhb.json");
    spit(badhb, serialize(s));
    CHECK(run_cli({"construct", "semidirect-diff", badhb, "-o", td.file("no2.json")}, &out) == 1);
    CHECK(out.find("(condi") != std::string::npos);
}

TEST_CASE("mc: verdict triple and exit codes") {
    TempDir td;
    std::string out;
    const std::string good = td.file("da.json");
    REQUIRE(run_cli({"gen", "diff-algebra/m2/d3", "-o", good}) == 0);
    CHECK(run_cli({"mc", good}, &out) == 0);
    CHECK(out.find("\"pass\"") != std::string::npos);
    CHECK(out.find("\"fail\"") == std::string::npos);

    // invalid d: three consistent "fail" verdicts, nonzero residual printed
    Structure s = parse_structure(slurp(good));
    auto& da = std::get<DifferenceAlgebra>(s);
    da.d.a[1] += 1;
    REQUIRE_FALSE(check_difference(da.alg, da.d).ok());
    const std::string bad = td.file("bad_da.json");
    spit(bad, serialize(s));
    CHECK(run_cli({"mc", bad}, &out) == 1);
    CHECK(out.find("mc_residual") != std::string::npos);
    CHECK(out.find("\"pass\"") == std::string::npos);
}

TEST_CASE("roundtrip subcommand") {
    TempDir td;
    std::string out;
    for (const char* name : {"diff-ainf2/skeletal/dual/d2", "diff-ainf2/strict/id/qc2/d1",
                             "diffass2/semidirect/qc2/d1", "crossed-module/zero-partial/dual/d1",
                             "cochain/cocycle3/qc2/d1"}) {
        const std::string f = td.file("rt.json");
        REQUIRE(run_cli({"gen", name, "--seed", "15", "-o", f}) == 0);
        INFO(name);
        CHECK(run_cli({"roundtrip", f}, &out) == 0);
        CHECK(out.find("MISMATCH") == std::string::npos);
    }
}

TEST_CASE("gen: list, unknown names, stdout output") {
    std::string out;
    CHECK(run_cli({"gen", "--list"}, &out) == 0);
    CHECK(out.find("diff-ainf2/skeletal/m2/d0") != std::string::npos);
    CHECK(run_cli({"gen", "no/such/thing"}, &out) == 2);
    CHECK(run_cli({"gen", "algebra/q"}, &out) == 0);
    CHECK(out.find("\"kind\": \"algebra\"") != std::string::npos);
}
