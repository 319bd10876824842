#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "burnside/json_io.hpp"

using namespace burnside;
using io::json;

namespace {

const std::string kBin = BURNSIDE_CLI_BIN;
const std::string kData = BURNSIDE_DATA_DIR;

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string out_path = std::string(std::tmpnam(nullptr)) + ".out";
    std::string cmd = kBin + " " + args + " > " + out_path + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    std::ifstream f(out_path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    std::remove(out_path.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return RunResult{code, ss.str()};
}

}  // namespace

TEST_CASE("group and marks commands") {
    RunResult g = run("group S3");
    CHECK(g.code == 0);
    CHECK(g.out.find("order 6") != std::string::npos);
    CHECK(g.out.find("classes 4") != std::string::npos);

    RunResult trivial = run("group C1");
    CHECK(trivial.code == 0);
    CHECK(trivial.out.find("classes 1") != std::string::npos);

    RunResult c12 = run("group \"cyclic(12)\" --format json");
    CHECK(c12.code == 0);
    json j = json::parse(c12.out);
    CHECK(j["classes"].size() == 6);

    RunResult m = run("marks C2 --format json");
    CHECK(m.code == 0);
    json jm = json::parse(m.out);
    IntMatrix marks = io::matrix_from_json(jm["marks"]);
    CHECK(marks.at(0, 0) == 2);
    CHECK(marks.at(1, 0) == 1);
    CHECK(marks.at(1, 1) == 1);

    // triangularity of a bigger table
    RunResult s4 = run("marks S4 --format json");
    IntMatrix ms4 = io::matrix_from_json(json::parse(s4.out)["marks"]);
    for (size_t i = 0; i < ms4.rows(); ++i)
        for (size_t j = i + 1; j < ms4.cols(); ++j) CHECK(ms4.at(i, j) == 0);
}

TEST_CASE("exit codes: verdicts and input errors") {
    CHECK(run("check C5 " + kData + "/ghost_c5_reject.json").code == 1);
    CHECK(run("check S3 " + kData + "/ghost_s3_member.json").code == 0);
    CHECK(run("check S3 /nonexistent.json").code == 2);
    CHECK(run("group frobnicate").code == 2);
    CHECK(run("group C5000").code == 2);
    CHECK(run("covariant " + kData + "/fusion_dinfinity.json " + kData +
              "/covariant_dinfinity_ok.json")
              .code == 0);
    CHECK(run("covariant " + kData + "/fusion_dinfinity.json " + kData +
              "/covariant_dinfinity_bad.json")
              .code == 1);
}

TEST_CASE("check reports the preimage element") {
    RunResult r = run("check S3 " + kData + "/ghost_s3_member.json --format json");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["member"] == true);
    CHECK(j["element"]["coeffs"] == json::array({0, 1, 0, 0}));
}

TEST_CASE("euler and lefschetz on the shipped circle") {
    RunResult e = run("euler " + kData + "/complex_c2_circle.json --format json");
    CHECK(e.code == 0);
    json je = json::parse(e.out);
    CHECK(je["euler_class"]["coeffs"] == json::array({-1, 2}));
    CHECK(je["fixed_euler_numbers"]["values"] == json::array({0, 2}));

    RunResult l = run("lefschetz " + kData + "/package_c2_circle.json --complex " + kData +
                      "/complex_c2_circle.json --format json");
    CHECK(l.code == 0);
    json jl = json::parse(l.out);
    // the package swaps the two fixed points: Lambda = -[G/1] + 0 [G/G]
    CHECK(jl["lefschetz_class"]["coeffs"] == json::array({-1, 0}));
}

TEST_CASE("limit command on shipped diagrams") {
    RunResult star = run("limit " + kData + "/diagram_star_c2_c2.json --format json");
    CHECK(star.code == 0);
    json js = json::parse(star.out);
    CHECK(js["rank"] == 3);
    CHECK(js["subring"] == true);

    RunResult tower = run("limit " + kData + "/diagram_prufer_p2_n3.json --format json");
    CHECK(tower.code == 0);
    json jt = json::parse(tower.out);
    CHECK(jt["rank"] == 4);
    IntMatrix basis = io::matrix_from_json(jt["basis"]);
    CHECK(basis.rows() == 4);
}

TEST_CASE("covariant certificate matches the extension shape") {
    RunResult r = run("covariant " + kData + "/fusion_ext_z2_by_c3.json --format json");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["character_table"][0][1] == "1/3");
    CHECK(j["character_table"][1][1] == "1");
    CHECK(j["character_table"][1][2] == "0");
}

TEST_CASE("completion and artin commands") {
    RunResult c = run("completion C2 3 --format json");
    CHECK(c.code == 0);
    json j = json::parse(c.out);
    CHECK(j["stages"][2]["invariant_factors"] == json::array({4, 0}));

    CHECK(run("artin S4").code == 0);
    CHECK(run("artin C12").code == 0);
}

TEST_CASE("outputs are byte-identical across runs") {
    for (const std::string& args :
         {std::string("marks S4 --format json"), std::string("group D6"),
          std::string("limit " + kData + "/diagram_star_c2_c2.json --format json"),
          std::string("covariant " + kData + "/fusion_dinfinity.json " + kData +
                      "/covariant_dinfinity_ok.json --format json")}) {
        RunResult a = run(args), b = run(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}

TEST_CASE("json round trips") {
    // matrices
    IntMatrix m(2, 3);
    m.at(0, 0) = Int("123456789012345678901234567890");
    m.at(1, 2) = -7;
    CHECK(io::matrix_from_json(io::matrix_to_json(m)) == m);

    // group specs through files and back
    GroupSpec s;
    s.kind = GroupSpec::Kind::product;
    GroupSpec a, b;
    a.kind = GroupSpec::Kind::named;
    a.name = "C2";
    b.kind = GroupSpec::Kind::perm;
    b.degree = 3;
    b.generators = {{{0, 1}}, {{0, 1, 2}}};
    s.factors = {a, b};
    GroupSpec back = io::group_spec_from_json(io::group_spec_to_json(s));
    CHECK(build_group(back)->order() == build_group(s)->order());

    // complexes
    auto r = BurnsideRing::cached(named_group("S3"));
    GCWComplex x = make_complex(r, {GCWCell{0, 2}, GCWCell{1, 0}}, "demo");
    GCWComplex xa = io::complex_from_json(io::complex_to_json(x));
    CHECK(euler_class(xa).coeffs == euler_class(x).coeffs);

    // label structures validate against the shipped tower diagram
    SubFinDiagram tower =
        io::diagram_from_json(io::load_file(kData + "/diagram_prufer_p2_n3.json"));
    CcsfStructure ccsf =
        io::ccsf_from_json(io::load_file(kData + "/ccsf_prufer_p2_n3.json"));
    validate_ccsf(tower, ccsf);
    LabelProfile constant{{0, 2}, {1, 2}, {2, 2}, {3, 2}};
    CHECK(condition_C(tower, ccsf, constant, 3));
    LabelProfile jump{{0, 0}, {1, 1}, {2, 1}, {3, 1}};
    CHECK_FALSE(condition_C(tower, ccsf, jump, 3));

    // rationals
    CHECK(io::rat_to_string(io::rat_from_string("-6/4")) == "-3/2");
}
