#include "test_support.hpp"

#include <sstream>

#include "branchkit/cli.hpp"
#include "branchkit/json_io.hpp"
#include "branchkit/res_image.hpp"

using namespace branchkit;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

Json json_of(const Run& r) { return Json::parse(r.out); }

}  // namespace

TEST_CASE("branch") {
    auto r = run({"branch", "--family", "su:2,1", "--weight", "1,0|0"});
    REQUIRE(r.code == 0);
    auto j = json_of(r);
    CHECK(j["raw"].size() == 2);
    CHECK(j["raw"][0]["label"] == Json::parse(R"({"mu1":[1],"mu2":[],"p":0})"));
    CHECK(j["raw"][1]["label"] == Json::parse(R"({"mu1":[0],"mu2":[],"p":1})"));
    CHECK(j["terms"].size() == 2);

    auto t = run({"branch", "--family", "su:2,1", "--weight", "1,0|0", "--format", "tsv"});
    CHECK(t.out == "0:-2\t1\n0:1\t1\n");
}

TEST_CASE("good") {
    auto g = run({"good", "--family", "soe:2", "--weight", "p=2;1,1"});
    CHECK(g.code == 0);
    CHECK(json_of(g)["verdict"] == "good");

    auto n = run({"good", "--family", "su:3,2", "--weight", "0,0,0|0,0"});
    CHECK(n.code == 1);
    auto j = json_of(n);
    CHECK(j["verdict"] == "notgood");
    CHECK(j["key"] == 1);
    CHECK(j["certificate"]["value"] == 6);
}

TEST_CASE("usage errors name the token") {
    auto r = run({"good", "--family", "su:3,2", "--weight", "0,x,0|0,0"});
    CHECK(r.code == 2);
    CHECK(r.err.find("'x'") != std::string::npos);
    CHECK(run({"good", "--family", "su:3", "--weight", "0"}).code == 2);
    CHECK(run({"branch", "--family", "soe:2", "--weight", "1,1"}).code == 2);
    CHECK(run({"branch", "--family", "sostar:4", "--weight", "0,1,0,0"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"branch", "--family", "su:2,1", "--weight", "1,0|0", "--bogus"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("resource cap") {
    clear_lattice_cache();
    auto r = run({"member", "--family", "su:3,2", "--label", "1,0|0|0", "--radius", "3", "--max-generators", "10"});
    CHECK(r.code == 3);
    unsetenv("BRANCHKIT_MAX_GENERATORS");
}

TEST_CASE("member, preimage, invariant") {
    auto m = run({"member", "--family", "soe:3", "--target", "q=1;1,1 + q=-1;1,-1"});
    CHECK(m.code == 0);
    CHECK(json_of(m)["status"] == "member");
    auto nm = run({"member", "--family", "soe:3", "--label", "q=0;1,1"});
    CHECK(nm.code == 1);
    CHECK(json_of(nm)["certificate"]["parity"] == 0);

    auto p = run({"preimage", "--family", "su:3,1", "--label", "1,0||0"});
    CHECK(p.code == 0);
    CHECK(json_of(p)["round_trip"] == true);

    auto i = run({"invariant", "--family", "su:3,2", "--label", "1,0|0|0"});
    CHECK(json_of(i)["I"] == 2);

    auto js = run({"member", "--family", "su:2,1", "--target-json",
                   R"({"family":"su:2,1","terms":[{"label":{"mu1":[2],"mu2":[],"p":1},"coef":-3}]})"});
    CHECK(js.code == 0);
}

TEST_CASE("weyl, star, decompose") {
    auto w = json_of(run({"weyl", "--family", "sostar:4", "--weight", "0,0,0,0"}));
    CHECK(w["terms"].size() == 6);
    auto s = json_of(run({"star", "--family", "su:3,2", "--weight", "0,0,0|0,0"}));
    CHECK(s["groups"].size() == 4);
    auto t = json_of(run({"decompose", "tensor", "--family", "sostar:5", "--label", "1,0,0|1", "--label", "1,0,0|1"}));
    CHECK(t["terms"].size() == 4);
    auto e = json_of(run({"decompose", "exterior", "--family", "sostar:5", "--label", "1,1,0|0", "--power", "3"}));
    CHECK(e["terms"].size() == 1);
}

TEST_CASE("scan and explore-sostar are identical across job counts") {
    for (std::string fam : {"su:3,2", "soe:2", "sostar:4"}) {
        auto a = run({"scan", "--family", fam, "--bound", "1", "--jobs", "1"});
        auto b = run({"scan", "--family", fam, "--bound", "1", "--jobs", "4"});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
    auto a = run({"explore-sostar", "--n", "4", "--bound", "1", "--radius", "1", "--jobs", "1"});
    auto b = run({"explore-sostar", "--n", "4", "--bound", "1", "--radius", "1", "--jobs", "3"});
    CHECK(a.out == b.out);
    std::istringstream lines(a.out);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) {
        auto j = Json::parse(line);
        CHECK(j.contains("lambda"));
        CHECK(j.contains("groups"));
        ++rows;
    }
    CHECK(rows == 15);
    auto z = run({"explore-sostar", "--n", "4", "--bound", "0", "--radius", "0", "--format", "tsv"});
    CHECK(z.out.rfind("0:0:0:0\t5:4:3:2:1\t", 0) == 0);
}

TEST_CASE("verify-paper subset") {
    auto r = run({"verify-paper", "--only", "6", "--only", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS  6") != std::string::npos);
    CHECK(r.out.find("PASS  7") != std::string::npos);
}
