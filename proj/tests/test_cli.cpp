#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "mcluster/cli.hpp"
#include "mcluster/serialize.hpp"

using namespace mcluster;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

// minimal reader for the DOT we emit: ids, solid arrows, dashed tau edges
struct DotView {
    std::set<std::string> vertices;
    std::set<std::pair<std::string, std::string>> arrows;
    std::set<std::pair<std::string, std::string>> tau;
};

DotView parse_dot(const std::string& text) {
    DotView view;
    std::regex vertex_re("\"([^\"]+)\" \\[(diagonal|za)=");
    std::regex edge_re("\"([^\"]+)\" -> \"([^\"]+)\"(.*)");
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::smatch m;
        if (std::regex_search(line, m, vertex_re)) view.vertices.insert(m[1]);
        else if (std::regex_search(line, m, edge_re)) {
            if (m[3].str().find("kind=tau") != std::string::npos)
                view.tau.insert({m[1], m[2]});
            else
                view.arrows.insert({m[1], m[2]});
        }
    }
    return view;
}

} // namespace

TEST_CASE("gamma dot output") {
    auto r = run({"gamma", "--n", "4", "--m", "2", "--format", "dot"});
    CHECK(r.code == 0);
    DotView view = parse_dot(r.out);
    CHECK(view.vertices.size() == 15);
    CHECK(view.tau.size() == 15);
    CHECK(view.vertices.count("1-4"));
    CHECK(view.arrows.count({"1-4", "1-6"}));
}

TEST_CASE("gamma json output") {
    auto r = run({"gamma", "--n", "8", "--m", "1", "--format", "json"});
    CHECK(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["config"]["N"] == 10);
    CHECK(doc["vertices"].size() == 35);
}

TEST_CASE("dot round-trips through the json schema") {
    auto jr = run({"gamma", "--n", "4", "--m", "2", "--format", "json"});
    auto dr = run({"gamma", "--n", "4", "--m", "2", "--format", "dot"});
    json doc = json::parse(jr.out);
    DotView view = parse_dot(dr.out);

    std::set<std::string> json_vertices;
    for (const auto& v : doc["vertices"])
        json_vertices.insert(v["id"].get<std::string>());
    CHECK(json_vertices == view.vertices);

    std::set<std::pair<std::string, std::string>> json_arrows, json_tau;
    for (const auto& a : doc["arrows"])
        json_arrows.insert({a[0].get<std::string>(), a[1].get<std::string>()});
    for (const auto& t : doc["tau"])
        json_tau.insert({t[0].get<std::string>(), t[1].get<std::string>()});
    CHECK(json_arrows == view.arrows);
    CHECK(json_tau == view.tau);
}

TEST_CASE("outputs are byte-identical across runs") {
    for (auto format : {"json", "dot", "table"}) {
        auto a = run({"gamma", "--n", "4", "--m", "2", "--format", format});
        auto b = run({"gamma", "--n", "4", "--m", "2", "--format", format});
        CHECK(a.out == b.out);
    }
    auto a = run({"decompose", "--n", "2", "--m", "6", "--format", "json"});
    auto b = run({"decompose", "--n", "2", "--m", "6", "--format", "json"});
    CHECK(a.out == b.out);
}

TEST_CASE("decompose outputs") {
    auto r = run({"decompose", "--n", "4", "--m", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("3 components") != std::string::npos);
    CHECK(r.out.find("cylinder") != std::string::npos);
    CHECK(r.out.find("moebius") != std::string::npos);

    auto rj = run({"decompose", "--n", "3", "--m", "5", "--format", "json"});
    json doc = json::parse(rj.out);
    REQUIRE(doc["components"].size() == 3);
    REQUIRE(doc["reports"].size() == 3);
    int tagged = 0;
    for (const auto& rep : doc["reports"])
        if (rep.contains("u_cluster")) {
            CHECK(rep["u_cluster"] == 8);
            ++tagged;
        }
    CHECK(tagged == 2);
}

TEST_CASE("cone command") {
    auto r = run({"cone", "1", "4", "1", "6", "--n", "8", "--m", "1",
                  "--format", "json"});
    CHECK(r.code == 0);
    json doc = json::parse(r.out);
    REQUIRE(doc["C"].size() == 1);
    CHECK(doc["C"][0]["diagonal"] == json::array({3, 6}));
    CHECK(doc["C"][0]["shift"] == 0);
    CHECK(doc["mu"]["kind"] == "injective");

    auto iso = run({"cone", "1", "5", "1", "5", "--n", "8", "--m", "1",
                    "--format", "json"});
    CHECK(json::parse(iso.out)["C"].empty());

    auto zero = run({"cone", "1", "3", "2", "4", "--n", "8", "--m", "1"});
    CHECK(zero.code == 3);
    CHECK(zero.err.find("NoCanonicalTriangle") != std::string::npos);
}

TEST_CASE("verify command") {
    auto r = run({"verify", "--n", "4", "--m", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("components: 3 (predicted 3)") != std::string::npos);

    auto rj = run({"verify", "--n", "2..3", "--m", "1..2", "--format", "json"});
    CHECK(rj.code == 0);
    json doc = json::parse(rj.out);
    CHECK(doc["pass"] == true);
    CHECK(doc["cells"].size() == 4);

    auto bad = run({"verify", "--n", "4", "--m", "2", "--inject-fault"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);
    CHECK(bad.out.find("injected fault") != std::string::npos);
}

TEST_CASE("full verification sweep exits cleanly") {
    auto r = run({"verify", "--n", "2..5", "--m", "1..8"});
    CHECK(r.code == 0);
    CHECK(r.out.find("all cells pass") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("input caps and exit codes") {
    auto big = run({"gamma", "--n", "300", "--m", "1"});
    CHECK(big.code == 2);

    setenv("CQ_MAX_N", "400", 1);
    auto ok = run({"gamma", "--n", "300", "--m", "1", "--format", "json"});
    CHECK(ok.code == 0);
    unsetenv("CQ_MAX_N");

    auto nonsense = run({"gamma", "--n", "4"});
    CHECK(nonsense.code == 2);

    auto unknown = run({"frobnicate"});
    CHECK(unknown.code == 2);

    auto edge = run({"cone", "1", "2", "1", "4", "--n", "8", "--m", "1"});
    CHECK(edge.code == 3);
}

TEST_CASE("file output") {
    std::string path = "cli_test_gamma.json";
    auto r = run({"gamma", "--n", "4", "--m", "2", "--format", "json",
                  "--output", path});
    CHECK(r.code == 0);
    std::ifstream file(path);
    REQUIRE(file.good());
    json doc = json::parse(file);
    CHECK(doc["vertices"].size() == 15);
    std::remove(path.c_str());
}

TEST_CASE("golden fixtures") {
    auto golden = [](const std::string& name) {
        std::ifstream file(std::string(MCLUSTER_GOLDEN_DIR) + "/" + name,
                           std::ios::binary);
        REQUIRE(file.good());
        std::ostringstream ss;
        ss << file.rdbuf();
        return ss.str();
    };
    CHECK(run({"gamma", "--n", "4", "--m", "2", "--format", "json"}).out ==
          golden("gamma_n4_m2.json"));
    CHECK(run({"gamma", "--n", "4", "--m", "2", "--format", "dot"}).out ==
          golden("gamma_n4_m2.dot"));
    CHECK(run({"decompose", "--n", "4", "--m", "2", "--format", "json"}).out ==
          golden("decompose_n4_m2.json"));
    CHECK(run({"decompose", "--n", "2", "--m", "6", "--format", "json"}).out ==
          golden("decompose_n2_m6.json"));
    CHECK(run({"decompose", "--n", "3", "--m", "5", "--format", "json"}).out ==
          golden("decompose_n3_m5.json"));
    CHECK(run({"cone", "1", "4", "1", "6", "--n", "8", "--m", "1"}).out ==
          golden("cone_injective_n8.json"));
}

TEST_CASE("parallel verify matches single-threaded") {
    auto seq = run({"verify", "--n", "2..4", "--m", "1..3", "--format", "json"});
    auto par = run({"verify", "--n", "2..4", "--m", "1..3", "--format", "json",
                    "--jobs", "4"});
    CHECK(seq.code == 0);
    CHECK(par.code == 0);
    CHECK(seq.out == par.out);
}
