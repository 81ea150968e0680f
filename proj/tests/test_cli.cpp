// End-to-end checks for the vrmorse binary: report shapes, exit codes, and
// byte-level determinism. The binary path arrives in VRMORSE_BIN.

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

using nlohmann::json;

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// argv joined by the caller; env assignments may be prefixed since the
// command runs through the shell
RunResult run_cli(const std::string& args, const std::string& env = "") {
    static int counter = 0;
    const char* bin = std::getenv("VRMORSE_BIN");
    REQUIRE(bin != nullptr);
    const auto tmp = std::filesystem::temp_directory_path();
    const auto outp = tmp / ("vrmorse_out_" + std::to_string(counter) + ".txt");
    const auto errp = tmp / ("vrmorse_err_" + std::to_string(counter) + ".txt");
    ++counter;
    std::string cmd = env;
    if (!env.empty()) cmd += " ";
    cmd += "\"";
    cmd += bin;
    cmd += "\" " + args + " > " + outp.string() + " 2> " + errp.string();
    const int rc = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(outp);
    r.err = slurp(errp);
    std::filesystem::remove(outp);
    std::filesystem::remove(errp);
    return r;
}

const std::string kSamples = std::string(TEST_DATA_DIR) + "/../samples";

}  // namespace

TEST_CASE("dlink classifies the inscribed triangle", "[cli]") {
    auto r = run_cli("dlink --gen circle:12 --simplex 0,4,8");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["subcommand"] == "dlink");
    CHECK(j["space"]["kind"] == "exact");
    CHECK(j["space"]["n"] == 12);
    CHECK(j["result"]["diam"] == "1/3");
    CHECK(j["result"]["kind"] == "NONTRIVIAL");
    CHECK(j["result"]["betti"] == json::array({2}));
}

TEST_CASE("group certifies the free group at scale 2", "[cli]") {
    auto r = run_cli("group --spec free_group:2 --radius 8 --scale 2");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["space"]["nodes"] == 13121);
    const auto& chk = j["result"]["checks"][0];
    CHECK(chk["mode"] == "translation");
    CHECK(chk["status"] == "CERTIFIED_SCALE");
    CHECK(chk["coverage"] == 12);
    REQUIRE(chk["witnesses"].size() == 12);
    CHECK(chk["witnesses"][0]["g"] == "aa");
    CHECK(chk["witnesses"][0]["z"] == "a");
}

TEST_CASE("criteria scan statuses and strict exit", "[cli]") {
    auto r = run_cli("criteria --gen circle:12");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    const auto& sum = j["result"]["summary"];
    CHECK(sum["certified"] == 2);
    CHECK(sum["refuted"] == 3);
    CHECK(sum["unknown"] == 1);
    const auto& first = j["result"]["entries"][0];
    CHECK(first["scale"] == "1/12");
    CHECK(first["status"] == "REFUTED");

    auto strict = run_cli("criteria --gen circle:12 --strict");
    CHECK(strict.code == 2);

    // certified-only selection stays exit 0 under --strict
    auto ok = run_cli("criteria --gen circle:12 --scale 1/6 --scale 1/4 --strict");
    CHECK(ok.code == 0);
    json jok = json::parse(ok.out);
    CHECK(jok["result"]["summary"]["certified"] == 2);
}

TEST_CASE("validate flags the squared point cloud", "[cli]") {
    auto r = run_cli("validate --input " + kSamples + "/square_cloud.csv");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["space"]["kind"] == "exact_squared");
    CHECK(j["space"]["sq"] == true);
    CHECK(j["result"]["ok"] == true);
    CHECK(j["result"]["problems"].empty());
}

TEST_CASE("simplices orders the square at its side scale", "[cli]") {
    auto r = run_cli("simplices --input " + kSamples +
                     "/square_cloud.csv --scale 1 --max-dim 2");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["result"]["counts"] == json::array({4, 4}));
    CHECK(j["result"]["total"] == 8);
    // vertices first, then the four sides at squared diameter 1
    CHECK(j["result"]["order"][4]["simplex"] == json::array({0, 1}));
    CHECK(j["result"]["order"][4]["diam"] == "1");
}

TEST_CASE("persistence cross-validates the path metric", "[cli]") {
    auto r = run_cli("persistence --matrix " + kSamples +
                     "/path4_matrix.csv --betti-dim 1");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["result"]["intervals"].size() == 1);
    const auto& iv = j["result"]["intervals"][0];
    CHECK(iv["left"] == "1(open)");
    CHECK(iv["right"] == "3");
    CHECK(iv["contractible_beyond"] == true);
    CHECK(j["result"]["cross_validation"]["pass"] == true);
}

TEST_CASE("forman classifies the sample path function", "[cli]") {
    auto r = run_cli("forman --input " + kSamples + "/forman_path.json");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["result"]["valid"] == true);
    CHECK(j["result"]["critical_per_dim"] == json::array({2, 1}));
    CHECK(j["result"]["checks"]["descending_types"] == true);
    CHECK(j["result"]["checks"]["attachment"] == true);
    const auto& rows = j["result"]["simplices"];
    REQUIRE(rows.size() == 5);
    CHECK(rows[1]["class"] == "REDUNDANT");
    CHECK(rows[1]["matched"] == json::array({0, 1}));
    CHECK(rows[3]["class"] == "COLLAPSIBLE");
}

TEST_CASE("forman reports violations and honors --strict", "[cli]") {
    const auto tmp = std::filesystem::temp_directory_path() / "bad_forman.json";
    {
        std::ofstream f(tmp);
        f << R"({"simplices": [[0],[1],[2],[0,1],[0,2]], "h": [5,0,0,1,1]})";
    }
    auto r = run_cli("forman --input " + tmp.string());
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["result"]["valid"] == false);
    REQUIRE(j["result"]["violations"].size() == 1);
    CHECK(j["result"]["violations"][0]["simplex"] == json::array({0}));
    CHECK(j["result"]["violations"][0]["detail"].get<std::string>().find(
              "more than one coface") != std::string::npos);

    auto strict = run_cli("forman --strict --input " + tmp.string());
    CHECK(strict.code == 2);
    std::filesystem::remove(tmp);
}

TEST_CASE("explicit cayley ball refutes its antipode", "[cli]") {
    auto r = run_cli("group --spec cayley:" + kSamples +
                     "/cycle8_edges.csv --radius 4 --scale 4");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["space"]["complete"] == true);
    CHECK(j["space"]["nodes"] == 8);
    const auto& chk = j["result"]["checks"][0];
    CHECK(chk["mode"] == "literal");
    CHECK(chk["status"] == "REFUTED_SCALE");
    CHECK(chk["failing_pair"] == json::array({"0", "4"}));
    CHECK(chk["widest_dist"] == 4);

    auto strict = run_cli("group --spec cayley:" + kSamples +
                          "/cycle8_edges.csv --radius 4 --scale 4 --strict");
    CHECK(strict.code == 2);
}

TEST_CASE("combing audit feeds the exit code", "[cli]") {
    auto good = run_cli(
        "group --spec free_group:2 --radius 6 --combing prefix "
        "--combing-N 2 --strict");
    REQUIRE(good.code == 0);
    json jg = json::parse(good.out);
    CHECK(jg["result"]["combing"]["failed"] == 0);
    CHECK(jg["result"]["combing"]["t_max"] == 2);
    CHECK(jg["result"]["combing"]["checked"] == 12);

    auto bad = run_cli(
        "group --spec free_abelian:2 --radius 9 --combing staircase "
        "--combing-N 2 --strict");
    CHECK(bad.code == 2);
    json jb = json::parse(bad.out);
    CHECK(jb["result"]["combing"]["failed"] > 0);
    CHECK(jb["result"]["combing"]["first_failing"]["g"] == "(1,1)");
}

TEST_CASE("reports are byte-identical across runs", "[cli]") {
    const std::string cmd = "persistence --gen circle:12 --betti-dim 1";
    auto a = run_cli(cmd);
    auto b = run_cli(cmd);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);

    const auto tmp = std::filesystem::temp_directory_path() / "vrmorse_out.json";
    auto c = run_cli(cmd + " --out " + tmp.string());
    REQUIRE(c.code == 0);
    CHECK(c.out.empty());
    CHECK(slurp(tmp) == a.out);
    std::filesystem::remove(tmp);
}

TEST_CASE("usage errors exit 1 with a message", "[cli]") {
    auto twosrc = run_cli("validate --gen circle:12 --matrix " + kSamples +
                          "/path4_matrix.csv");
    CHECK(twosrc.code == 1);
    CHECK(twosrc.err.find("exactly one of") != std::string::npos);

    auto nofile = run_cli("validate --input does_not_exist.csv");
    CHECK(nofile.code == 1);
    CHECK(nofile.err.find("cannot read") != std::string::npos);

    auto badsimplex = run_cli("dlink --gen circle:12 --simplex 0,99");
    CHECK(badsimplex.code == 1);

    auto badsub = run_cli("frobnicate");
    CHECK(badsub.code == 1);

    auto help = run_cli("--help");
    CHECK(help.code == 0);
    CHECK(help.out.find("persistence") != std::string::npos);
}

TEST_CASE("budget env variable caps the run", "[cli]") {
    auto r = run_cli("persistence --gen circle:12 --betti-dim 1",
                     "VRMORSE_BUDGET=10");
    CHECK(r.code == 1);
    CHECK(r.err.find("budget exceeded") != std::string::npos);

    auto bad = run_cli("validate --gen circle:12", "VRMORSE_BUDGET=zero");
    CHECK(bad.code == 1);
    CHECK(bad.err.find("positive integer") != std::string::npos);
}
