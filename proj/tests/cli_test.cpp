#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "skcat/io.hpp"

using namespace skcat;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

// Runs a shell command; SKCAT is substituted by the built binary path.
RunResult run(std::string cmd)
{
    const std::string binary = SKCAT_CLI_PATH;
    for (std::size_t pos = cmd.find("SKCAT"); pos != std::string::npos; pos = cmd.find("SKCAT"))
        cmd.replace(pos, 5, binary);
    RunResult result;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
        result.out.append(buf.data(), n);
    int raw = pclose(pipe);
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
}

} // namespace

TEST_CASE("gen groupoid | pi1 reports the trivial group")
{
    RunResult r = run("SKCAT gen groupoid 2 | SKCAT pi1");
    REQUIRE(r.status == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("generators") == 1);
    CHECK(j.at("relators") == 2);
    CHECK(j.at("abelianization").at("rank") == 0);
    CHECK(j.at("abelianization").at("torsion").empty());
    CHECK(j.at("base") == "1");
    CHECK(j.at("presentation").at("tree") == Json::array({"e2_1"}));
}

TEST_CASE("gen ladder | hurewicz reports the isomorphism")
{
    RunResult r = run("SKCAT gen ladder 1 0 | SKCAT hurewicz --field q");
    REQUIRE(r.status == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("dimCharacters") == 1);
    CHECK(j.at("dimHH1") == 1);
    CHECK(j.at("rank") == 1);
    CHECK(j.at("verdict") == "isomorphism");
}

TEST_CASE("gen ladder | cw reports the cell counts")
{
    RunResult r = run("SKCAT gen ladder 1 0 | SKCAT cw --emit json");
    REQUIRE(r.status == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("vertices") == 4);
    CHECK(j.at("edges") == 6);
    CHECK(j.at("twoCells") == 2);
    CHECK(j.at("euler") == 0);
}

TEST_CASE("cli output is deterministic")
{
    RunResult a = run("SKCAT gen ladder 2 1 | SKCAT pi1");
    RunResult b = run("SKCAT gen ladder 2 1 | SKCAT pi1");
    CHECK(a.out == b.out);
    RunResult c = run("SKCAT gen groupoid 3");
    RunResult d = run("SKCAT gen groupoid 3");
    CHECK(c.out == d.out);
}

TEST_CASE("gen output round-trips through parse")
{
    RunResult r = run("SKCAT gen groupoid 2 | SKCAT validate");
    REQUIRE(r.status == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("valid") == true);
    CHECK(j.at("homs") == 2);
}

TEST_CASE("exit code 1 on mathematical failure")
{
    // An associativity violation: e12 e21 = id but e21 e12 = 0.
    const char* path = "cli_invalid_category.json";
    {
        std::ofstream f(path);
        f << R"({"field":"rational","objects":["1","2"],
                 "homs":[{"from":"2","to":"1","name":"e1_2"},{"from":"1","to":"2","name":"e2_1"}],
                 "compositions":[{"g":"e1_2","f":"e2_1","result":"identity","scalar":"1"},
                                  {"g":"e2_1","f":"e1_2","result":"zero","scalar":"0"}]})";
    }
    RunResult r = run(std::string("SKCAT validate < ") + path);
    CHECK(r.status == 1);
    Json j = Json::parse(r.out);
    CHECK(j.at("valid") == false);
    CHECK(!j.at("violations").empty());
    std::remove(path);
}

TEST_CASE("exit code 2 on malformed input")
{
    RunResult bad_json = run("echo 'not json' | SKCAT pi1");
    CHECK(bad_json.status == 2);
    RunResult bad_base = run("SKCAT gen groupoid 2 | SKCAT pi1 --base zz");
    CHECK(bad_base.status == 2);
    RunResult bad_field = run("SKCAT gen groupoid 2 | SKCAT hh1 --field gf:6");
    CHECK(bad_field.status == 2);
    RunResult bad_flag = run("SKCAT gen groupoid 2 | SKCAT cw --emit pdf");
    CHECK(bad_flag.status == 2);
}

TEST_CASE("grading subcommands run end to end")
{
    const char* grading_path = "cli_mod2_grading.json";
    {
        std::ofstream f(grading_path);
        f << R"({"group":{"abelian":{"rank":0,"torsion":["2"]}},
                 "degrees":{"beta1":[0],"gamma0":[0],"alpha0":[0],"alpha1":[1],
                            "m1_0":[0],"m0_1":[0]}})";
    }
    RunResult check = run(std::string("SKCAT gen ladder 1 0 | SKCAT grading check --grading ") + grading_path);
    CHECK(check.status == 0);
    CHECK(Json::parse(check.out).at("valid") == true);

    RunResult conn = run(std::string("SKCAT gen ladder 1 0 | SKCAT grading connected --grading ") + grading_path);
    CHECK(conn.status == 0);
    CHECK(Json::parse(conn.out).at("connected") == true);

    RunResult quot = run(std::string("SKCAT gen ladder 1 0 | SKCAT grading quotient --grading ") + grading_path);
    CHECK(quot.status == 0);
    CHECK(Json::parse(quot.out).at("verdict") == "quotient");

    RunResult smash = run(std::string("SKCAT gen ladder 1 0 | SKCAT grading smash --grading ") + grading_path);
    CHECK(smash.status == 0);
    Json sj = Json::parse(smash.out);
    CHECK(sj.at("objects").size() == 8);
    CHECK(sj.at("components") == 1);

    // Smash output is itself a category file.
    RunResult reuse = run(std::string("SKCAT gen ladder 1 0 | SKCAT grading smash --grading ")
                          + grading_path + " | SKCAT validate");
    CHECK(reuse.status == 0);
    CHECK(Json::parse(reuse.out).at("valid") == true);

    RunResult uni = run("SKCAT gen ladder 1 0 | SKCAT grading universal");
    CHECK(uni.status == 0);
    Json uj = Json::parse(uni.out);
    CHECK(uj.at("group").contains("presented"));
    CHECK(uj.at("metadata").at("base") == "a0");

    std::remove(grading_path);
}

TEST_CASE("grading conjugate emits the twisted grading file")
{
    const char* grading_path = "cli_z_grading.json";
    const char* conj_path = "cli_conjugator.json";
    {
        std::ofstream f(grading_path);
        f << R"({"group":{"abelian":{"rank":1,"torsion":[]}},
                 "degrees":{"beta1":[0],"gamma0":[0],"alpha0":[0],"alpha1":[1],
                            "m1_0":[0],"m0_1":[0]}})";
        std::ofstream g(conj_path);
        g << R"({"a1":[1]})";
    }
    RunResult r = run(std::string("SKCAT gen ladder 1 0 | SKCAT grading conjugate --grading ")
                      + grading_path + " --conjugator " + conj_path);
    REQUIRE(r.status == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("degrees").at("beta1") == "[1]");
    CHECK(j.at("degrees").at("alpha1") == "[2]");
    CHECK(j.at("degrees").at("gamma0") == "[0]");
    // Missing conjugator file is an input error.
    RunResult missing = run(std::string("SKCAT gen ladder 1 0 | SKCAT grading conjugate --grading ")
                            + grading_path);
    CHECK(missing.status == 2);
    std::remove(grading_path);
    std::remove(conj_path);
}

TEST_CASE("validation runs on parse unless suppressed")
{
    const char* path = "cli_invalid2.json";
    {
        std::ofstream f(path);
        f << R"({"field":"rational","objects":["1","2"],
                 "homs":[{"from":"2","to":"1","name":"e1_2"},{"from":"1","to":"2","name":"e2_1"}],
                 "compositions":[{"g":"e1_2","f":"e2_1","result":"identity","scalar":"1"},
                                  {"g":"e2_1","f":"e1_2","result":"zero","scalar":"0"}]})";
    }
    RunResult blocked = run(std::string("SKCAT hh1 < ") + path);
    CHECK(blocked.status == 1);
    RunResult forced = run(std::string("SKCAT hh1 --no-validate < ") + path);
    CHECK(forced.status == 0);
    // cw re-validates regardless: its construction demands a valid category.
    RunResult cw_forced = run(std::string("SKCAT cw --no-validate < ") + path);
    CHECK(cw_forced.status == 1);
    std::remove(path);
}

TEST_CASE("generated gf categories analyze over their own prime")
{
    RunResult r = run("SKCAT gen groupoid 3 --field gf:5 | SKCAT hh1 --field gf:5");
    REQUIRE(r.status == 0);
    CHECK(Json::parse(r.out).at("dimHH1") == 0);
}

TEST_CASE("pi1 --simplify reduces the ladder to one free generator")
{
    RunResult r = run("SKCAT gen ladder 1 0 | SKCAT pi1 --simplify");
    REQUIRE(r.status == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("generators") == 1);
    CHECK(j.at("relators") == 0);
    CHECK(j.at("abelianization").at("rank") == 1);
}

TEST_CASE("dot emission through the cli")
{
    RunResult r = run("SKCAT gen groupoid 2 | SKCAT cw --emit dot");
    REQUIRE(r.status == 0);
    CHECK(r.out.find("digraph cw {") != std::string::npos);
    CHECK(r.out.find("// bigon") != std::string::npos);
}
