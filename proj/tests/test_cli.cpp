#include "cr/fixtures.hpp"

#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

using namespace cr;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(ARTIFACT_BIN) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("aut profile of Q") {
    Run r = run("aut --fixture Q");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["total"] == 16);
    CHECK(j["weights"]["-1"] == 5);
    CHECK(j["surface_sha256"] == sha256_hex(surface_json(make_fixture("Q").surface)));
    CHECK(run("aut --fixture Q --range=-3..3").out == r.out);
}

TEST_CASE("quadric totals") {
    CHECK(nlohmann::json::parse(run("aut --fixture quadric-c4 --range -2..4").out)["total"] == 24);
    CHECK(nlohmann::json::parse(run("aut --fixture quadric-c4-mixed --range -2..4").out)["total"] == 24);
    CHECK(nlohmann::json::parse(run("aut --fixture quadric-c2").out)["total"] == 8);
}

TEST_CASE("reports are byte-identical across runs") {
    for (const char* args : {"aut --fixture quadric-c3 --basis", "bound --fixture j6-generic --seed 104729",
                             "export-matrix --fixture quadric-c2 --range 0..1 --format text", "verify diagnostics",
                             "classify --fixture pair7-generic"})
        CHECK(run(args).out == run(args).out);
}

TEST_CASE("seeds change generic fixtures only") {
    CHECK(run("bound --fixture j6-generic --seed 7919").out != run("bound --fixture j6-generic --seed 104729").out);
    CHECK(run("bound --fixture j6-generic").out == run("bound --fixture j6-generic --seed 7919 104729").out);
    CHECK(run("aut --fixture Q --seed 1").out == run("aut --fixture Q --seed 2").out);
}

TEST_CASE("bound reports") {
    auto j = nlohmann::json::parse(run("bound --fixture j6-generic").out);
    CHECK(j["bound"] == 0);
    CHECK(j["space"] == "V5");
    auto full = nlohmann::json::parse(run("bound --fixture j6-zero --space full").out);
    CHECK(full["bound"] == 1);
}

TEST_CASE("classify from forms") {
    auto c1 = nlohmann::json::parse(run("classify --hermitian 1,0,0,1 --quadratic 1,2,0").out);
    CHECK(c1["class"] == 1);
    auto c2 = nlohmann::json::parse(run("classify --hermitian 1,0,0,-1 --quadratic 1,1,0").out);
    CHECK(c2["class"] == 5);
    auto c9 = nlohmann::json::parse(run("classify --hermitian 0,1,1,0 --quadratic 1,0,0").out);
    CHECK(c9["class"] == 9);
    CHECK(c9["witness"].is_array());
    auto c3 = nlohmann::json::parse(run("classify --hermitian \"0,i,-i,0\" --quadratic \"2,1,1/2+3i\"").out);
    CHECK(c3["class"] == 7);
    CHECK(c3["K"][0][1] == "1/2+3i");
    CHECK(c3["H"][0][1] == "i");
    CHECK(run("classify --hermitian 1,0,0,1 --quadratic 0,0,0").code == 2);
}

TEST_CASE("export-surface round trip") {
    Run r = run("export-surface --fixture pair9-special");
    REQUIRE(r.code == 0);
    CHECK(r.out == surface_json(make_fixture("pair9-special").surface) + "\n");
    Run m = run("export-matrix --fixture quadric-c2 --range 0..0 --format text");
    CHECK(m.out.find("# surface-sha256 " + sha256_hex(surface_json(make_fixture("quadric-c2").surface))) !=
          std::string::npos);
}

TEST_CASE("verify passes and fails by suite") {
    Run ok = run("verify flows");
    CHECK(ok.code == 0);
    auto j = nlohmann::json::parse(ok.out);
    CHECK(j["pass"] == true);
    CHECK(j["surface_sha256"]["Q"] == sha256_hex(surface_json(make_fixture("Q").surface)));
    Run bad = run("verify classify");
    CHECK(bad.code == 1);
    CHECK(nlohmann::json::parse(bad.out)["pass"] == false);
}

TEST_CASE("bad input exits with 2") {
    CHECK(run("").code == 2);
    CHECK(run("aut").code == 2);
    CHECK(run("aut --fixture nope").code == 2);
    CHECK(run("aut --fixture Q --format xml").code == 2);
    CHECK(run("aut --fixture Q --range 3..1").code == 2);
    CHECK(run("aut --fixture j6-zero").code == 2);
    CHECK(run("bound --fixture Q --space V5tilde").code == 2);
    CHECK(run("verify nosuch").code == 2);
    CHECK(run("classify --hermitian 1,0,0 --quadratic 1,2,0").code == 2);
    CHECK(run("classify --hermitian 1,0,0,1 --quadratic 1,x,0").code == 2);
    CHECK(run("bound --fixture Q --seed 1 2 3").code == 2);
    CHECK(run("--help").code == 0);
}

}
