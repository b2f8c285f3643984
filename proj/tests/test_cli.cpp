#include "pencilgit/cli.hpp"
#include "pencilgit/report.hpp"

#include <doctest.h>

#include <sstream>

using namespace pencilgit;

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("classify subcommand") {
    auto r = run({"classify", "--field", "fp:13", "--pencil", "rep:Z1"});
    CHECK(r.code == 0);
    CHECK(r.out == "Z1\n");
    r = run({"classify", "--field", "fp:13", "--pencil", "wall:0"});
    CHECK(r.out == "Z2_2\n");
    r = run({"classify", "--field", "q", "--pencil", "f=[0,0,1,0];g=[1,1,0,0]"});
    CHECK(r.out == "Z3_1\n");
}

TEST_CASE("invariants subcommand") {
    auto r = run({"invariants", "--field", "q", "--pencil", "wall:2", "--json"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["version"] == "pencil-git/1");
    CHECK(j["command"] == "invariants");
    CHECK(j["field"] == "q");
    CHECK(j["status"] == "pass");
    const auto& w = j["checks"][0]["witness"];
    CHECK(w["Iprime"] == "7");
    CHECK(w["J"] == "-143/216");
    CHECK(w["newstead_primitive"] == "74088:-143");
    CHECK(w["stability"] == "Stable");
}

TEST_CASE("chow subcommand") {
    auto r = run({"chow", "piece", "FINAL", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "Z/2 + Z/3\n");
    r = run({"chow", "piece", "FINAL", "2"});
    CHECK(r.out == "Z/4 + Z/3\n");
    r = run({"chow", "inideal", "S4_PT", "alpha*nu - alpha^2*zeta1 - alpha^4", "--json"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["checks"][0]["witness"]["in_ideal"] == true);
}

TEST_CASE("usage and syntax errors exit with 2") {
    CHECK(run({"classify", "--field", "fp:12", "--pencil", "rep:Z1"}).code == 2); // NotPrime
    CHECK(run({"classify", "--field", "fp:13", "--pencil", "garbage"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"chow", "piece", "NOPE", "1"}).code == 2);
    // mathematical negatives exit with 1
    CHECK(run({"wall-form", "--field", "fp:13", "--pencil", "rep:Z2_2"}).code == 1); // NotStable
}

TEST_CASE("stabilizer and orbit subcommands") {
    auto r = run({"stabilizer", "--field", "fp:13", "--pencil", "wall:2", "--json"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["checks"][0]["witness"]["order"] == 4);
    r = run({"orbit", "--field", "fp:13", "--rho", "2", "--json"});
    Json o = Json::parse(r.out);
    CHECK(o["checks"][0]["witness"]["s4_orbit"].size() == 6);
}

TEST_CASE("wall-form and chars subcommands") {
    auto r = run({"wall-form", "--field", "fp:13", "--pencil", "wall:2", "--json"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["checks"][0]["witness"]["verifies"] == true);
    r = run({"chars", "--group", "D8", "--json"});
    CHECK(r.code == 0);
    Json c = Json::parse(r.out);
    CHECK(c["checks"][0]["witness"]["classes"].size() == 5);
    // sl2 restricted to D8: one copy each of k_sigma4 and k2
    CHECK(c["checks"][0]["witness"]["sl2_multiplicities"] ==
          Json::array({"0", "1", "0", "0", "1"}));
}

TEST_CASE("json reports are deterministic") {
    std::vector<std::string> args = {"invariants", "--field", "fp:13",
                                     "--pencil", "wall:5",  "--json"};
    CHECK(run(args).out == run(args).out);
    // the heavy determinism case lives with the acceptance run; a fast
    // chow command with a seed exercises the same path
    std::vector<std::string> args2 = {"chow", "piece", "S4_PT", "4", "--seed", "7", "--json"};
    CHECK(run(args2).out == run(args2).out);
}

TEST_CASE("a corrupted builtin makes verify-all fail loudly, reports stay byte-identical") {
    // drop a relation of FINAL: criterion 09 must fail and name the claim
    std::vector<std::string> args = {"verify-all", "--field", "fp:13", "--corrupt-builtin",
                                     "FINAL",      "--json"};
    auto r = run(args);
    CHECK(r.code == 1);
    Json j = Json::parse(r.out);
    CHECK(j["status"] == "fail");
    bool named = false;
    for (const auto& c : j["checks"])
        if (c["id"] == "09-graded-pieces" && c["status"] == "fail") named = true;
    CHECK(named);
    // a second run of the full battery emits exactly the same bytes
    CHECK(run(args).out == r.out);
}
