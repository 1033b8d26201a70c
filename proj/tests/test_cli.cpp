#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "cycoh/json_io.hpp"

using namespace cycoh;

namespace {

const std::string kCli = CYCOH_CLI_PATH;
const std::string kDataDir = CYCOH_DATA_DIR;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = kCli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    RunResult r;
    r.out = std::move(out);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("verify-surface matches the recorded outputs byte for byte") {
    for (const std::string name :
         {"quadric_swap", "dp2_geiser", "dp2_geiser_wrong_genus", "no_fixed_point"}) {
        CAPTURE(name);
        const RunResult r = run_cli("verify-surface " + kDataDir + "/" + name + ".json");
        CHECK(r.exit_code == 0);  // a negative verdict is still a successful run
        CHECK(r.out == slurp(kDataDir + "/expected/" + name + ".verdict.json"));
    }
}

TEST_CASE("les-check matches the recorded report") {
    const RunResult r = run_cli("les-check " + kDataDir + "/spliced_les_n2_m3.json");
    CHECK(r.exit_code == 0);
    CHECK(r.out == slurp(kDataDir + "/expected/spliced_les_n2_m3.report.json"));

    const RunResult text = run_cli("les-check --output text " + kDataDir + "/spliced_les_n2_m3.json");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("all exact: yes") != std::string::npos);
}

TEST_CASE("runs are deterministic") {
    const std::string args = "verify-surface " + kDataDir + "/dp2_geiser.json";
    const RunResult first = run_cli(args);
    const RunResult second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
}

TEST_CASE("snf output parses back into a valid certificate") {
    const RunResult r = run_cli("snf '[[2, 4, 4], [-6, 6, 12], [10, 4, 16]]'");
    REQUIRE(r.exit_code == 0);
    const Json j = parse_json_text(r.out);
    const IntMatrix u = matrix_from_json(j.at("u"), "u");
    const IntMatrix d = matrix_from_json(j.at("d"), "d");
    const IntMatrix v = matrix_from_json(j.at("v"), "v");
    const IntMatrix a = make_matrix({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
    CHECK(u * a * v == d);
    CHECK(d == make_matrix({{2, 0, 0}, {0, 2, 0}, {0, 0, 156}}));

    const RunResult text = run_cli("snf --output text '[[4]]'");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("D (1 x 1)") != std::string::npos);
}

TEST_CASE("groupcoh single degree and table") {
    const std::string cyclotomic4 = "'{\"m\": 4, \"action\": [[0, -1], [1, 0]]}'";
    const RunResult single = run_cli("groupcoh --degree 1 " + cyclotomic4);
    CHECK(single.exit_code == 0);
    CHECK(parse_json_text(single.out) == Json({{"degree", 1}, {"group", "Z/2"}}));

    const RunResult table = run_cli("groupcoh --max-degree 4 " + cyclotomic4);
    CHECK(table.exit_code == 0);
    CHECK(parse_json_text(table.out) == parse_json_text(R"({"1":"Z/2","3":"Z/2"})"));

    const RunResult text = run_cli("groupcoh --output text --degree 1 " + cyclotomic4);
    CHECK(text.out == "Z/2\n");

    // The two degree flags are mutually exclusive, and one is required.
    CHECK(run_cli("groupcoh --degree 1 --max-degree 3 " + cyclotomic4).exit_code == 2);
    CHECK(run_cli("groupcoh " + cyclotomic4).exit_code == 2);
}

TEST_CASE("space tables") {
    const RunResult bg = run_cli("space --kind bg --m 3 --max-degree 4");
    CHECK(bg.exit_code == 0);
    CHECK(parse_json_text(bg.out) == parse_json_text(R"({"0":"Z","2":"Z/3","4":"Z/3"})"));

    const RunResult bg_text = run_cli("space --output text --kind bg --m 3 --max-degree 4");
    CHECK(bg_text.out == "H^0  Z\nH^1  0\nH^2  Z/3\nH^3  0\nH^4  Z/3\n");

    const RunResult lens = run_cli("space --kind lens --m 5 --n 2");
    CHECK(parse_json_text(lens.out) == parse_json_text(R"({"0":"Z","2":"Z/5","3":"Z"})"));

    const RunResult kgroups = run_cli(
        "space --kind k-groups --m 3 --max-degree 3 '{\"0\": \"Z^4\", \"1\": \"Z^4\", \"2\": \"Z\"}'");
    CHECK(kgroups.exit_code == 0);
    CHECK(parse_json_text(kgroups.out) ==
          parse_json_text(R"({"2":"(Z/3)^4","3":"(Z/3)^4"})"));

    CHECK(run_cli("space --kind lens --m 5").exit_code == 2);      // --n required
    CHECK(run_cli("space --kind bg --max-degree 4").exit_code == 2);  // --m required
    CHECK(run_cli("space --kind k-groups --m 4 --max-degree 2 '{\"0\": \"Z/2\"}'").exit_code ==
          2);  // torsion fixed locus
}

TEST_CASE("kunneth and double-cover") {
    const RunResult kn = run_cli(
        "kunneth --degree 3 '{\"a\": {\"0\": \"Z\", \"1\": \"Z^4\", \"2\": \"Z\"}, "
        "\"b\": {\"0\": \"Z\", \"2\": \"Z/3\", \"4\": \"Z/3\"}}'");
    CHECK(kn.exit_code == 0);
    CHECK(parse_json_text(kn.out) == Json({{"degree", 3}, {"group", "(Z/3)^4"}}));

    const RunResult dc = run_cli("double-cover --d 3");
    CHECK(dc.exit_code == 0);
    const Json j = parse_json_text(dc.out);
    CHECK(j.at("r") == 22);
    CHECK(j.at("genus") == 10);
    CHECK(j.at("consistent") == true);
    CHECK(j.at("lhs") == "(Z/2)^20");

    const RunResult dc_text = run_cli("double-cover --output text --d 1");
    CHECK(dc_text.out == "d=1  r=2  genus=0  lhs=0  rhs=0  consistent: yes\n");
}

TEST_CASE("chern and p1-ring operations") {
    CHECK(parse_json_text(run_cli("chern --op mul --m 4 --p '3 + x' --q '2 + x'").out)
              .at("result") == "6 + x + x^2");
    CHECK(parse_json_text(run_cli("chern --op c1-power --m 5 --j 2 --k 3").out)
              .at("result") == "3x^3");
    CHECK(parse_json_text(
              run_cli("chern --op top-chern --m 4 --j 3 --chern 1,0,0").out)
              .at("result") == "x^2");
    CHECK(parse_json_text(run_cli("chern --op leading --m 5 --ranks 0,0,1,1").out)
              .at("result") == 1);
    CHECK(parse_json_text(run_cli("chern --op unit-check --m 4 --ranks 0,0,1").out)
              .at("result") == false);
    CHECK(run_cli("chern --op unit-check --m 4 --ranks 0,0,1 --output text").out == "false\n");

    CHECK(parse_json_text(run_cli("p1-ring --op mul --m 4 --p h --q h").out).at("result") ==
          "3xh");
    CHECK(parse_json_text(
              run_cli("p1-ring --op gysin --m 4 --point zero --class 1").out)
              .at("result") == "h + x");
    CHECK(parse_json_text(
              run_cli("p1-ring --op gysin --m 4 --point infinity --class 1").out)
              .at("result") == "h");
    CHECK(parse_json_text(run_cli("p1-ring --op graded-piece --m 3 --degree 2").out)
              .at("result") == "Z + Z/3");
    CHECK(parse_json_text(run_cli("p1-ring --op injectivity --m 6 --max-degree 8").out)
              .at("result") == true);

    CHECK(run_cli("chern --op mul --m 4 --p '3 + x'").exit_code == 2);  // --q missing
    CHECK(run_cli("chern --op mul --m 4 --p 'x^' --q x").exit_code == 2);
    CHECK(run_cli("p1-ring --op gysin --m 4 --point sideways --class 1").exit_code == 2);
}

TEST_CASE("failure exit codes") {
    CHECK(run_cli("frobnicate").exit_code == 2);             // unknown subcommand
    CHECK(run_cli("snf").exit_code == 2);                    // missing input
    CHECK(run_cli("snf '[[1], [2, 3]]'").exit_code == 2);    // ragged rows
    CHECK(run_cli("snf 'not json'").exit_code == 2);         // unreadable input
    CHECK(run_cli("snf /no/such/file.json").exit_code == 2);
    CHECK(run_cli("groupcoh --degree 0 '{\"m\": 2, \"action\": [[2]]}'").exit_code == 2);
    CHECK(run_cli("verify-surface '{\"name\": \"s\"}'").exit_code == 2);
    CHECK(run_cli("double-cover --d 0").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("snf --help").exit_code == 0);
}
