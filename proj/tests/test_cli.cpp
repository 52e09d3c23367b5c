#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "qap/generators.hpp"
#include "qap/io.hpp"
#include "test_util.hpp"

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(QAPTK_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string data(const std::string& name) { return std::string(QAPTK_DATA_DIR) + "/" + name + ".mat"; }

nlohmann::json parse_json(const std::string& s) { return nlohmann::json::parse(s); }

}  // namespace

TEST_CASE("cli classify: worked example is robinson and kalmanson, exit 0") {
    auto res = run_cli("classify " + data("example_6x6"));
    CHECK(res.exit_code == 0);
    auto j = parse_json(res.out);
    CHECK(j["classes"]["robinson"]["verdict"] == "yes");
    CHECK(j["classes"]["kalmanson"]["verdict"] == "yes");
    CHECK(j["classes"]["cut"]["verdict"] == "no");
}

TEST_CASE("cli classify: --class drives the exit code") {
    CHECK(run_cli("classify --class robinson " + data("robinson")).exit_code == 0);
    CHECK(run_cli("classify --class monotone " + data("anti_monge")).exit_code == 1);
    // toeplitz verdict carries the profile when yes, the witness when no
    auto yes = run_cli("classify --class toeplitz " + data("dw_toeplitz"));
    CHECK(yes.exit_code == 0);
    auto jy = parse_json(yes.out);
    CHECK(jy["classes"]["toeplitz"]["profile"]["flags"]["dw"] == true);
    auto no = run_cli("classify --class toeplitz " + data("simple_toeplitz_typo"));
    CHECK(no.exit_code == 1);
    auto jn = parse_json(no.out);
    CHECK(jn["classes"]["toeplitz"]["witness"]["indices"] == nlohmann::json({2, 5}));
}

TEST_CASE("cli decompose cdw: two terms on the worked example, exit 0") {
    auto res = run_cli("decompose --mode cdw " + data("example_6x6"));
    CHECK(res.exit_code == 0);
    auto j = parse_json(res.out);
    CHECK(j["verdict"] == "yes");
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["blocks"] == nlohmann::json({{1, 3}, {4, 6}}));
    CHECK(j["terms"][1]["blocks"] == nlohmann::json({{1, 2}, {3, 4}, {5, 6}}));
    CHECK(j["reconstruction_exact"] == true);
    // The hash matches a fresh canonical serialization of the input.
    CHECK(j["reconstruction_hash"] == qap::matrix_hash(testutil::fixture("example_6x6")));
}

TEST_CASE("cli decompose robinson-kalmanson: offset -2 on the worked example") {
    auto res = run_cli("decompose --mode robinson-kalmanson " + data("example_6x6"));
    CHECK(res.exit_code == 0);
    auto j = parse_json(res.out);
    CHECK(j["offset"] == -2);
    CHECK(j["terms"].size() == 5);
    CHECK(j["reconstruction_exact"] == true);
}

TEST_CASE("cli decompose: infeasible and not-in-class inputs exit 1") {
    auto res = run_cli("decompose --mode cdw " + data("kalmanson_robinson"));
    CHECK(res.exit_code == 1);
    auto j = parse_json(res.out);
    CHECK(j["verdict"] == "infeasible");
    CHECK(j["violated"]["k"] == 6);
    CHECK(j["violated"]["l"] == 1);

    CHECK(run_cli("decompose --mode kalmanson " + data("robinson")).exit_code == 1);
    CHECK(run_cli("decompose --mode benevolent " + data("up_benevolent_toeplitz")).exit_code == 1);
    CHECK(run_cli("decompose --mode benevolent " + data("down_benevolent_toeplitz")).exit_code == 0);
}

TEST_CASE("cli solve: down-benevolent appendix pair with oracle agreement") {
    auto res = run_cli("solve " + data("kalmanson_robinson") + " " + data("down_benevolent_toeplitz") + " --oracle --threads 4");
    CHECK(res.exit_code == 0);
    auto j = parse_json(res.out);
    CHECK(j["case"] == "down_benevolent");
    CHECK(j["value"] == "27556");
    CHECK(j["permutation"] == nlohmann::json({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}));
    CHECK(j["oracle"]["agree"] == true);
}

TEST_CASE("cli solve: no case detected exits 1") {
    auto res = run_cli("solve " + data("anti_monge") + " " + data("up_benevolent_toeplitz"));
    CHECK(res.exit_code == 1);
    CHECK(parse_json(res.out)["case"] == "none");
}

TEST_CASE("cli verify forces the oracle") {
    auto res = run_cli("verify " + data("kalmanson") + " " + data("dw_toeplitz") + " --threads 4");
    CHECK(res.exit_code == 0);
    auto j = parse_json(res.out);
    CHECK(j["command"] == "verify");
    CHECK(j["case"] == "DW_kalmanson_dw");
    CHECK(j["oracle"]["agree"] == true);
}

TEST_CASE("cli generate: seed-stable output, --spec JSON, round trip") {
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "qaptk_cli_test";
    fs::create_directories(dir);
    auto out = (dir / "gen.mat").string();

    auto direct = run_cli("generate --class kalmanson --n 7 --seed 5");
    CHECK(direct.exit_code == 0);
    auto again = run_cli("generate --class kalmanson --n 7 --seed 5");
    CHECK(direct.out == again.out);

    auto spec = run_cli("generate --class cdw_conic --n 6 --seed 9 -o " + out + " --spec");
    CHECK(spec.exit_code == 0);
    auto j = parse_json(spec.out);
    CHECK(j["params"]["class"] == "cdw_conic");
    CHECK(run_cli("classify --class robinson " + out).exit_code == 0);

    // --spec without -o would interleave two formats on stdout.
    CHECK(run_cli("generate --class robinson --n 5 --seed 1 --spec").exit_code == 2);
    CHECK(run_cli("generate --class bogus --n 5 --seed 1").exit_code == 2);
    fs::remove_all(dir);
}

TEST_CASE("cli render emits one glyph row per matrix row") {
    auto res = run_cli("render " + data("down_benevolent_toeplitz"));
    CHECK(res.exit_code == 0);
    int lines = 0;
    for (char c : res.out)
        if (c == '\n') ++lines;
    CHECK(lines == 10);
}

TEST_CASE("cli input errors exit 2") {
    CHECK(run_cli("classify /nonexistent/file.mat").exit_code == 2);
    CHECK(run_cli("decompose --mode bogus " + data("example_6x6")).exit_code == 2);
    CHECK(run_cli("solve " + data("example_6x6")).exit_code == 2);          // missing B
    CHECK(run_cli("classify --unknown-flag " + data("example_6x6")).exit_code == 2);
    CHECK(run_cli("").exit_code == 2);                                   // subcommand required

    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "qaptk_cli_err";
    fs::create_directories(dir);
    auto bad = (dir / "bad.mat").string();
    std::ofstream(bad) << "2\n1 x\n3 4\n";
    auto res = run_cli("classify " + bad);
    CHECK(res.exit_code == 2);
    auto j = parse_json(res.out);
    // parse failures carry file:line:column
    CHECK(j["error"].get<std::string>().find(":2:3") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("cli solve with explicit b-split reaches combined case 2") {
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "qaptk_cli_split";
    fs::create_directories(dir);
    auto a = qap::random_instance("down_benevolent", 6, 77).matrix;
    auto b1 = qap::random_instance("ps_monge", 6, 78).matrix;
    auto b2 = qap::random_instance("robinson_kalmanson", 6, 79).matrix;
    auto b = b1 + b2;
    qap::write_matrix_file((dir / "a.mat").string(), a);
    qap::write_matrix_file((dir / "b.mat").string(), b);
    qap::write_matrix_file((dir / "b1.mat").string(), b1);
    qap::write_matrix_file((dir / "b2.mat").string(), b2);
    auto res = run_cli("solve " + (dir / "a.mat").string() + " " + (dir / "b.mat").string() + " --b-split " +
                       (dir / "b1.mat").string() + " " + (dir / "b2.mat").string() + " --oracle");
    CHECK(res.exit_code == 0);
    auto j = parse_json(res.out);
    CHECK(j["case"] == "combined_2");
    CHECK(j["oracle"]["agree"] == true);
    fs::remove_all(dir);
}
