#include <doctest.h>

#include "coarse/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace coarse;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

struct CliRun {
    int code = 0;
    std::string out, err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json first_json_line(const std::string& s) {
    std::istringstream in(s);
    std::string line;
    REQUIRE(std::getline(in, line));
    return nlohmann::json::parse(line);
}

}  // namespace

TEST_CASE("classify subcommand") {
    const auto line = run({"classify", "--line", "30"});
    CHECK(line.code == 0);
    const auto j = first_json_line(line.out);
    CHECK(j["command"] == "classify");
    CHECK(j["result"] == "pass");
    CHECK(j["evidence"]["shape"] == "LineZ");

    const auto ray = run({"classify", "--ray", "30"});
    CHECK(first_json_line(ray.out)["evidence"]["shape"] == "LineN");

    const auto tri = run({"classify", "--tripod", "10"});
    const auto tj = first_json_line(tri.out);
    CHECK(tj["evidence"]["shape"] == "Other");
    CHECK(tj["evidence"]["ends"] == 3);

    const auto grid = run({"classify", "--grid", "7"});
    CHECK(first_json_line(grid.out)["evidence"]["shape"] == "Other");

    const auto tiny = run({"classify", "--line", "3"});
    CHECK(tiny.code == 2);  // inconclusive margins
}

TEST_CASE("classify from an edge list file") {
    const std::string path = temp_path("cli_test_edges.txt");
    {
        std::ofstream f(path);
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) f << i << " " << j << "\n";
    }
    const auto r = run({"classify", "--edges", path});
    CHECK(r.code == 0);
    CHECK(first_json_line(r.out)["evidence"]["shape"] == "Bounded");

    const auto missing = run({"classify", "--edges", "no_such_file.txt"});
    CHECK(missing.code == 3);
}

TEST_CASE("verify-selector subcommand") {
    const auto max = run({"verify-selector", "--group", "z", "--selector", "max", "--scale", "3"});
    CHECK(max.code == 0);
    const auto j = first_json_line(max.out);
    CHECK(j["result"] == "pass");
    CHECK(j["evidence"]["selector"] == true);
    CHECK(j["evidence"]["moduli"]["1"] == 1);
    CHECK(j["evidence"]["moduli"]["3"] == 3);

    const auto tower = run({"verify-selector", "--group", "sum-z2", "--selector", "tower"});
    CHECK(tower.code == 0);
    CHECK(first_json_line(tower.out)["evidence"]["modulus_within_subgroup"] == true);

    const auto sym = run({"verify-selector", "--group", "sym-tower", "--selector", "tower"});
    CHECK(sym.code == 0);

    const auto transfer = run({"verify-selector", "--group", "z", "--selector", "transfer"});
    CHECK(transfer.code == 0);

    const auto bad = run({"verify-selector", "--group", "sum-z2", "--selector", "max"});
    CHECK(bad.code == 3);
}

TEST_CASE("check-order subcommand") {
    CHECK(run({"check-order", "--group", "z", "--order", "natural", "--interval"}).code == 0);
    CHECK(run({"check-order", "--group", "z", "--order", "natural", "--compatible"}).code == 0);

    const auto zig = run({"check-order", "--group", "z", "--order", "zigzag", "--compatible"});
    CHECK(zig.code == 1);
    CHECK(first_json_line(zig.out)["evidence"].contains("witness"));

    CHECK(run({"check-order", "--group", "dinf", "--order", "vz", "--interval"}).code == 0);
    CHECK(run({"check-order", "--group", "z-cross-z4", "--order", "vz", "--interval"}).code == 0);
    CHECK(run({"check-order", "--group", "sum-z2", "--order", "tower", "--interval"}).code == 0);
    CHECK(run({"check-order", "--group", "sum-z2", "--order", "tower", "--compatible"}).code == 0);

    // both or neither mode flags is a usage error
    CHECK(run({"check-order", "--group", "z", "--order", "natural"}).code == 3);
    CHECK(run({"check-order", "--group", "z", "--order", "natural", "--interval", "--compatible"})
              .code == 3);
}

TEST_CASE("check-order reads explicit permutations") {
    const std::string path = temp_path("cli_test_order.txt");
    {
        std::ofstream f(path);
        for (int i = 0; i <= 40; ++i) f << i << "\n";  // identity = natural order
    }
    const auto r = run({"check-order", "--group", "z", "--order", "file:" + path, "--interval"});
    CHECK(r.code == 0);

    {
        std::ofstream f(path);
        f << "0 1 2\n";  // wrong size
    }
    CHECK(run({"check-order", "--group", "z", "--order", "file:" + path, "--interval"}).code == 3);
}

TEST_CASE("check-order accepts a group config file") {
    const std::string path = temp_path("cli_test_group.cfg");
    {
        std::ofstream f(path);
        f << "variant virtually-z\ntransversal 2\naction 1 -1\n"
          << "sigma\n0 1\n1 0\ncocycle\n0 0\n0 0\n";
    }
    const auto r =
        run({"check-order", "--group", "table:" + path, "--order", "vz", "--interval"});
    CHECK(r.code == 0);
}

TEST_CASE("verify-selector accepts a tower config file") {
    const std::string path = temp_path("cli_test_tower.cfg");
    {
        std::ofstream f(path);
        f << "variant sum-z2\nlevels 3\n";
    }
    const auto r = run({"verify-selector", "--group", "table:" + path, "--selector", "tower"});
    CHECK(r.code == 0);
    CHECK(first_json_line(r.out)["evidence"]["modulus_within_subgroup"] == true);
}

TEST_CASE("refute subcommand") {
    const auto z = run({"refute", "z-global", "--n", "2"});
    CHECK(z.code == 1);  // hypothesis refuted
    const auto j = first_json_line(z.out);
    CHECK(j["result"] == "fail");
    CHECK(j["evidence"]["left_steps"] == 2);
    CHECK(j["evidence"]["left_final"] == nlohmann::json::array({-3}));
    CHECK(j["evidence"]["right_final"] == nlohmann::json::array({3}));
    CHECK(j["evidence"]["replay"] == true);

    const auto tri = run({"refute", "tripod", "--r", "1"});
    CHECK(tri.code == 1);
    const auto tj = first_json_line(tri.out);
    CHECK(tj["evidence"]["cases"].size() == 8);
    CHECK(tj["evidence"]["replay"] == true);

    const auto shy = run({"refute", "tripod", "--r", "1", "--arm", "3"});
    CHECK(shy.code == 2);

    const auto certs = run({"--certificates", "refute", "z-global", "--n", "1"});
    CHECK(certs.out.find("contradiction: f(A') forced both ways") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs") {
    const std::vector<std::vector<std::string>> cases = {
        {"classify", "--tripod", "12"},
        {"verify-selector", "--group", "z", "--selector", "max"},
        {"check-order", "--group", "dinf", "--order", "vz", "--interval"},
        {"refute", "z-global", "--n", "3"},
        {"refute", "tripod", "--r", "1", "--certificates"},
    };
    for (const auto& args : cases) {
        const auto a = run(args);
        const auto b = run(args);
        CHECK(a.out == b.out);
        CHECK(a.code == b.code);
    }
}

TEST_CASE("usage errors exit with 3") {
    CHECK(run({}).code == 3);
    CHECK(run({"no-such-command"}).code == 3);
    CHECK(run({"classify"}).code == 3);
    CHECK(run({"refute", "nothing"}).code == 3);
    CHECK(run({"classify", "--format", "yaml", "--line", "5"}).code == 3);
}

TEST_CASE("text format renders human-readable reports") {
    const auto r = run({"--format", "text", "classify", "--line", "30"});
    CHECK(r.code == 0);
    CHECK(r.out.find("classify: pass") != std::string::npos);
    CHECK(r.out.find("LineZ") != std::string::npos);
}
