#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "polycert/cli.hpp"

using namespace polycert;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "polycert");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "polycert_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("exit codes follow the verdict") {
    CHECK(run_cli({"polya", "-n", "2", "-q", "x1^2 - x1 x2 + x2^2"}).code == 0);
    CHECK(run_cli({"polya", "-n", "2", "-q", "x1^2 - 2 x1 x2 + x2^2"}).code == 1);
    CHECK(run_cli({"polya", "-n", "2", "-q", "x1^2 - 199/100 x1 x2 + x2^2", "--n-max", "2", "--grid-depth", "2"}).code ==
          2);
    CHECK(run_cli({"certify", "-n", "2", "-p", "x1 + x2", "-q", "x1^2 - x1 x2 + x2^2"}).code == 0);
    CHECK(run_cli({"certify", "-n", "2", "-p", "x1 + x2", "-q", "x1^2 - 2 x1 x2 + x2^2"}).code == 1);
    CHECK(run_cli({"handelman", "-n", "2", "-p", "x1 + x2", "-q", "x1^2 - 3 x1 x2 + x2^2"}).code == 1);
    CHECK(run_cli({"power", "-n", "2", "-p", "x1 + x2", "-q", "x1^2 - x1 x2 + x2^2", "--mode", "strict"}).code == 0);
    CHECK(run_cli({"power", "-n", "2", "-p", "x1 + x2", "-q", "x1^2 - 2 x1 x2 + x2^2"}).code == 1);
}

TEST_CASE("input errors exit 3 with nothing on stdout") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"polya", "-n", "2", "-q", "x1^2 + x2"},
             {"polya", "-n", "2", "-q", "x1 +"},
             {"polya", "-n", "0", "-q", "x1"},
             {"polya", "-q", "x1"},
             {"frobnicate"},
             {},
             {"power", "-n", "2", "-p", "x1 - x2", "-q", "x1"},
             {"handelman", "-n", "2", "-p", "x1 - x2", "-q", "x1"},
             {"power", "-n", "2", "-p", "x1 + x2", "-q", "x1", "--mode", "sideways"},
             {"verify", "/nonexistent/certificate.json"},
         }) {
        const auto r = run_cli(args);
        CHECK(r.code == 3);
        CHECK(r.out.empty());
        CHECK_FALSE(r.err.empty());
    }
}

TEST_CASE("stdout holds exactly one JSON document") {
    const auto r = run_cli({"certify", "-n", "2", "-p", "x1 + x2", "-q", "x1^2 - x1 x2 + x2^2"});
    const auto j = Json::parse(r.out);
    CHECK(j["schema_version"] == "1.0");
    CHECK(j["command"] == "certify");
    CHECK(j["outcome"]["certificate"]["m0"] == 3);
    CHECK(j["outcome"]["certificate"]["s"] == 1);
    CHECK(j["outcome"]["recheck"] == "passed");
    CHECK(j.contains("timings"));
    CHECK_FALSE(Json::parse(run_cli({"polya", "-n", "2", "-q", "x1", "--no-timings"}).out).contains("timings"));
}

TEST_CASE("identical invocations give identical documents") {
    const std::vector<std::string> args{"handelman", "-n", "3", "-p", "x1 + x2 + x3", "-q",
                                        "x1^2 - x1 x2 + x2^2 + x3^2", "--no-timings"};
    CHECK(run_cli(args).out == run_cli(args).out);
}

TEST_CASE("--output writes the same document atomically") {
    const auto path = scratch("certify.json");
    std::filesystem::remove(path);
    const auto r = run_cli({"certify", "-n", "2", "-p", "x1 + x2", "-q", "x1^2 - x1 x2 + x2^2", "--no-timings",
                            "--output", path.string()});
    CHECK(r.code == 0);
    CHECK(slurp(path) == r.out);
    for (const auto& entry : std::filesystem::directory_iterator(path.parent_path())) {
        CHECK(entry.path().filename().string().find(".tmp.") == std::string::npos);
    }
}

TEST_CASE("saved certificates re-verify and tampering is caught") {
    const auto path = scratch("power.json");
    const auto r = run_cli({"power", "-n", "2", "-p", "x1 + x2", "-q", "x1^2 - x1 x2 + x2^2", "--mode", "strict",
                            "--no-timings", "--output", path.string()});
    REQUIRE(r.code == 0);
    const auto ok = run_cli({"verify", path.string(), "--no-timings"});
    CHECK(ok.code == 0);
    CHECK(Json::parse(ok.out)["outcome"]["passed"] == true);

    auto j = Json::parse(r.out);
    j["outcome"]["exponent"] = 2;
    const auto forged = scratch("forged.json");
    std::ofstream(forged) << j.dump(2);
    CHECK(run_cli({"verify", forged.string()}).code == 1);
}

TEST_CASE("every subcommand's exit-0 output re-checks") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"expand", "-n", "2", "-p", "x1 - x2", "-m", "4"},
             {"faces", "-n", "3", "-p", "x1^2 + x2^2 + x3^2 + x1 x2"},
             {"strata", "-n", "2", "-p", "x1 + x2", "-q", "x1^3 + x2^3"},
             {"polya", "-n", "3", "-q", "x1^2 + x2^2 + x3^2 - x1 x2"},
             {"power", "-n", "2", "-p", "x1 + x2", "-q", "x1^2 - x1 x2 + x2^2"},
             {"certify", "-n", "2", "-p", "x1^4 + 4 x1^3 x2 - 1/5 x1^2 x2^2 + 4 x1 x2^3 + x2^4", "-q",
              "x1^2 + x1 x2 + x2^2"},
             {"handelman", "-n", "2", "-p", "x1 + x2", "-q", "x1^2 - 3/2 x1 x2 + x2^2"},
         }) {
        const auto r = run_cli(args);
        REQUIRE(r.code == 0);
        const auto doc = CertificateDocument::parse(r.out);
        CHECK(doc.serialize() == r.out);
        const auto check = cli::recheck(doc);
        CHECK(check.passed);
    }
}

TEST_CASE("golden documents are byte-stable") {
    const std::filesystem::path dir(POLYCERT_GOLDEN_DIR);
    const bool update = std::getenv("POLYCERT_UPDATE_GOLDENS") != nullptr;
    std::ifstream list(dir / "commands.txt");
    REQUIRE(list);
    std::string line;
    int cases = 0;
    while (std::getline(list, line)) {
        if (line.empty() || line[0] == '#') continue;
        // name<TAB>arg<TAB>arg...
        std::vector<std::string> fields;
        std::stringstream ss(line);
        for (std::string f; std::getline(ss, f, '\t');) fields.push_back(f);
        const std::string name = fields.front();
        std::vector<std::string> args(fields.begin() + 1, fields.end());
        args.push_back("--no-timings");
        const auto r = run_cli(args);
        const auto file = dir / (name + ".json");
        if (update) std::ofstream(file, std::ios::binary) << r.out;
        INFO(name);
        CHECK(slurp(file) == r.out);
        CHECK(run_cli(args).out == r.out);
        ++cases;
    }
    CHECK(cases > 0);
}
