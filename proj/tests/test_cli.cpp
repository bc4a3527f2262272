#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "partint/cli.hpp"

namespace {

struct Run
{
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "partint");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    r.code = partint::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::filesystem::path scratch(const std::string& name, const std::string& content)
{
    const auto dir = std::filesystem::temp_directory_path() / "partint-cli-tests";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream(path) << content;
    return path;
}

} // namespace

TEST_CASE("predict")
{
    auto r = run({"predict", "-n", "2", "-d", "4", "-a", "2,2,2,2,2"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["exception_id"] == "a");
    CHECK(j["exceptional"] == true);
    CHECK(j["schema_version"] == 1);

    r = run({"predict", "-n", "3", "-d", "2", "--lengths", "4,4,2"});
    j = nlohmann::json::parse(r.out);
    CHECK(j["independent"] == false);
    CHECK(j["conditions"] == 10);

    r = run({"predict", "-n", "2", "-d", "3", "-a", "2,1", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("n,d,conditions", 0) == 0);

    CHECK(run({"predict", "-n", "2", "-d", "3", "-a", "2,x"}).code == 2);
    CHECK(run({"predict", "-n", "2", "-d", "3", "-a", "5"}).code == 2);
    CHECK(run({"predict", "-n", "0", "-d", "3"}).code == 2);
    CHECK(run({"predict", "-n", "2", "-d", "3", "-a", "1", "--lengths", "2"}).code == 2);
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"tables", "-n", "5"}).code == 2);
    CHECK(run({"props", "--suite", "nonsense"}).code == 2);
    CHECK(run({"verify", "--sweep", "3", "--seed", "0xzz"}).code == 2);
    CHECK(run({"verify", "--sweep", "3", "--prime", "91"}).code == 2);
    CHECK(run({"verify", "--sweep", "3", "--prime", "8589934609"}).code == 2);
    CHECK(run({"solve", "/nonexistent/problem.json"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify")
{
    auto r = run({"verify", "-n", "2", "-d", "3", "-a", "2,2,1", "--threads", "1"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["passed"] == true);

    r = run({"verify", "--exceptions", "--format", "csv", "--threads", "1"});
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);

    r = run({"verify", "-n", "3", "-d", "2", "--lengths", "4,4,4", "--threads", "1"});
    CHECK(r.code == 0);

    const auto spec = scratch("spec.json", R"({"n": 3, "d": 2, "components": [{"length": 4}, {"length": 2}]})");
    r = run({"verify", "--scheme", spec.string(), "--threads", "1"});
    CHECK(r.code == 0);
    const auto bad = scratch("bad-spec.json", R"({"n": 3, "d": 2, "components": [{"length": 9}]})");
    CHECK(run({"verify", "--scheme", bad.string()}).code == 2);
    const auto junk = scratch("junk.json", "{not json");
    CHECK(run({"verify", "--scheme", junk.string()}).code == 2);
}

TEST_CASE("seeded runs replay")
{
    const std::vector<std::string> args{"verify", "--sweep", "12", "--seed", "12345", "--threads", "2"};
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto hex = args;
    hex[4] = "0x3039";
    CHECK(run(hex).out == a.out);
    auto other = args;
    other[4] = "12346";
    CHECK(run(other).out != a.out);
    auto timed = args;
    timed.push_back("--timing");
    CHECK(run(timed).out.find("millis") != std::string::npos);
}

TEST_CASE("tables")
{
    auto r = run({"tables", "-n", "3", "--format", "csv", "--threads", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("type,deg,max_delta,m,dim,measured_dim,in_reference,verdict", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 8);

    r = run({"tables", "-n", "4", "--threads", "1"});
    CHECK(r.code == 1); // three profiles missing from the reference list
    CHECK(r.err.find("5,4,4,4") != std::string::npos);
    CHECK(nlohmann::json::parse(r.out)["findings"].size() == 3);
}

TEST_CASE("props")
{
    auto r = run({"props", "--suite", "three-subspace-defect", "--threads", "1"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["summary"]["cases"] == 3);
    r = run({"props", "--suite", "three-subspace", "--sample", "1", "--threads", "1"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["summary"]["cases"] == 5);
    CHECK(run({"props", "--suite", "base", "-n", "6"}).code == 2);
}

TEST_CASE("solve")
{
    const auto hermite = scratch("hermite.json", R"({"n": 1, "d": 3, "points": [[0], [1]],
        "directions": [[[1]], [[1]]], "values": [[0, 1], [1, 1]]})");
    auto r = run({"solve", hermite.string()});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["coefficients"] == nlohmann::json{"0", "1", "0", "0"});

    const auto out = std::filesystem::temp_directory_path() / "partint-cli-tests" / "solved.json";
    std::filesystem::remove(out);
    r = run({"solve", hermite.string(), "--out", out.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(std::filesystem::exists(out));

    CHECK(run({"solve", hermite.string(), "--any"}).code == 0);
    CHECK(run({"solve", hermite.string(), "--any", "--unique"}).code == 2);

    const auto pair = scratch("pair.json", R"({"n": 2, "d": 2, "points": [[0, 0], [1, 0]],
        "directions": [[[1, 0], [0, 1]], [[1, 0], [0, 1]]],
        "values": [[0, 0, 0], [1, 0, 0]]})");
    r = run({"solve", pair.string()});
    CHECK(r.code == 1);
    j = nlohmann::json::parse(r.out);
    CHECK(j["status"] == "singular");
    CHECK(j["diagnosis"]["exception_id"] == "quadric-delta");

    const auto square = scratch("square.json", R"({"n": 1, "d": 3, "points": [[0]],
        "directions": [[[1]]], "values": [[0, 1]]})");
    CHECK(run({"solve", square.string(), "--unique"}).code == 2);
    CHECK(run({"solve", square.string()}).code == 0);
}
