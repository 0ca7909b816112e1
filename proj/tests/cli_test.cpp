#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "conicring/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "conicring");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    int code = conicring::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

const std::string fixtures = CONICRING_FIXTURES;

}  // namespace

TEST_CASE("classify") {
    Result r = run({"classify", fixtures + "/single.txt"});
    CHECK(r.code == conicring::cli::kExitOk);
    CHECK(r.out == "Conic(-1,-1): class {2,inf}, non-split\n");
    CHECK(r.err.empty());
}

TEST_CASE("product of two copies") {
    Result r = run({"product", fixtures + "/pair.txt"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("m=1, dim G=1, basis [{2,inf}]\n", 0) == 0);
}

TEST_CASE("exit codes") {
    CHECK(run({"classify", fixtures + "/malformed.txt"}).code == conicring::cli::kExitMalformedInput);
    CHECK(run({"classify", fixtures + "/missing.txt"}).code == conicring::cli::kExitMalformedInput);
    CHECK(run({}).code == conicring::cli::kExitMalformedInput);
    CHECK(run({"--factor-bound", "10", "classify", fixtures + "/large.txt"}).code == conicring::cli::kExitResourceBound);

    Result bounded = run({"--search-bound", "1", "classify", fixtures + "/conics.txt"});
    CHECK(bounded.code == conicring::cli::kExitResourceBound);
    CHECK(bounded.out.empty());
    CHECK_FALSE(bounded.err.empty());
}

TEST_CASE("help") { CHECK(run({"--help"}).code == 0); }
