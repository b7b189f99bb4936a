#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cacodes/cli.hpp"
#include "cacodes/io.hpp"

using namespace cacodes;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
    io::Json json() const { return io::Json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("cacodes_test_" + name)).string();
}

}  // namespace

TEST_CASE("count reports N_k and the Gauss terms") {
    const Run r = run({"count", "--q", "2", "--k", "3"});
    REQUIRE(r.code == 0);
    const auto j = r.json();
    CHECK(j.at("N_k") == 3);
    CHECK(j.at("N_k_gauss") == 4);
    CHECK(j.at("terms").size() == 2);
    CHECK(j.at("manifest").at("subcommand") == "count");
    const auto t = run({"count", "--q", "2", "--k", "5", "--t", "2"}).json();
    CHECK(t.at("uniform_gcd_size") == 3);
}

TEST_CASE("kernel subcommand") {
    const auto j = run({"kernel", "--q", "2", "--poly", "1,1,1", "--n", "4"}).json();
    CHECK(j.at("dim") == 2);
    CHECK(j.at("basis").dump() == "[[1,0,1,1],[0,1,1,0]]");
    CHECK(j.at("transition_matrix").at("entries").dump() == "[[1,1,1,0],[0,1,1,1]]");
    CHECK(run({"kernel", "--q", "2", "--poly", "1,1,1", "--n", "4", "--csv"}).out == "1,0,1,1\n0,1,1,0\n");
}

TEST_CASE("build-code output feeds analyze") {
    const std::string path = temp_path("pair.json");
    const Run built = run({"build-code", "--q", "2", "--k", "2", "--gcd", "1", "--out", path});
    REQUIRE(built.code == 0);
    const auto b = built.json();
    CHECK(b.at("family").size() == 2);
    CHECK(b.at("predicted").at("min_distance") == 4);

    const Run analyzed = run({"analyze", "--code", path});
    REQUIRE(analyzed.code == 0);
    const auto a = analyzed.json();
    CHECK(a.at("params").at("n") == 4);
    CHECK(a.at("params").at("max_dim") == 2);
    CHECK(a.at("params").at("log_q_size") == 1.0);
    CHECK(a.at("params").at("min_distance") == 4);
    CHECK(a.at("predicted").at("gcd_profile").at("max_gcd_degree") == 0);
    CHECK(a.at("prediction_matches") == true);
    CHECK(a.at("family") == b.at("family"));

    // A bare code object is accepted as well.
    const std::string bare = temp_path("bare.json");
    std::ofstream(bare) << b.at("code").dump();
    CHECK(run({"analyze", "--code", bare}).json().at("params") == a.at("params"));
    std::remove(path.c_str());
    std::remove(bare.c_str());
}

TEST_CASE("build-code round trip over several parameters") {
    for (const auto& [k, g] : std::vector<std::pair<std::string, std::string>>{
             {"3", "1"}, {"4", "1,1"}, {"5", "1,1,1"}, {"4", "1,0,1"}}) {
        const std::string path = temp_path("rt.json");
        const auto b = run({"build-code", "--q", "2", "--k", k, "--gcd", g, "--out", path}).json();
        const auto a = run({"analyze", "--code", path}).json();
        CHECK(a.at("params").at("min_distance") == b.at("predicted").at("min_distance"));
        CHECK(a.at("predicted") == b.at("predicted"));
        std::remove(path.c_str());
    }
}

TEST_CASE("explicit family members") {
    const auto j = run({"build-code", "--q", "2", "--k", "3", "--poly", "1,0,0,1", "--poly", "1,1,1,1"}).json();
    CHECK(j.at("predicted").at("min_distance") == 4);
    const Run bad = run({"build-code", "--q", "2", "--k", "3", "--poly", "1,1", "--poly", "1,1,1,1"});
    CHECK(bad.code == 1);
    CHECK(bad.json().at("error").at("name") == "MixedDegrees");
}

TEST_CASE("simulate is reproducible and validates input") {
    const std::string code = temp_path("sim_code.json");
    run({"build-code", "--q", "2", "--k", "3", "--out", code});
    const std::string s1 = temp_path("s1.json");
    const Run a = run({"simulate", "--code", code, "--erasures", "1", "--errors", "0", "--trials", "200", "--seed",
                       "9", "--out", s1});
    const Run b = run({"simulate", "--code", code, "--erasures", "1", "--errors", "0", "--trials", "200", "--seed",
                       "9"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    std::ifstream in(s1);
    std::stringstream file;
    file << in.rdbuf();
    CHECK(file.str() == a.out);
    CHECK(a.json().at("stats").at("success_rate") == 1.0);

    const Run missing = run({"simulate"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("--code") != std::string::npos);
    const Run too_many = run({"simulate", "--code", code, "--erasures", "4"});
    CHECK(too_many.code == 1);
    CHECK(too_many.json().at("error").at("name") == "TooManyErasures");
    CHECK(run({"simulate", "--code", temp_path("does_not_exist.json")}).json().at("error").at("name") == "IoError");
    std::remove(code.c_str());
    std::remove(s1.c_str());
}

TEST_CASE("usage and domain errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"count", "--q", "2"}).code == 2);
    CHECK(run({"count", "--q", "2", "--k", "x"}).code == 2);
    const Run domain = run({"kernel", "--q", "4", "--poly", "1,1", "--n", "2"});
    CHECK(domain.code == 1);
    CHECK(domain.json().at("error").at("name") == "NotPrime");
    CHECK(run({"search-max", "--q", "2", "--k", "7", "--t", "0", "--budget", "10"}).json().at("error").at("name") ==
          "BudgetExceeded");
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("search-max subcommand") {
    const auto j = run({"search-max", "--q", "2", "--k", "4", "--t", "0"}).json();
    CHECK(j.at("size") == 5);
    CHECK(j.at("N_k") == 5);
}
