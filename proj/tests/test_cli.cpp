#include "thetasum/cli.hpp"
#include "thetasum/divisors.hpp"
#include "thetasum/repcount.hpp"
#include "thetasum/series.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace thetasum;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "thetasum");
    std::ostringstream out, err;
    int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

} // namespace

TEST_CASE("verify exit status")
{
    CHECK(run({"verify", "theorem1", "--max-n", "50"}).status == cli::kExitOk);
    CHECK(run({"verify", "all", "--max-n", "1"}).status == cli::kExitOk);
    CHECK(run({"verify", "nosuch", "--max-n", "5"}).status == cli::kExitUsage);
    CHECK(run({"verify", "theorem1", "--max-n", "0"}).status == cli::kExitUsage);
    CHECK(run({"verify", "theorem1"}).status == cli::kExitUsage);
    CHECK(run({"verify", "theorem1", "--max-n", "5", "--format", "xml"}).status == cli::kExitUsage);
    CHECK(run({}).status == cli::kExitUsage);
    CHECK(run({"--help"}).status == cli::kExitOk);
}

TEST_CASE("verify json output")
{
    auto res = run({"verify", "all", "--max-n", "6", "--format", "json"});
    CHECK(res.status == 0);
    std::istringstream lines(res.out);
    std::vector<std::string> names;
    for (std::string line; std::getline(lines, line);) {
        auto j = nlohmann::json::parse(line);
        CHECK(j["all_pass"] == true);
        CHECK(j["range"] == nlohmann::json::array({1, 6}));
        CHECK(j["failures"].empty());
        names.push_back(j["identity"]);
    }
    CHECK(names == std::vector<std::string>{"theorem1", "lemma1", "lemma2", "log_theta", "binomial_aux",
                                            "swap_equivalence"});
}

TEST_CASE("output is independent of jobs")
{
    for (const char* fmt : {"json", "csv"}) {
        auto a = run({"verify", "all", "--max-n", "25", "--format", fmt, "--jobs", "1"});
        auto b = run({"verify", "all", "--max-n", "25", "--format", fmt, "--jobs", "6"});
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("table theta")
{
    auto res = run({"table", "theta", "--max-n", "4", "--format", "json"});
    CHECK(res.status == 0);
    CHECK(res.out == "{\"order\":4,\"coeffs\":[\"1\",\"-2\",\"0\",\"0\",\"2\"]}\n");
    CHECK(Series::from_json(res.out) == theta_sum(4));
    CHECK(run({"table", "theta", "--max-n", "0", "--format", "csv"}).out == "n,coeff\n0,1\n");
}

TEST_CASE("table oddsum")
{
    auto csv = run({"table", "oddsum", "--max-n", "3", "--format", "csv"});
    CHECK(csv.out == "n,value\n1,1\n2,1\n3,4/3\n");
    auto json = nlohmann::json::parse(run({"table", "oddsum", "--max-n", "40", "--format", "json"}).out);
    for (std::size_t n = 1; n <= 40; ++n)
        CHECK(Rational::parse(json["values"][n - 1].get<std::string>()) == odd_divisor_inverse_sum(n));
    auto zero = run({"table", "oddsum", "--max-n", "0"});
    CHECK(zero.status == cli::kExitFailure);
    CHECK_FALSE(zero.err.empty());
}

TEST_CASE("table crn")
{
    auto csv = run({"table", "crn", "--max-n", "3", "--format", "csv"});
    CHECK(csv.status == 0);
    CHECK(csv.out.find("\n3,3,8\n") != std::string::npos);
    auto json = run({"table", "crn", "--max-n", "50", "--format", "json"});
    CHECK(RepTable::from_json(json.out) == RepTable(50));
    CHECK(run({"table", "crn", "--max-n", "0"}).status == cli::kExitFailure);
}

TEST_CASE("table bell")
{
    auto res = run({"table", "bell", "--max-n", "4", "--format", "json"});
    CHECK(res.status == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["args"] == "theta");
    CHECK(j["N"] == 4);
    CHECK(j["values"]["1,1"] == "-2");
    CHECK(j["values"]["2,2"] == "4");
    CHECK(j["values"]["4,2"] == "0");
    CHECK(j["values"]["4,4"] == "16");
    CHECK(j["values"].size() == 10);
}

TEST_CASE("bench")
{
    auto res = run({"bench", "--max-n", "40", "--format", "json", "--repetitions", "2"});
    CHECK(res.status == 0);
    auto j = nlohmann::json::parse(res.out);
    REQUIRE(j.is_array());
    std::vector<std::string> stages;
    for (const auto& s : j) {
        stages.push_back(s["stage"]);
        CHECK(s["seconds"].is_number());
        CHECK(s["seconds"].get<double>() >= 0.0);
    }
    CHECK(stages == std::vector<std::string>{"rep_table", "theta_powers", "verify_theorem1"});
    CHECK(run({"bench", "--max-n", "0"}).status == cli::kExitUsage);
}
