#include "doctest.h"

#include "glsmx/cli.hpp"
#include "glsmx/errors.hpp"
#include "glsmx/graphs.hpp"

#include <fstream>
#include <sstream>

using namespace glsmx;
using nlohmann::json;

namespace {

const std::string configs = std::string(GLSMX_SOURCE_DIR) + "/configs";

cli::RunConfig config(const std::string& name)
{
    return cli::parse_config(cli::read_config_document(configs + "/" + name), configs);
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("sectors on the quintic LG model")
{
    cli::Report r = cli::run("sectors", config("quintic_lg.json"));
    CHECK(r.all_pass());
    const json& s = r.results["sectors"];
    REQUIRE(s.size() == 5);
    CHECK(s[0]["narrow"] == false);
    for (int m = 1; m < 5; ++m) CHECK(s[m]["narrow"] == true);
}

TEST_CASE("contract on the sample graph")
{
    cli::Report r = cli::run("contract", config("contract.json"));
    CHECK(r.all_pass());
    const json& bp = r.results["record"]["basepoints"];
    REQUIRE(bp.size() == 1);
    CHECK(bp[0]["host"] == 0);
    CHECK(bp[0]["order"] == 1);
    CHECK(bp[0]["mult"] == "3/5");
    CHECK(r.results["record"]["graph"]["vertices"].size() == 1);
}

TEST_CASE("every command reports passing checks on the sample configs")
{
    const std::pair<const char*, const char*> runs[] = {
        {"stability", "stability.json"}, {"graphs", "quintic_lg.json"},    {"aut", "contract.json"},
        {"order", "order.json"},         {"p1", "p1.json"},                {"ifun", "quintic_lg.json"},
        {"ifun", "quintic_geometric.json"}, {"mu", "quintic_geometric.json"}, {"edge", "quintic_geometric.json"},
        {"jwc", "quintic_geometric.json"},  {"jwc", "jwc_lg.json"}};
    for (const auto& [cmd, file] : runs) {
        CAPTURE(cmd);
        CAPTURE(file);
        cli::Report r = cli::run(cmd, config(file));
        CHECK(r.all_pass());
        CHECK(r.to_json()["command"] == cmd);
    }
}

TEST_CASE("reports are deterministic")
{
    for (const char* cmd : {"graphs", "ifun", "mu"}) {
        std::string a = cli::run(cmd, config("quintic_lg.json")).to_json().dump(2);
        std::string b = cli::run(cmd, config("quintic_lg.json")).to_json().dump(2);
        CHECK(a == b);
    }
}

TEST_CASE("graph files round-trip")
{
    for (const char* f : {"one_tail_graph.json", "order_example_top.json", "loc_graph.json"}) {
        std::string text = slurp(configs + "/" + f);
        CHECK(write_graph_json(read_graph_json(text)) == text);
    }
}

TEST_CASE("config errors")
{
    CHECK_THROWS_AS(cli::parse_config(json::array()), ConfigError);
    CHECK_THROWS_AS(cli::parse_config(json::parse(R"({"truncations": {"q_max": 0}})")), ConfigError);
    CHECK_THROWS_AS(cli::parse_config(json::parse(R"({"model": {"epsilon": 1.5}})")), ConfigError);
    CHECK_THROWS_AS(cli::run("nope", cli::parse_config(json::object())), ConfigError);
    CHECK_THROWS_AS(cli::run("edge", cli::parse_config(json::object())), ConfigError);
    CHECK_THROWS_AS(cli::read_config_document(configs + "/missing.json"), ConfigError);

    // a library error becomes a failed check
    cli::Report r = cli::run("edge", cli::parse_config(json::parse(R"({"params": {"delta": 1, "beta": 1}})")));
    CHECK_FALSE(r.all_pass());
    CHECK(r.checks.back().first_failure.find("DegreeViolation") != std::string::npos);
}
