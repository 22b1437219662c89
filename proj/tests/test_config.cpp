#include "elsv/config.hpp"
#include "elsv/error.hpp"
#include "elsv/verify.hpp"

#include <doctest.h>

using namespace elsv;
using nlohmann::json;

namespace {
ErrorCode code_of(const json& doc) {
    try {
        parse_run_config(doc);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("config accepted");
    return ErrorCode::internal_consistency;
}
} // namespace

TEST_CASE("run config parsing") {
    const auto c = parse_run_config(json{{"dfs_node_budget", 1000},
                                         {"dp_max_d", 6},
                                         {"burnside_max_d", 10},
                                         {"cache_dir", "/tmp/x"},
                                         {"format", "csv"},
                                         {"series_max_r", 8},
                                         {"series_max_d", 4}});
    CHECK(c.budgets.dfs_max_nodes == 1000);
    CHECK(c.budgets.dp_max_d == 6);
    CHECK(c.budgets.burnside_max_d == 10);
    CHECK(c.cache_dir == std::filesystem::path("/tmp/x"));
    CHECK(c.format == OutputFormat::csv);
    CHECK(c.series_max_r == 8);
    CHECK(c.series_max_d == 4);
    CHECK(parse_run_config(to_json(c)) == c);
    CHECK(parse_run_config(json::object()) == RunConfig{});
}

TEST_CASE("run config rejects bad input") {
    CHECK(code_of(json{{"dfs_budget", 5}}) == ErrorCode::parse_error);
    CHECK(code_of(json{{"dp_max_d", 0}}) == ErrorCode::invalid_argument);
    CHECK(code_of(json{{"burnside_max_d", -3}}) == ErrorCode::invalid_argument);
    CHECK(code_of(json{{"dfs_node_budget", "many"}}) == ErrorCode::parse_error);
    CHECK(code_of(json{{"format", "xml"}}) == ErrorCode::parse_error);
    CHECK(code_of(json::array()) == ErrorCode::parse_error);
}

TEST_CASE("suite names") {
    for (auto s : {Suite::engines, Suite::elsv, Suite::burnside, Suite::grr, Suite::string, Suite::localization,
                   Suite::all})
        CHECK(parse_suite(to_string(s)) == s);
    CHECK_THROWS_AS(parse_suite("everything"), Error);
}

TEST_CASE("grr suite report") {
    const auto r = verify_grr();
    CHECK(r.all_passed());
    CHECK(r.checks.size() == 5);
    CHECK(r.failures() == 0);
}

TEST_CASE("a failing check is reported, not thrown") {
    Report r;
    r.add("x", "ok", true);
    r.add("x", "bad", false, "detail");
    CHECK(r.failures() == 1);
    CHECK_FALSE(r.all_passed());
}
