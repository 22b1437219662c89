#include "elsv/config.hpp"

#include "elsv/error.hpp"

#include <fstream>

namespace elsv {

OutputFormat parse_format(std::string_view name) {
    if (name == "json")
        return OutputFormat::json;
    if (name == "csv")
        return OutputFormat::csv;
    if (name == "text")
        return OutputFormat::text;
    fail(ErrorCode::parse_error, "unknown output format '" + std::string(name) + "' (json, csv, text)");
}

std::string_view to_string(OutputFormat f) {
    switch (f) {
    case OutputFormat::json:
        return "json";
    case OutputFormat::csv:
        return "csv";
    case OutputFormat::text:
        break;
    }
    return "text";
}

namespace {

long long positive(const nlohmann::json& v, const std::string& key) {
    if (!v.is_number_integer())
        fail(ErrorCode::parse_error, "config key '" + key + "' must be an integer");
    const auto n = v.get<long long>();
    if (n <= 0)
        fail(ErrorCode::invalid_argument, "config key '" + key + "' must be positive");
    return n;
}

int positive_int(const nlohmann::json& v, const std::string& key) {
    const auto n = positive(v, key);
    if (n > 1'000'000)
        fail(ErrorCode::invalid_argument, "config key '" + key + "' is out of range");
    return static_cast<int>(n);
}

std::string text(const nlohmann::json& v, const std::string& key) {
    if (!v.is_string())
        fail(ErrorCode::parse_error, "config key '" + key + "' must be a string");
    return v.get<std::string>();
}

} // namespace

RunConfig parse_run_config(const nlohmann::json& doc, RunConfig base) {
    if (!doc.is_object())
        fail(ErrorCode::parse_error, "config must be a JSON object");
    for (const auto& [key, v] : doc.items()) {
        if (key == "dfs_node_budget")
            base.budgets.dfs_max_nodes = static_cast<std::uint64_t>(positive(v, key));
        else if (key == "dp_max_d")
            base.budgets.dp_max_d = positive_int(v, key);
        else if (key == "burnside_max_d")
            base.budgets.burnside_max_d = positive_int(v, key);
        else if (key == "cache_dir")
            base.cache_dir = text(v, key);
        else if (key == "format")
            base.format = parse_format(text(v, key));
        else if (key == "series_max_r")
            base.series_max_r = positive_int(v, key);
        else if (key == "series_max_d")
            base.series_max_d = positive_int(v, key);
        else
            fail(ErrorCode::parse_error, "unknown config key '" + key + "'");
    }
    return base;
}

RunConfig load_run_config(const std::filesystem::path& file, RunConfig base) {
    std::ifstream in(file);
    if (!in)
        fail(ErrorCode::invalid_argument, "cannot read config file " + file.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::parse_error, "config file " + file.string() + ": " + e.what());
    }
    return parse_run_config(doc, std::move(base));
}

nlohmann::json to_json(const RunConfig& c) {
    nlohmann::json j{{"dfs_node_budget", c.budgets.dfs_max_nodes},
                     {"dp_max_d", c.budgets.dp_max_d},
                     {"burnside_max_d", c.budgets.burnside_max_d},
                     {"format", std::string(to_string(c.format))},
                     {"series_max_r", c.series_max_r},
                     {"series_max_d", c.series_max_d}};
    if (c.cache_dir)
        j["cache_dir"] = c.cache_dir->string();
    return j;
}

} // namespace elsv
