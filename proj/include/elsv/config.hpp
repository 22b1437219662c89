#pragma once

#include "elsv/hurwitz.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <string_view>

namespace elsv {

enum class OutputFormat { json, csv, text };
OutputFormat parse_format(std::string_view name);
std::string_view to_string(OutputFormat f);

struct RunConfig {
    Budgets budgets;
    std::optional<std::filesystem::path> cache_dir;
    OutputFormat format = OutputFormat::text;
    int series_max_r = 10;
    int series_max_d = 6;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Keys: dfs_node_budget, dp_max_d, burnside_max_d, cache_dir, format,
/// series_max_r, series_max_d. Unknown keys, wrong types and non-positive
/// budgets raise Error(parse_error) or Error(invalid_argument).
RunConfig parse_run_config(const nlohmann::json& doc, RunConfig base = {});
RunConfig load_run_config(const std::filesystem::path& file, RunConfig base = {});
nlohmann::json to_json(const RunConfig& config);

} // namespace elsv
