// elsv: command-line front end.

#include "elsv/config.hpp"
#include "elsv/eqcoh.hpp"
#include "elsv/error.hpp"
#include "elsv/hodge.hpp"
#include "elsv/hurwitz.hpp"
#include "elsv/symgroup.hpp"
#include "elsv/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace elsv;

namespace {

using Clock = std::chrono::steady_clock;

struct Session {
    RunConfig config;
    bool timing = false;
    Clock::time_point start = Clock::now();
    std::unique_ptr<CharacterTableStore> store;

    CharacterTableStore& tables() {
        if (!store)
            store = std::make_unique<CharacterTableStore>(
                config.cache_dir, std::min(config.budgets.burnside_max_d, kCharacterMaxDegree));
        return *store;
    }
    double elapsed() const { return std::chrono::duration<double>(Clock::now() - start).count(); }
    std::string elapsed_text() const {
        std::ostringstream s;
        s.precision(3);
        s << std::fixed << elapsed() << "s";
        return s.str();
    }
};

// ---------------------------------------------------------------------------
// output helpers

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + "\"";
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// One record: a value plus metadata fields.
void emit_record(Session& s, const json& record) {
    json out = record;
    switch (s.config.format) {
    case OutputFormat::json:
        if (s.timing)
            out["elapsed_s"] = s.elapsed();
        std::cout << out.dump(2) << "\n";
        return;
    case OutputFormat::csv: {
        if (s.timing)
            out["elapsed_s"] = s.elapsed();
        std::string head, row;
        bool first = true;
        for (const auto& [k, v] : out.items()) {
            head += (first ? "" : ",") + k;
            row += (first ? "" : ",") + csv_field(scalar_text(v));
            first = false;
        }
        std::cout << head << "\n" << row << "\n";
        return;
    }
    case OutputFormat::text: {
        std::cout << scalar_text(out.at("value")) << "\n#";
        for (const auto& [k, v] : out.items())
            if (k != "value")
                std::cout << " " << k << "=" << scalar_text(v);
        std::cout << " elapsed=" << s.elapsed_text() << "\n";
        return;
    }
    }
}

// Rows sharing a header.
void emit_rows(Session& s, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
               const json& meta) {
    switch (s.config.format) {
    case OutputFormat::json: {
        json doc = meta;
        json arr = json::array();
        for (const auto& r : rows) {
            json o;
            for (std::size_t k = 0; k < header.size(); ++k)
                o[header[k]] = r[k];
            arr.push_back(o);
        }
        doc["rows"] = arr;
        if (s.timing)
            doc["elapsed_s"] = s.elapsed();
        std::cout << doc.dump(2) << "\n";
        return;
    }
    case OutputFormat::csv: {
        for (std::size_t k = 0; k < header.size(); ++k)
            std::cout << (k ? "," : "") << csv_field(header[k]);
        std::cout << "\n";
        for (const auto& r : rows) {
            for (std::size_t k = 0; k < r.size(); ++k)
                std::cout << (k ? "," : "") << csv_field(r[k]);
            std::cout << "\n";
        }
        return;
    }
    case OutputFormat::text: {
        std::vector<std::size_t> width(header.size(), 0);
        for (const auto& r : rows)
            for (std::size_t k = 0; k < r.size(); ++k)
                width[k] = std::max(width[k], r[k].size());
        for (const auto& r : rows) {
            std::string line;
            for (std::size_t k = 0; k < r.size(); ++k) {
                line += (k ? "  " : "") + r[k];
                if (k + 1 < r.size())
                    line += std::string(width[k] - r[k].size(), ' ');
            }
            std::cout << line << "\n";
        }
        std::cout << "#";
        for (const auto& [k, v] : meta.items())
            std::cout << " " << k << "=" << scalar_text(v);
        std::cout << " elapsed=" << s.elapsed_text() << "\n";
        return;
    }
    }
}

// ---------------------------------------------------------------------------
// Hodge table persistence

std::optional<fs::path> hodge_file(const Session& s) {
    if (!s.config.cache_dir)
        return std::nullopt;
    return *s.config.cache_dir / "hodge_table.json";
}

HodgeTable load_hodge(const Session& s) {
    auto file = hodge_file(s);
    if (!file || !fs::exists(*file))
        return HodgeTable{};
    std::ifstream in(*file);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::parse_error, "corrupt Hodge table " + file->string() + ": " + e.what());
    }
    return hodge_import(doc);
}

void save_hodge(const Session& s, const HodgeTable& table) {
    auto file = hodge_file(s);
    if (!file)
        return;
    fs::create_directories(file->parent_path());
    auto tmp = *file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << hodge_export(table).dump(2) << "\n";
        if (!out)
            fail(ErrorCode::invalid_argument, "cannot write " + tmp.string());
    }
    fs::rename(tmp, *file);
}

// Returns true when the level had to be inverted.
bool ensure_level(Session& s, HodgeTable& table, int g, int h) {
    require_stable(g, h);
    if (table.has_level(g, h))
        return false;
    elsv_invert_into(table, g, h, s.config.budgets, s.tables());
    return true;
}

// ---------------------------------------------------------------------------
// commands

struct QueryArgs {
    std::optional<int> genus;
    std::optional<int> euler;
    std::string partition;
    std::string engine = "burnside";
    bool series = false;
};

json hurwitz_record(Session& s, const QueryArgs& q) {
    const Engine engine = parse_engine(q.engine);
    const Partition mu = parse_partition(q.partition);
    json rec;
    if (q.series) {
        const auto kind = q.genus ? SeriesKind::connected : natural_kind(engine);
        const auto series = phi_series(mu, engine, s.config.series_max_r, kind, s.config.budgets, s.tables());
        std::string text;
        for (const auto& [e, c] : series)
            text += (text.empty() ? "" : " + ") + to_string(c) + " lambda^" + std::to_string(e);
        rec["value"] = text.empty() ? "0" : text;
        rec["kind"] = kind == SeriesKind::connected ? "connected" : "disconnected";
        rec["partition"] = to_string(mu);
        rec["max_r"] = s.config.series_max_r;
        rec["engine"] = std::string(to_string(engine));
        return rec;
    }
    if (q.genus) {
        const int r = branch_points_connected(*q.genus, mu);
        rec["value"] = to_string(connected(*q.genus, mu, engine, s.config.budgets, s.tables()));
        rec["kind"] = "connected";
        rec["genus"] = *q.genus;
        rec["partition"] = to_string(mu);
        rec["r"] = r;
    } else {
        const int r = branch_points_disconnected(*q.euler, mu);
        rec["value"] = to_string(disconnected(*q.euler, mu, engine, s.config.budgets, s.tables()));
        rec["kind"] = "disconnected";
        rec["euler"] = *q.euler;
        rec["partition"] = to_string(mu);
        rec["r"] = r;
    }
    rec["d"] = mu.size();
    rec["h"] = mu.length();
    rec["engine"] = std::string(to_string(engine));
    return rec;
}

int cmd_hurwitz(Session& s, const QueryArgs& q) {
    if (q.genus.has_value() == q.euler.has_value())
        fail(ErrorCode::invalid_query, "give exactly one of --genus (connected) or --euler (disconnected)");
    emit_record(s, hurwitz_record(s, q));
    return 0;
}

int cmd_hodge(Session& s, int g, int h) {
    require_stable(g, h);
    HodgeTable table = load_hodge(s);
    const bool inverted = ensure_level(s, table, g, h);
    if (inverted)
        save_hodge(s, table);
    std::vector<std::vector<std::string>> rows;
    for (const auto& b : brackets_for(g, h)) {
        const auto& e = table.entries().at(b);
        rows.push_back({to_string(b), pretty(b), to_string(e.value), std::string(to_string(e.provenance))});
    }
    json meta{{"genus", g}, {"marks", h}, {"entries", rows.size()}};
    if (auto f = hodge_file(s))
        meta["table"] = f->string();
    emit_rows(s, {"bracket", "integral", "value", "provenance"}, rows, meta);
    return 0;
}

json elsv_record(Session& s, HodgeTable& table, int g, const std::string& partition, const std::string& method,
                 bool& dirty) {
    const Partition mu = parse_partition(partition);
    if (mu.empty())
        fail(ErrorCode::invalid_query, "partition must be nonempty");
    dirty = ensure_level(s, table, g, mu.length()) || dirty;
    json rec;
    if (method == "elsv")
        rec["value"] = to_string(elsv_evaluate(g, mu, table));
    else if (method == "localization")
        rec["value"] = to_string(elsv_via_localization(g, mu, table));
    else
        fail(ErrorCode::parse_error, "unknown method '" + method + "' (elsv, localization)");
    rec["genus"] = g;
    rec["partition"] = to_string(mu);
    rec["r"] = branch_points_connected(g, mu);
    rec["d"] = mu.size();
    rec["h"] = mu.length();
    rec["method"] = method;
    return rec;
}

int cmd_elsv(Session& s, int g, const std::string& partition, const std::string& method) {
    HodgeTable table = load_hodge(s);
    bool dirty = false;
    auto rec = elsv_record(s, table, g, partition, method, dirty);
    if (dirty)
        save_hodge(s, table);
    emit_record(s, rec);
    return 0;
}

int cmd_verify(Session& s, const std::string& suite) {
    const Suite which = parse_suite(suite);
    VerifyContext ctx{s.config.budgets, &s.tables()};
    const Report report = run_suite(which, ctx);
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : report.checks)
        rows.push_back({c.passed ? "PASS" : "FAIL", c.suite, c.name, c.detail});
    if (s.config.format == OutputFormat::text) {
        for (const auto& r : rows)
            std::cout << r[0] << " [" << r[1] << "] " << r[2] << ": " << r[3] << "\n";
        std::cout << "# suite=" << suite << " checks=" << report.checks.size() << " failed=" << report.failures()
                  << " elapsed=" << s.elapsed_text() << "\n";
    } else {
        emit_rows(s, {"status", "suite", "check", "detail"}, rows,
                  json{{"suite", suite}, {"checks", report.checks.size()}, {"failed", report.failures()}});
    }
    return report.all_passed() ? 0 : static_cast<int>(ErrorKind::internal_consistency);
}

int cmd_chartable(Session& s, int d) {
    if (d < 1)
        fail(ErrorCode::invalid_argument, "degree must be positive");
    const auto& t = s.tables().get(d);
    std::vector<std::string> header{"irrep"};
    for (const auto& mu : t.partitions())
        header.push_back(to_string(mu));
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < t.size(); ++i) {
        std::vector<std::string> r{to_string(t.partitions()[i])};
        for (std::size_t j = 0; j < t.size(); ++j)
            r.push_back(std::to_string(t.at(i, j)));
        rows.push_back(std::move(r));
    }
    json meta{{"degree", d}, {"classes", t.size()}};
    if (auto f = s.tables().cache_file(d))
        meta["cache"] = f->string();
    if (s.config.format == OutputFormat::json) {
        std::cout << nlohmann::ordered_json(t.to_json()).dump(2) << "\n";
        return 0;
    }
    if (s.config.format == OutputFormat::text) {
        header[0] = "irrep\\class";
        rows.insert(rows.begin(), header);
    }
    emit_rows(s, header, rows, meta);
    return 0;
}

int cmd_export(Session& s, const std::string& what, int degree, const std::string& output) {
    nlohmann::ordered_json doc;
    if (what == "hodge") {
        doc = hodge_export(load_hodge(s));
    } else if (what == "chartable") {
        if (degree < 1)
            fail(ErrorCode::invalid_argument, "export chartable needs --degree >= 1");
        doc = s.tables().get(degree).to_json();
    } else if (what == "series") {
        // Disconnected numbers H*_{chi,mu}, keyed by (mu, e) with e = r - |mu|.
        doc["format"] = "elsv-hurwitz-series";
        doc["version"] = 1;
        doc["kind"] = "disconnected";
        doc["max_r"] = s.config.series_max_r;
        doc["max_d"] = s.config.series_max_d;
        auto terms = nlohmann::ordered_json::array();
        for (int d = 1; d <= s.config.series_max_d; ++d) {
            for (const auto& mu : partitions_of(d)) {
                const auto coeffs = disconnected_burnside_series(mu, s.config.series_max_r, s.tables(), s.config.budgets);
                for (int r = 0; r <= s.config.series_max_r; ++r) {
                    const auto& v = coeffs[static_cast<std::size_t>(r)];
                    if (v != 0)
                        terms.push_back({{"partition", to_string(mu)}, {"exponent", r - d}, {"r", r},
                                         {"value", to_string(v)}});
                }
            }
        }
        doc["terms"] = terms;
    } else {
        fail(ErrorCode::parse_error, "unknown export target '" + what + "' (hodge, chartable, series)");
    }
    if (output.empty() || output == "-") {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream out(output);
        out << doc.dump(2) << "\n";
        if (!out)
            fail(ErrorCode::invalid_argument, "cannot write " + output);
    }
    return 0;
}

json error_json(const Error& e) {
    return json{{"code", e.exit_code()}, {"message", e.what()}};
}

int cmd_batch(Session& s, const std::string& input) {
    nlohmann::json doc;
    try {
        if (input == "-") {
            std::cin >> doc;
        } else {
            std::ifstream in(input);
            if (!in)
                fail(ErrorCode::invalid_argument, "cannot read batch file " + input);
            in >> doc;
        }
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::parse_error, std::string("batch input: ") + e.what());
    }
    const auto& items = doc.is_object() && doc.contains("queries") ? doc["queries"] : doc;
    if (!items.is_array())
        fail(ErrorCode::parse_error, "batch input must be an array of queries or {\"queries\": [...]}");

    HodgeTable table = load_hodge(s);
    bool dirty = false;
    int worst = 0;
    json results = json::array();
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto& item = items[i];
        json res{{"index", i}, {"query", json::parse(items[i].dump())}};
        try {
            if (!item.is_object() || !item.contains("op") || !item["op"].is_string())
                fail(ErrorCode::parse_error, "query needs a string field 'op'");
            const auto op = item["op"].get<std::string>();
            auto get_int = [&](const char* k) -> std::optional<int> {
                if (!item.contains(k))
                    return std::nullopt;
                if (!item[k].is_number_integer())
                    fail(ErrorCode::parse_error, std::string("field '") + k + "' must be an integer");
                return item[k].get<int>();
            };
            auto get_str = [&](const char* k, std::string dflt) {
                if (!item.contains(k))
                    return dflt;
                if (!item[k].is_string())
                    fail(ErrorCode::parse_error, std::string("field '") + k + "' must be a string");
                return item[k].get<std::string>();
            };
            json rec;
            if (op == "hurwitz") {
                QueryArgs q{get_int("genus"), get_int("euler"), get_str("partition", ""),
                            get_str("engine", "burnside"), false};
                if (q.genus.has_value() == q.euler.has_value())
                    fail(ErrorCode::invalid_query, "hurwitz query needs exactly one of genus, euler");
                rec = hurwitz_record(s, q);
            } else if (op == "elsv" || op == "localization") {
                auto g = get_int("genus");
                if (!g)
                    fail(ErrorCode::invalid_query, op + " query needs genus");
                rec = elsv_record(s, table, *g, get_str("partition", ""), op, dirty);
            } else if (op == "hodge") {
                auto g = get_int("genus");
                auto h = get_int("marks");
                if (!g || !h)
                    fail(ErrorCode::invalid_query, "hodge query needs genus and marks");
                dirty = ensure_level(s, table, *g, *h) || dirty;
                json entries = json::array();
                for (const auto& b : brackets_for(*g, *h))
                    entries.push_back({{"bracket", to_string(b)}, {"value", to_string(table.at(b))}});
                rec["value"] = entries;
            } else {
                fail(ErrorCode::parse_error, "unknown op '" + op + "'");
            }
            res["ok"] = true;
            for (const auto& [k, v] : rec.items())
                res[k] = v;
        } catch (const Error& e) {
            res["ok"] = false;
            res["error"] = error_json(e);
            worst = std::max(worst, e.exit_code());
        }
        results.push_back(res);
    }
    if (dirty)
        save_hodge(s, table);
    json out{{"results", results}};
    if (s.timing)
        out["elapsed_s"] = s.elapsed();
    std::cout << out.dump(2) << "\n";
    return worst;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hurwitz numbers, linear Hodge integrals and the ELSV formula"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<std::string> format, cache_dir, config_file;
    std::optional<std::uint64_t> dfs_nodes;
    std::optional<int> dp_max_d, burnside_max_d;
    bool timing = false;
    app.add_option("--format", format, "Output format: json, csv or text");
    app.add_option("--cache-dir", cache_dir, "Directory for character and Hodge tables (default $ELSV_CACHE_DIR)");
    app.add_option("--config", config_file, "JSON run configuration");
    app.add_option("--budget-dfs-nodes", dfs_nodes, "Node budget of the DFS engine");
    app.add_option("--budget-dp-max-d", dp_max_d, "Largest degree for the DP engine");
    app.add_option("--budget-burnside-max-d", burnside_max_d, "Largest degree for character tables");
    app.add_flag("--timing", timing, "Include elapsed time in json/csv output");

    QueryArgs q;
    auto* hurwitz = app.add_subcommand("hurwitz", "Hurwitz numbers (connected by genus, disconnected by Euler characteristic)");
    hurwitz->add_option("--genus", q.genus, "Genus g (connected count)");
    hurwitz->add_option("--euler", q.euler, "Euler characteristic chi (disconnected count)");
    hurwitz->add_option("--partition", q.partition, "Ramification over infinity, e.g. 3,2,1")->required();
    hurwitz->add_option("--engine", q.engine, "dfs, dp or burnside");
    hurwitz->add_flag("--series", q.series, "Print the lambda series up to series_max_r");

    int genus = 0, marks = 0;
    auto* hodge = app.add_subcommand("hodge", "Linear Hodge integrals on M_{g,h} by ELSV inversion");
    hodge->add_option("--genus", genus, "Genus")->required();
    hodge->add_option("--marks", marks, "Number of marked points")->required();

    std::string partition, method = "elsv";
    auto* elsv_cmd = app.add_subcommand("elsv", "Evaluate the ELSV formula");
    elsv_cmd->add_option("--genus", genus, "Genus")->required();
    elsv_cmd->add_option("--partition", partition, "Partition, e.g. 2,1,1")->required();
    elsv_cmd->add_option("--method", method, "elsv (Hodge table) or localization");

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", suite, "engines, elsv, burnside, grr, string, localization or all");

    int degree = 0;
    auto* chartable = app.add_subcommand("chartable", "Build and cache the character table of S_d");
    chartable->add_option("--degree", degree, "d")->required();

    std::string what, output;
    auto* exp = app.add_subcommand("export", "Export tables as JSON");
    exp->add_option("what", what, "hodge, chartable or series")->required();
    exp->add_option("--degree", degree, "Degree for chartable");
    exp->add_option("--output,-o", output, "Output file (default stdout)");

    std::string input = "-";
    auto* batch = app.add_subcommand("batch", "Run a JSON list of queries");
    batch->add_option("--input,-i", input, "Batch file, or - for stdin");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return static_cast<int>(ErrorKind::domain);
    }

    try {
        Session s;
        if (const char* env = std::getenv("ELSV_CACHE_DIR"); env && *env)
            s.config.cache_dir = fs::path(env);
        if (config_file)
            s.config = load_run_config(*config_file, s.config);
        if (format)
            s.config.format = parse_format(*format);
        if (cache_dir)
            s.config.cache_dir = fs::path(*cache_dir);
        if (dfs_nodes)
            s.config = parse_run_config(nlohmann::json{{"dfs_node_budget", *dfs_nodes}}, s.config);
        if (dp_max_d)
            s.config = parse_run_config(nlohmann::json{{"dp_max_d", *dp_max_d}}, s.config);
        if (burnside_max_d)
            s.config = parse_run_config(nlohmann::json{{"burnside_max_d", *burnside_max_d}}, s.config);
        s.timing = timing;

        if (*hurwitz)
            return cmd_hurwitz(s, q);
        if (*hodge)
            return cmd_hodge(s, genus, marks);
        if (*elsv_cmd)
            return cmd_elsv(s, genus, partition, method);
        if (*verify)
            return cmd_verify(s, suite);
        if (*chartable)
            return cmd_chartable(s, degree);
        if (*exp)
            return cmd_export(s, what, degree, output);
        if (*batch)
            return cmd_batch(s, input);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return static_cast<int>(ErrorKind::internal_consistency);
    }
    return 0;
}
