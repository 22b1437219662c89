#include "elsv/symgroup.hpp"

#include "elsv/error.hpp"

#include <algorithm>
#include <fstream>
#include <utility>

namespace elsv {

BigInt dim_irrep(const Partition& nu) {
    const auto conj = nu.transpose();
    BigInt hooks = 1;
    for (int i = 0; i < nu.length(); ++i)
        for (int j = 0; j < nu[static_cast<std::size_t>(i)]; ++j)
            hooks *= (nu[static_cast<std::size_t>(i)] - j - 1) + (conj[static_cast<std::size_t>(j)] - i - 1) + 1;
    BigInt out = factorial(static_cast<unsigned>(nu.size()));
    out /= hooks;
    return out;
}

namespace {

// Memo keyed on (shape, remaining cycle lengths).
using MnKey = std::pair<std::vector<int>, std::vector<int>>;
using MnMemo = std::map<MnKey, std::int64_t>;

std::vector<int> to_beta(const std::vector<int>& shape) {
    const auto len = shape.size();
    std::vector<int> beta(len);
    for (std::size_t i = 0; i < len; ++i)
        beta[i] = shape[i] + static_cast<int>(len - 1 - i);
    return beta;
}

std::vector<int> from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const auto len = beta.size();
    std::vector<int> shape;
    for (std::size_t i = 0; i < len; ++i) {
        int part = beta[i] - static_cast<int>(len - 1 - i);
        if (part > 0)
            shape.push_back(part);
    }
    return shape;
}

std::int64_t mn(const std::vector<int>& shape, const std::vector<int>& cycles, std::size_t next, MnMemo& memo) {
    if (next == cycles.size())
        return shape.empty() ? 1 : 0;
    MnKey key{shape, std::vector<int>(cycles.begin() + static_cast<std::ptrdiff_t>(next), cycles.end())};
    if (auto it = memo.find(key); it != memo.end())
        return it->second;

    const int k = cycles[next];
    const auto beta = to_beta(shape);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - k;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end())
            continue;
        // Leg length of the removed rim hook: beads strictly between target and beta[i].
        int height = 0;
        for (int b : beta)
            if (b > target && b < beta[i])
                ++height;
        auto moved = beta;
        moved[i] = target;
        const auto value = mn(from_beta(std::move(moved)), cycles, next + 1, memo);
        total += (height % 2 ? -value : value);
    }
    memo.emplace(std::move(key), total);
    return total;
}

void check_character_degree(const Partition& nu, const Partition& mu) {
    if (nu.size() != mu.size())
        fail(ErrorCode::dimension_mismatch, "character: |nu| = " + std::to_string(nu.size()) +
                                                " differs from |mu| = " + std::to_string(mu.size()));
    if (nu.size() > kCharacterMaxDegree)
        fail(ErrorCode::resource_limit,
             "character: degree " + std::to_string(nu.size()) + " exceeds 64-bit ceiling " +
                 std::to_string(kCharacterMaxDegree));
}

} // namespace

std::int64_t character(const Partition& nu, const Partition& mu) {
    check_character_degree(nu, mu);
    MnMemo memo;
    return mn(nu.parts(), mu.parts(), 0, memo);
}

CharacterTable::CharacterTable(int d, std::vector<Partition> partitions, std::vector<std::int64_t> entries)
    : d_(d), partitions_(std::move(partitions)), entries_(std::move(entries)) {
    if (entries_.size() != partitions_.size() * partitions_.size())
        fail(ErrorCode::dimension_mismatch, "character table entries do not form a square matrix");
    for (std::size_t i = 0; i < partitions_.size(); ++i)
        index_.emplace(partitions_[i], i);
}

std::size_t CharacterTable::index_of(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end())
        fail(ErrorCode::dimension_mismatch,
             "partition (" + to_string(p) + ") is not a partition of " + std::to_string(d_));
    return it->second;
}

std::int64_t CharacterTable::value(const Partition& nu, const Partition& mu) const {
    return at(index_of(nu), index_of(mu));
}

void CharacterTable::verify_orthogonality() const {
    const auto n = size();
    std::vector<BigInt> weights;
    weights.reserve(n);
    for (const auto& mu : partitions_)
        weights.push_back(class_size(mu));
    const BigInt order = factorial(static_cast<unsigned>(d_));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            BigInt sum = 0;
            for (std::size_t c = 0; c < n; ++c)
                sum += weights[c] * BigInt(static_cast<long>(at(a, c))) * BigInt(static_cast<long>(at(b, c)));
            const BigInt expected = a == b ? order : BigInt(0);
            if (sum != expected)
                fail(ErrorCode::internal_consistency,
                     "character table for S_" + std::to_string(d_) + " fails row orthogonality at (" +
                         to_string(partitions_[a]) + "), (" + to_string(partitions_[b]) + ")");
        }
    }
}

bool CharacterTable::columns_orthogonal() const {
    const auto n = size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            BigInt sum = 0;
            for (std::size_t c = 0; c < n; ++c)
                sum += BigInt(static_cast<long>(at(c, a))) * BigInt(static_cast<long>(at(c, b)));
            if (sum != (a == b ? z(partitions_[a]) : BigInt(0)))
                return false;
        }
    }
    return true;
}

nlohmann::json CharacterTable::to_json() const {
    nlohmann::json doc;
    doc["format"] = "elsv-character-table";
    doc["version"] = kCharacterTableFormatVersion;
    doc["d"] = d_;
    auto parts = nlohmann::json::array();
    for (const auto& p : partitions_)
        parts.push_back(to_string(p));
    doc["partitions"] = std::move(parts);
    auto rows = nlohmann::json::array();
    for (std::size_t a = 0; a < size(); ++a) {
        auto row = nlohmann::json::array();
        for (std::size_t b = 0; b < size(); ++b)
            row.push_back(at(a, b));
        rows.push_back(std::move(row));
    }
    doc["matrix"] = std::move(rows);
    return doc;
}

CharacterTable CharacterTable::from_json(const nlohmann::json& doc) {
    try {
        if (doc.at("format") != "elsv-character-table" || doc.at("version") != kCharacterTableFormatVersion)
            fail(ErrorCode::parse_error, "character table document has unknown format or version");
        const int d = doc.at("d").get<int>();
        const auto canonical = partitions_of(d);
        const auto& listed = doc.at("partitions");
        if (listed.size() != canonical.size())
            fail(ErrorCode::parse_error, "character table partition list has wrong length");
        for (std::size_t i = 0; i < canonical.size(); ++i)
            if (parse_partition(listed[i].get<std::string>()) != canonical[i])
                fail(ErrorCode::parse_error, "character table partition list is not in canonical order");
        std::vector<std::int64_t> entries;
        const auto& rows = doc.at("matrix");
        if (rows.size() != canonical.size())
            fail(ErrorCode::parse_error, "character table matrix has wrong row count");
        for (const auto& row : rows) {
            if (row.size() != canonical.size())
                fail(ErrorCode::parse_error, "character table matrix row has wrong length");
            for (const auto& v : row)
                entries.push_back(v.get<std::int64_t>());
        }
        return CharacterTable(d, canonical, std::move(entries));
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::parse_error, std::string("malformed character table document: ") + e.what());
    }
}

CharacterTable build_table(int d, int max_d) {
    if (d < 1)
        fail(ErrorCode::invalid_argument, "build_table: d must be at least 1");
    if (d > max_d)
        fail(ErrorCode::resource_limit, "build_table: d = " + std::to_string(d) +
                                            " exceeds the character table ceiling " + std::to_string(max_d));
    auto parts = partitions_of(d);
    const auto n = parts.size();
    std::vector<std::int64_t> entries(n * n);
    MnMemo memo;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            entries[a * n + b] = mn(parts[a].parts(), parts[b].parts(), 0, memo);
    CharacterTable table(d, std::move(parts), std::move(entries));
    table.verify_orthogonality();
    return table;
}

CharacterTableStore::CharacterTableStore(std::optional<std::filesystem::path> cache_dir, int max_d)
    : dir_(std::move(cache_dir)), max_d_(max_d) {}

std::optional<std::filesystem::path> CharacterTableStore::cache_file(int d) const {
    if (!dir_)
        return std::nullopt;
    return *dir_ / ("chartable_d" + std::to_string(d) + ".v" + std::to_string(kCharacterTableFormatVersion) +
                    ".json");
}

const CharacterTable& CharacterTableStore::get(int d) {
    std::lock_guard lock(mutex_);
    if (auto it = tables_.find(d); it != tables_.end())
        return *it->second;
    if (d > max_d_)
        fail(ErrorCode::resource_limit, "character table for S_" + std::to_string(d) +
                                            " exceeds the configured ceiling " + std::to_string(max_d_));

    std::unique_ptr<CharacterTable> table;
    const auto file = cache_file(d);
    if (file && std::filesystem::exists(*file)) {
        try {
            std::ifstream in(*file);
            auto loaded = CharacterTable::from_json(nlohmann::json::parse(in));
            loaded.verify_orthogonality();
            if (loaded.degree() == d)
                table = std::make_unique<CharacterTable>(std::move(loaded));
        } catch (const Error&) {
        } catch (const nlohmann::json::exception&) {
        }
    }
    if (!table) {
        table = std::make_unique<CharacterTable>(build_table(d, max_d_));
        if (file) {
            std::error_code ec;
            std::filesystem::create_directories(file->parent_path(), ec);
            auto tmp = *file;
            tmp += ".tmp";
            {
                std::ofstream out(tmp);
                out << table->to_json().dump() << '\n';
            }
            std::filesystem::rename(tmp, *file, ec);
        }
    }
    return *tables_.emplace(d, std::move(table)).first->second;
}

} // namespace elsv
