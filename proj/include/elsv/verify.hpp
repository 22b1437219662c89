#pragma once

// Verification suites shared by the CLI and the test binaries.

#include "elsv/hodge.hpp"
#include "elsv/hurwitz.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace elsv {

enum class Suite { engines, elsv, burnside, grr, string, localization, all };
Suite parse_suite(std::string_view name);
std::string_view to_string(Suite s);

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Report {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    std::size_t failures() const;
    void add(std::string suite, std::string name, bool passed, std::string detail = {});
    void append(const Report& other);
};

/// Levels recovered by inversion, in the order they are computed.
const std::vector<std::pair<int, int>>& inverted_levels();

/// The seeded table extended by inversion at every level above, plus the
/// per-level fits.
struct ReferenceTable {
    HodgeTable table;
    std::vector<std::pair<std::pair<int, int>, Inversion>> inversions;

    const Inversion& inversion(int g, int h) const;
};
ReferenceTable build_reference_table(const Budgets& budgets, CharacterTableStore& store);

/// 5 samples per level not used by that level's fit.
std::vector<std::pair<int, Partition>> roundtrip_grid(const ReferenceTable& ref, std::size_t per_level = 5);

struct VerifyContext {
    Budgets budgets;
    CharacterTableStore* store = nullptr;
};

Report run_suite(Suite suite, const VerifyContext& ctx);

Report verify_engines(const VerifyContext& ctx, int max_d = 5, int max_r = 6);
Report verify_burnside(const VerifyContext& ctx, int max_d = 6, int max_r = 10);
Report verify_grr();
Report verify_string(const ReferenceTable& ref);
Report verify_elsv(const ReferenceTable& ref, const VerifyContext& ctx);
Report verify_localization(const ReferenceTable& ref);

} // namespace elsv
