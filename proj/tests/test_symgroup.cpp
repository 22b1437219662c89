#include "elsv/error.hpp"
#include "elsv/symgroup.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace elsv;
namespace fs = std::filesystem;

TEST_CASE("dim_irrep examples and tableau counts") {
    for (int d = 1; d <= 9; ++d)
        CHECK(dim_irrep(Partition::row(d)) == 1);
    CHECK(dim_irrep(Partition{2, 1}) == 2);
    CHECK(dim_irrep(Partition{2, 2}) == 2);
    for (int d = 1; d <= 9; ++d)
        for (const auto& nu : partitions_of(d))
            CHECK(dim_irrep(nu) == oracle::syt_count(nu.parts()));
}

TEST_CASE("character examples") {
    CHECK(character(Partition{1, 1, 1}, Partition{2, 1}) == -1);
    CHECK(character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(character(Partition{2, 1}, Partition{3}) == -1);
    CHECK_THROWS_AS(character(Partition{2, 1}, Partition{2}), Error);
    try {
        character(Partition{2, 1}, Partition{2});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::dimension_mismatch);
    }
}

TEST_CASE("Murnaghan-Nakayama agrees with permutation-module traces") {
    for (int d = 1; d <= 5; ++d) {
        const auto chi = oracle::characters_via_tabloids(d);
        for (const auto& nu : partitions_of(d))
            for (const auto& mu : partitions_of(d))
                CHECK(character(nu, mu) == chi.at({nu.parts(), mu.parts()}));
    }
}

TEST_CASE("trivial, sign and dimension columns") {
    for (int d = 1; d <= 8; ++d)
        for (const auto& mu : partitions_of(d)) {
            CHECK(character(Partition::row(d), mu) == 1);
            CHECK(character(Partition::column(d), mu) == ((d - mu.length()) % 2 ? -1 : 1));
            CHECK(character(mu, Partition::column(d)) == dim_irrep(mu));
        }
}

TEST_CASE("build_table examples") {
    const auto t1 = build_table(1);
    CHECK(t1.size() == 1);
    CHECK(t1.at(0, 0) == 1);

    const auto t2 = build_table(2);
    CHECK(t2.partitions() == std::vector<Partition>{{2}, {1, 1}});
    // columns in canonical order: (2), (1,1)
    CHECK(t2.value(Partition{2}, Partition{1, 1}) == 1);
    CHECK(t2.value(Partition{2}, Partition{2}) == 1);
    CHECK(t2.value(Partition{1, 1}, Partition{1, 1}) == 1);
    CHECK(t2.value(Partition{1, 1}, Partition{2}) == -1);

    const auto t3 = build_table(3);
    long sum = 0;
    for (std::size_t i = 0; i < t3.size(); ++i)
        sum += t3.dimension(i) * t3.dimension(i);
    CHECK(sum == 6);
}

TEST_CASE("orthogonality up to d = 8") {
    for (int d = 1; d <= 8; ++d) {
        const auto t = build_table(d);
        CHECK_NOTHROW(t.verify_orthogonality());
        CHECK(t.columns_orthogonal());
        BigInt s = 0;
        for (std::size_t i = 0; i < t.size(); ++i)
            s += BigInt(t.dimension(i)) * t.dimension(i);
        CHECK(s == oracle::fact(d));
    }
}

TEST_CASE("a corrupted table fails orthogonality") {
    auto doc = build_table(4).to_json();
    doc["matrix"][0][0] = doc["matrix"][0][0].get<long>() + 1;
    CHECK_THROWS(CharacterTable::from_json(doc).verify_orthogonality());
}

TEST_CASE("table limits") {
    try {
        build_table(15);
        FAIL("expected a resource limit");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::resource_limit);
    }
}

TEST_CASE("disk cache round trip") {
    const auto dir = fs::temp_directory_path() / "elsv_test_chartable_cache";
    fs::remove_all(dir);
    {
        CharacterTableStore store(dir);
        const auto& t = store.get(5);
        CHECK(t == build_table(5));
        REQUIRE(store.cache_file(5));
        CHECK(fs::exists(*store.cache_file(5)));
        CHECK(store.cache_file(5)->filename() == "chartable_d5.v1.json");
    }
    {
        CharacterTableStore fresh(dir);
        CHECK(fresh.get(5) == build_table(5));
    }
    // A damaged cache file is rebuilt, never trusted.
    {
        std::ofstream(dir / "chartable_d5.v1.json") << "{\"format\": \"elsv-character-table\", \"version\": 1}";
        CharacterTableStore fresh(dir);
        CHECK(fresh.get(5) == build_table(5));
    }
    fs::remove_all(dir);
}

TEST_CASE("json round trip") {
    for (int d = 1; d <= 6; ++d) {
        const auto t = build_table(d);
        CHECK(CharacterTable::from_json(t.to_json()) == t);
    }
}
