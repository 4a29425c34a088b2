#include <doctest.h>

#include "helpers.hpp"
#include "msr/codefile.hpp"
#include "msr/search.hpp"
#include "oracles.hpp"

using namespace msr;
using msr::test::brute_force_count_42;
using msr::test::gaussian_binomial_formula;

namespace {

unsigned long long gl2_order(int q) {
    return static_cast<unsigned long long>(q * q - 1) * static_cast<unsigned long long>(q * q - q);
}

SearchConfig config_for(int n, int k, int p, int m = 1) {
    SearchConfig c;
    c.params = CodeParameters::make(n, k);
    c.field = Field::make(p, m);
    return c;
}

}  // namespace

TEST_CASE("search over GF(2) at (4,2): the walkthrough code exists there") {
    auto config = config_for(4, 2, 2);
    config.limit = 0;
    auto report = run_search(config);

    CHECK(report.a_candidates == gaussian_binomial_formula(2, 4, 2));  // 35
    CHECK(report.a_independent == 8);
    CHECK(report.y_candidates == 24);
    CHECK(report.codes_found == 24);
    CHECK(report.emitted.size() == 24);

    // One of the emissions is exactly the walkthrough code.
    auto gf2 = config.field;
    bool seen = false;
    for (const auto& seed : report.emitted)
        if (seed.base == FieldMatrix::from_rows(gf2, {{1, 0, 0, 0}, {0, 1, 1, 0}}) &&
            seed.b[0] == FieldMatrix::from_rows(gf2, {{1, 0}}) &&
            seed.b[1] == FieldMatrix::from_rows(gf2, {{1, 0}}) &&
            seed.b[2] == FieldMatrix::from_rows(gf2, {{0, 1}}))
            seen = true;
    CHECK(seen);
}

TEST_CASE("every emitted seed re-verifies through both routes") {
    for (int q : {2, 3}) {
        auto config = config_for(4, 2, q);
        config.limit = 0;
        auto report = run_search(config);
        REQUIRE(report.codes_found > 0);
        for (const auto& seed : report.emitted) {
            REQUIRE(check_independence_symmetric(seed).ok);
            REQUIRE(check_recovery_symmetric(seed).has_value());
            auto verdict = verify(expand(seed));
            REQUIRE(verdict.independent);
            REQUIRE(verdict.recoverable);
        }
    }
}

TEST_CASE("reduction-free brute force agrees with the reduced search") {
    for (int q : {2, 3}) {
        CAPTURE(q);
        auto config = config_for(4, 2, q);
        config.limit = 0;
        auto report = run_search(config);
        const auto brute = brute_force_count_42(config.field);
        REQUIRE((brute > 0) == (report.codes_found > 0));
        // Raw codes come in one row-transform orbit per canonical code.
        REQUIRE(brute == report.codes_found * gl2_order(q));
    }
}

TEST_CASE("search statistics for (4,2) over GF(3)") {
    auto config = config_for(4, 2, 3);
    auto report = run_search(config);
    CHECK(report.a_candidates == 130);
    CHECK(report.a_independent == 32);
    CHECK(report.independence_fraction() == Rational(16, 65));
    CHECK(report.recovery_fraction() == Rational(1));
    CHECK(report.a_recoverable == 32);
    CHECK(report.emitted.size() == 10);  // default cap
    CHECK(report.codes_found == 128);    // counting continues past the cap
}

TEST_CASE("no (5,3) codes over GF(2), with nullity-starved helpers observed") {
    auto config = config_for(5, 3, 2);
    auto report = run_search(config);
    CHECK(report.a_candidates == gaussian_binomial_formula(2, 6, 2));  // 651
    CHECK(report.codes_found == 0);
    CHECK(report.emitted.empty());
    CHECK(report.y_nullity_aborts > 0);
    CHECK(report.y_candidates == report.a_independent * gaussian_binomial_formula(2, 4, 2));
}

TEST_CASE("sharding partitions the range and merging reproduces the whole") {
    auto config = config_for(5, 3, 3);
    auto shards = shard(config, 4);
    REQUIRE(shards.size() == 4);
    CHECK(shards[0].a_range == std::pair<std::uint64_t, std::uint64_t>{0, 2753});
    CHECK(shards[1].a_range == std::pair<std::uint64_t, std::uint64_t>{2753, 5506});
    CHECK(shards[2].a_range == std::pair<std::uint64_t, std::uint64_t>{5506, 8259});
    CHECK(shards[3].a_range == std::pair<std::uint64_t, std::uint64_t>{8259, 11011});

    auto small = config_for(4, 2, 3);
    small.limit = 0;
    auto whole = run_search(small);
    std::vector<SearchReport> parts;
    for (const auto& piece : shard(small, 3)) parts.push_back(run_search(piece));
    auto merged = merge_reports(parts);
    CHECK(merged.a_candidates == whole.a_candidates);
    CHECK(merged.a_independent == whole.a_independent);
    CHECK(merged.a_recoverable == whole.a_recoverable);
    CHECK(merged.y_candidates == whole.y_candidates);
    CHECK(merged.codes_found == whole.codes_found);
    CHECK(merged.emitted.size() == whole.emitted.size());

    auto one = merge_reports({whole});
    CHECK(one.codes_found == whole.codes_found);

    auto parallel = run_search_parallel(small, 3);
    CHECK(parallel.codes_found == whole.codes_found);
    CHECK(parallel.emitted.size() == whole.emitted.size());
}

TEST_CASE("merging mixed configurations is rejected") {
    auto a = run_search(config_for(4, 2, 2));
    auto b = run_search(config_for(4, 2, 3));
    CHECK_THROWS_AS(merge_reports({a, b}), ConfigError);
    CHECK_THROWS_AS(merge_reports({}), ConfigError);
}

TEST_CASE("invalid configurations are rejected") {
    SearchConfig config;
    config.params.n = 3;
    config.params.k = 3;
    config.field = Field::make(3);
    CHECK_THROWS_AS(run_search(config), InvalidParametersError);

    auto random_forever = config_for(4, 2, 3);
    random_forever.mode = SearchMode::random;
    random_forever.limit = 0;
    CHECK_THROWS_AS(run_search(random_forever), ConfigError);

    auto bad_range = config_for(4, 2, 3);
    bad_range.a_range = {{0, 1000}};
    CHECK_THROWS_AS(run_search(bad_range), ConfigError);

    CHECK_THROWS_AS(shard(config_for(4, 2, 3), 0), ConfigError);
    auto rnd = config_for(4, 2, 3);
    rnd.mode = SearchMode::random;
    rnd.limit = 1;
    CHECK_THROWS_AS(shard(rnd, 2), ConfigError);
}

TEST_CASE("random mode is deterministic and emits verified codes") {
    auto config = config_for(4, 2, 5);
    config.mode = SearchMode::random;
    config.rng_seed = 42;
    config.limit = 3;
    auto first = run_search(config);
    auto second = run_search(config);
    CHECK(first.emitted.size() == 3);
    CHECK(first.a_candidates == second.a_candidates);
    CHECK(first.codes_found == second.codes_found);
    REQUIRE(first.emitted.size() == second.emitted.size());
    for (std::size_t i = 0; i < first.emitted.size(); ++i) {
        CHECK(first.emitted[i].base == second.emitted[i].base);
        CHECK(first.emitted[i].b == second.emitted[i].b);
        auto verdict = verify(expand(first.emitted[i]));
        REQUIRE(verdict.independent);
        REQUIRE(verdict.recoverable);
    }

    auto budget = config_for(4, 2, 5);
    budget.mode = SearchMode::random;
    budget.rng_seed = 7;
    budget.max_samples = 100;
    budget.limit = 0;
    auto sampled = run_search(budget);
    CHECK(sampled.a_candidates == 100);
}

TEST_CASE("the search rediscovers the published (5,3) GF(3) code") {
    auto gf3 = Field::make(3);
    auto config = config_for(5, 3, 3);
    config.limit = 0;

    // Locate the published base inside the canonical enumeration and search
    // just that slot.
    const auto target = FieldMatrix::from_rows(gf3, {{1, 0, 1, 0, 0, 0}, {0, 1, 1, 0, 0, 1}});
    RrefEnumerator en(gf3, 2, 6);
    std::uint64_t index = en.size();
    for (std::uint64_t i = 0; i < en.size(); ++i)
        if (en.at(i) == target) {
            index = i;
            break;
        }
    REQUIRE(index < en.size());
    config.a_range = {{index, index + 1}};
    auto report = run_search(config);
    REQUIRE(report.codes_found > 0);

    auto normalized = [&](const FieldMatrix& row) {
        for (int j = 0; j < row.cols(); ++j)
            if (row(0, j) != 0) {
                auto scaled = row;
                const auto inv = gf3->inv(row(0, j));
                for (int c = 0; c < row.cols(); ++c) scaled(0, c) = gf3->mul(row(0, c), inv);
                return scaled;
            }
        return row;
    };
    const std::vector<FieldMatrix> published = {
        FieldMatrix::from_rows(gf3, {{2, 1}}), FieldMatrix::from_rows(gf3, {{1, 0}}),
        FieldMatrix::from_rows(gf3, {{0, 1}}), FieldMatrix::from_rows(gf3, {{1, 1}})};

    const SymmetricSeed* match = nullptr;
    for (const auto& seed : report.emitted) {
        bool same = true;
        for (int t = 0; t < 4 && same; ++t)
            same = normalized(seed.b[static_cast<std::size_t>(t)]) == normalized(published[static_cast<std::size_t>(t)]);
        if (same) match = &seed;
    }
    REQUIRE(match != nullptr);

    // Its systematic form repairs node 1 through the same row space as the
    // published systematic table.
    auto [sys, t] = to_systematic(expand(*match));
    std::vector<FieldMatrix> rows;
    for (int i = 1; i < 5; ++i)
        rows.push_back(sys.transmission(i, 0) * sys.storage[static_cast<std::size_t>(i)]);
    const auto published_stack = FieldMatrix::from_rows(
        gf3, {{0, 0, 2, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {1, 2, 1, 2, 1, 0}, {1, 0, 2, 1, 1, 0}});
    CHECK(rref(vstack(rows)).matrix == rref(published_stack).matrix);
}

TEST_CASE("the A-stage counters do not depend on the Y-stage") {
    auto config = config_for(4, 2, 3);
    config.limit = 1;
    auto capped = run_search(config);
    config.limit = 0;
    auto uncapped = run_search(config);
    CHECK(capped.a_candidates == uncapped.a_candidates);
    CHECK(capped.a_independent == uncapped.a_independent);
    CHECK(capped.codes_found == uncapped.codes_found);
}

TEST_CASE("the general-position filter only keeps general-position codes") {
    auto plain = config_for(4, 2, 5);
    plain.limit = 0;
    auto unfiltered = run_search(plain);

    auto strict = plain;
    strict.require_general_position = true;
    auto filtered = run_search(strict);

    CHECK(filtered.codes_found <= unfiltered.codes_found);
    CHECK(filtered.a_candidates == unfiltered.a_candidates);
    CHECK(filtered.a_independent == unfiltered.a_independent);
    for (const auto& seed : filtered.emitted) {
        REQUIRE(check_general_position(expand(seed)));
        REQUIRE(check_recovery_symmetric(seed).has_value());
    }
}

TEST_CASE("a (6,3) shard runs against the padded 9-dimensional rotation") {
    auto config = config_for(6, 3, 3);
    config.a_range = {{0, 400}};
    auto report = run_search(config);
    CHECK(report.a_candidates == 400);
    for (const auto& seed : report.emitted) {
        auto verdict = verify(expand(seed));
        REQUIRE(verdict.independent);
        REQUIRE(verdict.recoverable);
    }
}
