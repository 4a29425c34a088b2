#ifndef MSR_SEARCH_HPP
#define MSR_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "msr/conditions.hpp"

namespace msr {

enum class SearchMode { exhaustive, random };

struct SearchConfig {
    CodeParameters params;
    FieldPtr field;
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t rng_seed = 0;       // random mode only
    std::uint64_t limit = 10;         // max emitted codes, 0 = unlimited
    std::uint64_t max_samples = 0;    // random mode: A samples to draw, 0 = run until limit
    bool require_general_position = false;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> a_range;  // [begin, end) subrange

    void validate() const;
};

/**
 * Aggregated counters of one search run.
 *
 * a_candidates counts canonical base matrices visited, a_independent those
 * passing the symmetric independence check, a_recoverable those that
 * produced at least one working code.  y_candidates counts complement
 * subspaces tested across all independent bases, y_nullity_aborts the
 * helper events where a nullspace came up empty, and codes_found the Y
 * candidates that produced at least one working transmission assignment
 * (so codes_found <= y_candidates by construction).
 *
 * independence_fraction = a_independent / a_candidates.
 * recovery_fraction     = codes_found / y_candidates.
 */
struct SearchReport {
    CodeParameters params;
    FieldPtr field;
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t rng_seed = 0;

    std::uint64_t a_candidates = 0;
    std::uint64_t a_independent = 0;
    std::uint64_t a_recoverable = 0;
    std::uint64_t y_candidates = 0;
    std::uint64_t y_nullity_aborts = 0;
    std::uint64_t codes_found = 0;
    double elapsed_seconds = 0.0;
    std::vector<SymmetricSeed> emitted;

    Rational independence_fraction() const {
        return a_candidates ? Rational(static_cast<long long>(a_independent),
                                       static_cast<long long>(a_candidates))
                            : Rational(0);
    }
    Rational recovery_fraction() const {
        return y_candidates ? Rational(static_cast<long long>(codes_found),
                                       static_cast<long long>(y_candidates))
                            : Rational(0);
    }
};

/**
 * The search: iterate canonical (RREF) base matrices — one per row-transform
 * equivalence class — expand each through the canonical rotation, test
 * independence first, then sweep complement subspaces Y, derive candidate
 * transmission vectors from helper nullspaces, and keep every assignment
 * that satisfies the recovery condition.
 *
 * Exhaustive mode visits the whole (or configured) index range in order;
 * random mode draws base indices and one Y index per independent base from
 * a seeded generator.  Identical configs produce identical reports.
 */
SearchReport run_search(const SearchConfig& config);

/// Splits the canonical enumeration range into `parts` contiguous chunks
/// (sizes differ by at most one, larger chunks first).
std::vector<SearchConfig> shard(const SearchConfig& config, int parts);

/// Component-wise sum of shard reports; emissions concatenate in shard
/// order.  Reports must agree on params, field, and mode.
SearchReport merge_reports(const std::vector<SearchReport>& reports);

/// Orchestrates `threads` shards on worker threads and merges the results.
SearchReport run_search_parallel(const SearchConfig& config, int threads);

}  // namespace msr

#endif
