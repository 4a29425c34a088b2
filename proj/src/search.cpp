#include "msr/search.hpp"

#include <chrono>
#include <random>
#include <thread>

namespace msr {

void SearchConfig::validate() const {
    CodeParameters::make(params.n, params.k);
    if (!field) throw ConfigError("search config has no field");
    if (mode == SearchMode::random && limit == 0 && max_samples == 0)
        throw ConfigError("random mode needs a code limit or a sample budget to terminate");
    if (a_range && a_range->first > a_range->second)
        throw ConfigError("a_range begin exceeds end");
}

namespace {

struct Driver {
    const SearchConfig& config;
    SearchReport& rep;
    FieldMatrix rotation;

    // Visits one canonical base matrix; when y_draw is set, only the single
    // index y_draw mod |Y| is tested (random mode), otherwise the whole Y
    // enumeration.
    void visit(const FieldMatrix& base, std::optional<std::uint64_t> y_draw) {
        ++rep.a_candidates;
        const int n = config.params.n;

        std::vector<FieldMatrix> storage;  // node i stores base * R^i
        storage.reserve(static_cast<std::size_t>(n));
        storage.push_back(base);
        for (int i = 1; i < n; ++i) storage.push_back(storage.back() * rotation);

        SymmetricSeed probe;
        probe.params = config.params;
        probe.field = config.field;
        probe.base = base;
        probe.rotation = rotation;
        if (!check_independence_symmetric(probe).ok) return;
        ++rep.a_independent;

        YSubspaceEnumerator yenum(base, config.params);
        std::uint64_t y_begin = 0, y_end = yenum.size();
        if (y_draw) {
            y_begin = *y_draw % yenum.size();
            y_end = y_begin + 1;
        }

        bool base_found = false;
        for (std::uint64_t yi = y_begin; yi < y_end; ++yi) {
            ++rep.y_candidates;
            const FieldMatrix y = yenum.at(yi);
            const auto bases = derive_b_candidates(storage, y, 0);
            if (!bases) {
                ++rep.y_nullity_aborts;
                continue;
            }
            std::vector<std::vector<FieldMatrix>> candidates;
            candidates.reserve(bases->size());
            for (const auto& basis : *bases) candidates.push_back(projective_representatives(basis));

            bool y_found = false;
            std::vector<std::size_t> pick(candidates.size(), 0);
            bool more = !candidates.empty();
            while (more) {
                std::vector<FieldMatrix> rows;
                rows.reserve(candidates.size());
                for (std::size_t t = 0; t < candidates.size(); ++t)
                    rows.push_back(candidates[t][pick[t]] * storage[t + 1]);
                if (solve_left(base, vstack(rows))) {
                    SymmetricSeed seed = probe;
                    for (std::size_t t = 0; t < candidates.size(); ++t)
                        seed.b.push_back(candidates[t][pick[t]]);
                    const bool accept = !config.require_general_position ||
                                        check_general_position(expand(seed));
                    if (accept) {
                        if (!y_found) {
                            y_found = true;
                            base_found = true;
                            ++rep.codes_found;
                        }
                        if (config.limit == 0 || rep.emitted.size() < config.limit)
                            rep.emitted.push_back(std::move(seed));
                    }
                }
                more = false;
                for (std::size_t t = candidates.size(); t-- > 0;) {
                    if (++pick[t] < candidates[t].size()) {
                        more = true;
                        break;
                    }
                    pick[t] = 0;
                }
            }
        }
        if (base_found) ++rep.a_recoverable;
    }
};

}  // namespace

SearchReport run_search(const SearchConfig& config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();

    SearchReport rep;
    rep.params = config.params;
    rep.field = config.field;
    rep.mode = config.mode;
    rep.rng_seed = config.rng_seed;

    Driver driver{config, rep, rotation_matrix(config.field, config.params)};
    RrefEnumerator aenum(config.field, config.params.alpha(), config.params.total_cols());

    std::uint64_t begin = 0, end = aenum.size();
    if (config.a_range) {
        begin = config.a_range->first;
        end = config.a_range->second;
        if (end > aenum.size()) throw ConfigError("a_range exceeds enumeration bounds");
    }

    if (config.mode == SearchMode::exhaustive) {
        for (std::uint64_t i = begin; i < end; ++i) driver.visit(aenum.at(i), std::nullopt);
    } else {
        std::mt19937_64 rng(config.rng_seed);
        const std::uint64_t span = end - begin;
        if (span == 0) throw ConfigError("empty a_range in random mode");
        std::uint64_t samples = 0;
        while (true) {
            if (config.max_samples && samples >= config.max_samples) break;
            if (config.max_samples == 0 && config.limit && rep.emitted.size() >= config.limit) break;
            ++samples;
            const std::uint64_t aidx = begin + rng() % span;
            // Draw the Y index up front so the stream is consumed even when
            // independence fails, keeping replays aligned with the seed.
            const std::uint64_t ydraw = rng();
            driver.visit(aenum.at(aidx), ydraw);
        }
    }

    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::vector<SearchConfig> shard(const SearchConfig& config, int parts) {
    config.validate();
    if (parts < 1) throw ConfigError("shard count must be >= 1");
    if (config.mode != SearchMode::exhaustive) throw ConfigError("only exhaustive searches shard");

    RrefEnumerator aenum(config.field, config.params.alpha(), config.params.total_cols());
    std::uint64_t begin = config.a_range ? config.a_range->first : 0;
    std::uint64_t end = config.a_range ? config.a_range->second : aenum.size();
    if (end > aenum.size()) throw ConfigError("a_range exceeds enumeration bounds");

    const std::uint64_t total = end - begin;
    const std::uint64_t chunk = total / static_cast<std::uint64_t>(parts);
    const std::uint64_t rem = total % static_cast<std::uint64_t>(parts);
    std::vector<SearchConfig> out;
    out.reserve(static_cast<std::size_t>(parts));
    std::uint64_t at = begin;
    for (int i = 0; i < parts; ++i) {
        const std::uint64_t size = chunk + (static_cast<std::uint64_t>(i) < rem ? 1 : 0);
        SearchConfig c = config;
        c.a_range = {at, at + size};
        at += size;
        out.push_back(std::move(c));
    }
    return out;
}

SearchReport merge_reports(const std::vector<SearchReport>& reports) {
    if (reports.empty()) throw ConfigError("nothing to merge");
    SearchReport out = reports.front();
    for (std::size_t i = 1; i < reports.size(); ++i) {
        const SearchReport& r = reports[i];
        if (r.params != out.params || !same_field(r.field, out.field) || r.mode != out.mode)
            throw ConfigError("cannot merge reports from mixed configurations");
        out.a_candidates += r.a_candidates;
        out.a_independent += r.a_independent;
        out.a_recoverable += r.a_recoverable;
        out.y_candidates += r.y_candidates;
        out.y_nullity_aborts += r.y_nullity_aborts;
        out.codes_found += r.codes_found;
        out.elapsed_seconds = std::max(out.elapsed_seconds, r.elapsed_seconds);
        out.emitted.insert(out.emitted.end(), r.emitted.begin(), r.emitted.end());
    }
    return out;
}

SearchReport run_search_parallel(const SearchConfig& config, int threads) {
    if (threads <= 1 || config.mode != SearchMode::exhaustive) return run_search(config);
    const auto configs = shard(config, threads);
    std::vector<SearchReport> reports(configs.size());
    std::vector<std::thread> workers;
    workers.reserve(configs.size());
    for (std::size_t i = 0; i < configs.size(); ++i)
        workers.emplace_back([&, i] { reports[i] = run_search(configs[i]); });
    for (auto& w : workers) w.join();
    SearchReport merged = merge_reports(reports);
    // Each shard respects the cap on its own, so the concatenation can
    // overshoot it; counters are unaffected by trimming.
    if (config.limit != 0 && merged.emitted.size() > config.limit)
        merged.emitted.resize(config.limit);
    return merged;
}

}  // namespace msr
