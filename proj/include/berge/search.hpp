#pragma once

#include <berge/family.hpp>
#include <berge/hypergraph.hpp>

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace berge {

enum class SearchStatus { exact, lower_bound_only, timeout };

std::string_view to_string(SearchStatus s);
SearchStatus parse_search_status(std::string_view text);

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t containment_prunes = 0;
    std::uint64_t bound_prunes = 0;
    std::uint64_t isomorphism_prunes = 0;
    double wall_seconds = 0.0;

    friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct SearchOptions {
    int workers = 1;
    std::optional<double> time_limit_seconds;
    bool symmetry_fixing = true;
    /// Skips nodes that a vertex transposition or a degree-sorting relabeling
    /// maps to a lexicographically smaller edge list.
    bool isomorphism_pruning = false;
    std::optional<Hypergraph> seed;
    int split_depth = 3;

    // local_lower_bound only
    std::uint64_t rng_seed = 20240601;
    int iterations = 2000;
};

struct SearchOutcome {
    std::int64_t value = 0;
    SearchStatus status = SearchStatus::exact;
    std::optional<Hypergraph> witness;
    SearchStats stats;
    bool connected = false;  // the search was restricted to connected hypergraphs
    bool infeasible = false; // no connected Berge-F-free hypergraph was found
    std::vector<std::int64_t> history; // best value after each local-search iteration
};

/// ex_r(n, Berge-F) by canonical-order depth-first search. Throws
/// BadParameters unless 2 <= r <= n <= max_vertices, workers >= 1, and any
/// seed is an n-vertex r-graph free of Berge-F.
SearchOutcome turan_exact(int n, int r, const FamilySpec& f, const SearchOptions& opts = {});

/// ex^con_r(n, Berge-F). Value 0 with infeasible = true when no connected
/// free hypergraph exists.
SearchOutcome turan_connected(int n, int r, const FamilySpec& f, const SearchOptions& opts = {});

/// Randomized greedy construction followed by drop-and-refill hill climbing.
/// Status is always lower_bound_only; history is nondecreasing.
SearchOutcome local_lower_bound(int n, int r, const FamilySpec& f, const SearchOptions& opts = {});

} // namespace berge
