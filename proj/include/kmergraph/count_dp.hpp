#pragma once

#include <vector>

#include "kmergraph/graph.hpp"
#include "kmergraph/lcs.hpp"

namespace kmergraph {

/// C_l(v), the number of distinct l-mers reaching each vertex, at one level.
struct LevelCounts {
    std::size_t level = 0;
    std::vector<Count> c;
};

struct DpResult {
    Count total;
    LevelCounts per_vertex;
    std::size_t levels_iterated = 0;
};

/// Distinct k-mers of a deterministic Wheeler graph in O(|W| k).
DpResult count_kmers_dp(const WheelerGraph& w, std::size_t k);
DpResult count_kmers_dp(const WheelerGraph& w, const LcsData& lcs, std::size_t k);

/// Advances C_{l-1} to C_l over the sorted in-neighbour lists.
LevelCounts next_level(const WheelerGraph& w, const LcsData& lcs, const LevelCounts& prev);

/// Counts for every level 0..k, as the de Bruijn simulation needs them.
std::vector<LevelCounts> all_level_counts(const WheelerGraph& w, const LcsData& lcs, std::size_t k);

/// Distinct l-mers overall: per-vertex counts minus the one l-mer each
/// adjacent sharing pair has in common.
Count total_distinct(const LcsData& lcs, const LevelCounts& counts);

}  // namespace kmergraph
