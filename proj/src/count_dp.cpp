#include "kmergraph/count_dp.hpp"

namespace kmergraph {

LevelCounts next_level(const WheelerGraph& w, const LcsData& lcs, const LevelCounts& prev) {
    const std::size_t n = w.num_vertices();
    const std::size_t below = prev.level;
    LevelCounts cur{prev.level + 1, std::vector<Count>(n, 0)};
    for (Vertex v = 0; v < n; ++v) {
        const auto preds = w.preds(v);
        Count sum = 0;
        for (std::size_t i = 0; i < preds.size(); ++i) {
            sum += prev.c[preds[i]];
            if (i > 0 && lcs.share(below, preds[i - 1], preds[i])) sum -= 1;
        }
        cur.c[v] = std::move(sum);
    }
    return cur;
}

Count total_distinct(const LcsData& lcs, const LevelCounts& counts) {
    Count total = 0;
    for (std::size_t v = 0; v < counts.c.size(); ++v) {
        total += counts.c[v];
        if (v > 0 && lcs.share(counts.level, static_cast<Vertex>(v - 1), static_cast<Vertex>(v)))
            total -= 1;
    }
    return total;
}

DpResult count_kmers_dp(const WheelerGraph& w, const LcsData& lcs, std::size_t k) {
    DpResult out;
    out.per_vertex = LevelCounts{0, std::vector<Count>(w.num_vertices(), 1)};
    for (std::size_t level = 1; level <= k; ++level) {
        out.per_vertex = next_level(w, lcs, out.per_vertex);
        ++out.levels_iterated;
    }
    out.total = total_distinct(lcs, out.per_vertex);
    return out;
}

DpResult count_kmers_dp(const WheelerGraph& w, std::size_t k) { return count_kmers_dp(w, compute_levels(w, k), k); }

std::vector<LevelCounts> all_level_counts(const WheelerGraph& w, const LcsData& lcs, std::size_t k) {
    std::vector<LevelCounts> out;
    out.reserve(k + 1);
    out.push_back(LevelCounts{0, std::vector<Count>(w.num_vertices(), 1)});
    for (std::size_t level = 1; level <= k; ++level) out.push_back(next_level(w, lcs, out.back()));
    return out;
}

}  // namespace kmergraph
