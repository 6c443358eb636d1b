#pragma once

// De Bruijn graph simulation over a deterministic Wheeler graph.
//
// A k-mer is addressed by a handle (lo, hi, j): [lo, hi] is the interval of
// vertices it reaches and j its 1-based colex rank among the k-mers reaching
// lo. Lookups, label listing and forward steps work from the per-vertex
// count arrays without ever listing the k-mers.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "kmergraph/count_dp.hpp"
#include "kmergraph/graph.hpp"
#include "kmergraph/lcs.hpp"
#include "kmergraph/oracle.hpp"

namespace kmergraph {

/// left[l][v] / right[l][v]: every vertex reached by the smallest / largest
/// l-mer into v, or empty when inf_v / sup_v is shorter than l. Level 0 is
/// the empty string, which reaches everything.
struct IntervalTables {
    std::vector<std::vector<MaybeInterval>> left;
    std::vector<std::vector<MaybeInterval>> right;
};

IntervalTables compute_intervals(const WheelerGraph& w, const LcsData& lcs, std::size_t k);

/// Offsets of each vertex's in-neighbour list in a flat per-edge array.
std::vector<std::size_t> in_offsets(const WheelerGraph& w);

/// next[l][off(v) + i]: smallest in-neighbour position p > i whose l-mers
/// include one that does not reach u_i, or indeg(v) when there is none.
struct NextPointers {
    std::vector<std::size_t> offsets;
    std::vector<std::vector<std::uint32_t>> next;

    [[nodiscard]] std::uint32_t at(std::size_t level, Vertex v, std::size_t i) const {
        return next[level][offsets[v] + i];
    }
};

NextPointers compute_next_pointers(const WheelerGraph& w, const LcsData& lcs,
                                   const std::vector<LevelCounts>& counts, std::size_t k);

/// f[l][v]: l-mers into v with suffix mu_{l-1}(v); l[l][v] the same for
/// phi_{l-1}(v). Filled for 2 <= l <= k. Every value is at most sigma.
struct FLTables {
    std::vector<std::vector<std::uint64_t>> f;
    std::vector<std::vector<std::uint64_t>> l;
};

FLTables compute_fl(const WheelerGraph& w, const LcsData& lcs, const std::vector<LevelCounts>& counts,
                    std::size_t k);

struct DbgHandle {
    Vertex lo = 0;
    Vertex hi = 0;
    Count j;

    friend bool operator==(const DbgHandle&, const DbgHandle&) = default;
};

struct DbgStats {
    std::size_t q_calls = 0;
    std::size_t q_replays = 0;
};

class DbgData {
public:
    /// Builds all tables for k >= 1. The graph is copied.
    static DbgData build(const WheelerGraph& w, std::size_t k);

    [[nodiscard]] std::size_t k() const { return k_; }
    [[nodiscard]] const WheelerGraph& graph() const { return w_; }
    [[nodiscard]] const LcsData& lcs() const { return lcs_; }
    [[nodiscard]] const Count& count(std::size_t level, Vertex v) const { return counts_[level].c[v]; }
    [[nodiscard]] const IntervalTables& intervals() const { return intervals_; }
    [[nodiscard]] const NextPointers& next() const { return next_; }
    [[nodiscard]] const FLTables& fl() const { return fl_; }
    [[nodiscard]] std::uint64_t f_k(Vertex v) const { return k_ >= 2 ? fl_.f[k_][v] : 0; }
    [[nodiscard]] std::uint64_t l_k(Vertex v) const { return k_ >= 2 ? fl_.l[k_][v] : 0; }
    /// Left-extension counts of the inner (k-1)-mers of v; empty for sinks.
    [[nodiscard]] const std::vector<std::uint64_t>& k_array(Vertex v) const { return k_arrays_[v]; }
    /// Cbar_l(v)[i] for in-neighbour positions 0..indeg(v)-1.
    [[nodiscard]] const Count& cbar(std::size_t level, Vertex v, std::size_t i) const {
        return cbar_[level][next_.offsets[v] + i];
    }
    [[nodiscard]] const DbgStats& stats() const { return stats_; }

    [[nodiscard]] Count num_kmers() const;

    [[nodiscard]] std::optional<DbgHandle> handle_of(const LabelString& kmer) const;
    [[nodiscard]] std::vector<Label> outgoing_labels(const DbgHandle& h) const;
    [[nodiscard]] std::optional<DbgHandle> forward(const DbgHandle& h, Label c) const;
    /// The k-mer a handle stands for, spelled backwards through Cbar.
    [[nodiscard]] LabelString spell(const DbgHandle& h) const;
    /// Position of the handle's k-mer in the global colex order, 0-based.
    [[nodiscard]] Count colex_index(const DbgHandle& h) const;

    /// The node-centric de Bruijn graph with nodes in colex order.
    [[nodiscard]] ExplicitDbg build_explicit(bool with_node_strings = true) const;

private:
    explicit DbgData(WheelerGraph w) : w_(std::move(w)) {}

    const std::vector<std::uint64_t>& q_values(Vertex v, std::size_t level);
    void step(Interval prev, Count j_prev, Interval cur, std::size_t level, Count& j) const;
    [[nodiscard]] LabelString spell_at(Vertex u, Count j, std::size_t level) const;

    WheelerGraph w_;
    std::size_t k_ = 0;
    LcsData lcs_;
    std::vector<LevelCounts> counts_;
    IntervalTables intervals_;
    NextPointers next_;
    FLTables fl_;
    std::vector<std::vector<std::uint64_t>> k_arrays_;
    std::vector<std::vector<std::uint64_t>> k_prefix_;
    std::vector<std::vector<Count>> cbar_;
    std::vector<Count> base_;  // global colex index of the first k-mer of each vertex
    std::map<std::pair<Vertex, std::size_t>, std::vector<std::uint64_t>> memo_;
    DbgStats stats_;
};

}  // namespace kmergraph
